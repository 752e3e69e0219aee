#include <catch2/catch_amalgamated.hpp>

#include "thetarep/mod2.hpp"

using namespace thetarep;
using namespace thetarep::mod2;
using exactla::F2Matrix;
using exactla::F2Vec;

namespace {

std::vector<std::string> sweep_labels() {
    std::vector<std::string> out;
    for (int n = 2; n <= 9; ++n) out.push_back("A" + std::to_string(n));
    for (int n = 3; n <= 8; ++n) out.push_back("D" + std::to_string(n));
    for (int n = 6; n <= 8; ++n) out.push_back("E" + std::to_string(n));
    return out;
}

F2Vec unit(std::size_t dim, std::size_t i) {
    F2Vec v(dim, false);
    v[i] = true;
    return v;
}

}  // namespace

TEST_CASE("lattice image dimensions") {
    CHECK(n_lattice(rootsys::build("A2")).dim == 2);
    CHECK(n_lattice(rootsys::build("D4")).dim == 2);
    CHECK(n_lattice(rootsys::build("E8")).dim == 8);
    // #N = 2^dim
    CHECK((std::size_t(1) << n_lattice(rootsys::build("A2")).dim) == 4);
    CHECK((std::size_t(1) << n_lattice(rootsys::build("E8")).dim) == 256);

    CHECK_THROWS_AS(n_lattice(rootsys::build("A1")), std::invalid_argument);
    CHECK_NOTHROW(n_lattice(rootsys::build("A1"), /*allow_a1=*/true));
}

TEST_CASE("pairing and generator structure") {
    for (const std::string& lbl : sweep_labels()) {
        INFO(lbl);
        Mod2Module n = n_lattice(rootsys::build(lbl));
        CHECK(n.dim % 2 == 0);
        CHECK(exactla::f2_rank(n.pairing) == n.dim);
        CHECK(n.pairing == n.pairing.transposed());
        for (const F2Matrix& g : n.gens) {
            CHECK(g * g == F2Matrix::identity(n.dim));
            // generators preserve the induced form
            CHECK(g.transposed() * n.pairing * g == n.pairing);
        }
    }
}

TEST_CASE("projection is equivariant") {
    for (const char* lbl : {"A3", "D4", "D5", "E6"}) {
        INFO(lbl);
        rootsys::RootSystem rs = rootsys::build(std::string(lbl));
        Mod2Module n = n_lattice(rs);
        std::size_t r = rs.rank();
        for (std::size_t g = 0; g < r; ++g) {
            F2Matrix refl = F2Matrix::from_int_mod2(rs.weyl_gens[g]);
            for (std::size_t i = 0; i < r; ++i) {
                F2Vec v = unit(r, i);
                F2Vec lhs = n.proj(exactla::f2_mul_vec(refl, v));
                F2Vec rhs = exactla::f2_mul_vec(n.gens[g], n.proj(v));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("no nonzero invariant vectors in the ambient dual") {
    CHECK(check_no_invariants(n_lattice(rootsys::build("A2"))));
    CHECK(check_no_invariants(n_lattice(rootsys::build("E7"))));
    for (const std::string& lbl : sweep_labels())
        CHECK(check_no_invariants(n_lattice(rootsys::build(lbl))));
    // rank 1 is exactly the excluded degenerate case
    CHECK_FALSE(check_no_invariants(n_lattice(rootsys::build("A1"), true)));
}

TEST_CASE("absolute irreducibility of the lattice image") {
    CHECK(check_absolutely_irreducible(n_lattice(rootsys::build("A2"))));
    CHECK(check_absolutely_irreducible(n_lattice(rootsys::build("D5"))));
    CHECK(check_absolutely_irreducible(n_lattice(rootsys::build("E8"))));
    for (const std::string& lbl : sweep_labels())
        CHECK(check_absolutely_irreducible(n_lattice(rootsys::build(lbl))));
}

TEST_CASE("anisotropic reflection word") {
    Mod2Module a2 = n_lattice(rootsys::build("A2"));
    AnisotropicElement w = anisotropic_element(a2);
    CHECK(w.word == std::vector<std::size_t>{0, 1});
    CHECK(exactla::f2_rank(w.matrix + F2Matrix::identity(2)) == 2);

    Mod2Module d4 = n_lattice(rootsys::build("D4"));
    CHECK(anisotropic_element(d4).word.size() == 2);

    Mod2Module e8 = n_lattice(rootsys::build("E8"));
    AnisotropicElement cox = anisotropic_element(e8);
    CHECK(cox.word.size() == 8);
    CHECK(exactla::f2_rank(cox.matrix + F2Matrix::identity(8)) == 8);

    for (const std::string& lbl : sweep_labels()) {
        INFO(lbl);
        Mod2Module n = n_lattice(rootsys::build(lbl));
        AnisotropicElement aw = anisotropic_element(n);
        CHECK(aw.word.size() == n.dim);
        CHECK(exactla::f2_rank(aw.matrix + F2Matrix::identity(n.dim)) == n.dim);
    }
}

TEST_CASE("component groups and marked points") {
    ComponentGroup a2 = component_group(rootsys::build("A2"));
    CHECK(a2.m == 1);
    CHECK(a2.pi0_order == 1);
    CHECK(a2.structure == "1");

    ComponentGroup a3 = component_group(rootsys::build("A3"));
    CHECK(a3.m == 2);
    CHECK(a3.structure == "Z/2");

    ComponentGroup d4 = component_group(rootsys::build("D4"));
    CHECK(d4.m == 3);
    CHECK(d4.pi0_order == 4);
    CHECK(d4.structure == "(Z/2)^2");
    CHECK(d4.divisors == std::vector<exactla::Int>{1, 1, 2, 2});

    ComponentGroup d5 = component_group(rootsys::build("D5"));
    CHECK(d5.m == 2);
    CHECK(d5.divisors == std::vector<exactla::Int>{1, 1, 1, 1, 4});

    ComponentGroup e7 = component_group(rootsys::build("E7"));
    CHECK(e7.m == 2);
    CHECK(e7.pi0_order == 2);
    CHECK(e7.structure == "Z/2");

    CHECK(component_group(rootsys::build("E6")).m == 1);
    CHECK(component_group(rootsys::build("E8")).m == 1);

    // the family pattern: m = 1 for even-rank A and E6/E8, 2 for odd-rank A,
    // odd-rank D and E7, 3 for even-rank D
    for (int n = 2; n <= 9; ++n)
        CHECK(component_group(rootsys::build("A" + std::to_string(n))).m ==
              (n % 2 == 0 ? 1 : 2));
    for (int n = 4; n <= 8; ++n)
        CHECK(component_group(rootsys::build("D" + std::to_string(n))).m ==
              (n % 2 == 0 ? 3 : 2));

    for (const std::string& lbl : sweep_labels()) {
        ComponentGroup cg = component_group(rootsys::build(lbl));
        CHECK(cg.pi0_order == exactla::Int(1) << (cg.m - 1));
    }
}

TEST_CASE("genus") {
    CHECK(genus(rootsys::build("A4")) == 2);
    CHECK(genus(rootsys::build("D4")) == 1);
    CHECK(genus(rootsys::build("E7")) == 3);
    CHECK(genus(rootsys::build("E6")) == 3);
    CHECK(genus(rootsys::build("E8")) == 4);

    // even-rank A_n = A_{2g}: full-rank Gram matrix mod 2, so g = n/2
    for (int g = 1; g <= 4; ++g)
        CHECK(genus(rootsys::build("A" + std::to_string(2 * g))) == static_cast<std::size_t>(g));

    for (const std::string& lbl : sweep_labels())
        CHECK(2 * genus(rootsys::build(lbl)) == n_lattice(rootsys::build(lbl)).dim);
}

TEST_CASE("roots project to nonzero classes") {
    CHECK(roots_nonzero_in_n(rootsys::build("A2")));
    CHECK(roots_nonzero_in_n(rootsys::build("E6")));
    for (const std::string& lbl : sweep_labels()) CHECK(roots_nonzero_in_n(rootsys::build(lbl)));
}

TEST_CASE("constants derived from the marked-point count") {
    DerivedConstants a2 = derived_constants(rootsys::build("A2"));
    CHECK(a2.tamagawa_number == 2);
    CHECK(a2.average_selmer_bound == 3);
    CHECK(a2.fundamental_group_order == 2);

    DerivedConstants d4 = derived_constants(rootsys::build("D4"));
    CHECK(d4.tamagawa_number == 8);
    CHECK(d4.average_selmer_bound == 12);
    CHECK(d4.fundamental_group_order == 8);

    DerivedConstants e7 = derived_constants(rootsys::build("E7"));
    CHECK(e7.tamagawa_number == 4);
    CHECK(e7.average_selmer_bound == 6);
    CHECK(e7.fundamental_group_order == 4);
}
