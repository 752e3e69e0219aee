#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "thetarep/rootsys.hpp"

using namespace thetarep;
using namespace thetarep::rootsys;

namespace {

// Independent count of norm-2 vectors in the standard even-coordinate model
// of the rank-8 even unimodular lattice: Z^8 union (Z+1/2)^8 with even
// coordinate sum. Works in doubled coordinates to stay integral.
std::size_t norm2_vector_count_rank8() {
    std::set<std::array<int, 8>> found;
    // integer vectors of norm 2: two entries +-1, rest 0
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int si : {-1, 1})
                for (int sj : {-1, 1}) {
                    std::array<int, 8> v{};
                    v[i] = 2 * si;  // doubled
                    v[j] = 2 * sj;
                    found.insert(v);
                }
    // half-integer vectors: all entries +-1/2, coordinate sum even
    for (int mask = 0; mask < 256; ++mask) {
        std::array<int, 8> v{};
        int sum2 = 0;  // doubled coordinate sum
        for (int k = 0; k < 8; ++k) {
            v[k] = (mask >> k & 1) ? -1 : 1;
            sum2 += v[k];
        }
        if (sum2 % 4 == 0) found.insert(v);  // sum = sum2/2 must be even
    }
    // every candidate above has norm exactly 2; just count
    return found.size();
}

long vec_norm(const exactla::IntMatrix& gram, const RootVec& v) {
    exactla::Int n(0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) n += gram.at(i, j) * v[i] * v[j];
    return n.get_si();
}

RootVec apply_mat(const exactla::IntMatrix& m, const RootVec& v) {
    RootVec w(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        exactla::Int acc(0);
        for (std::size_t j = 0; j < v.size(); ++j) acc += m.at(i, j) * v[j];
        w[i] = static_cast<int>(acc.get_si());
    }
    return w;
}

std::vector<std::string> all_supported_labels() {
    std::vector<std::string> out;
    for (int n = 1; n <= 9; ++n) out.push_back("A" + std::to_string(n));
    for (int n = 3; n <= 8; ++n) out.push_back("D" + std::to_string(n));
    for (int n = 6; n <= 8; ++n) out.push_back("E" + std::to_string(n));
    return out;
}

}  // namespace

TEST_CASE("label parsing") {
    CHECK(parse_label("A1") == Label{'A', 1});
    CHECK(parse_label("A12") == Label{'A', 12});
    CHECK(parse_label("D3") == Label{'D', 3});
    CHECK(parse_label("E8") == Label{'E', 8});
    CHECK(parse_label("E8").to_string() == "E8");

    for (const char* bad : {"A0", "D2", "D1", "E5", "E9", "B3", "", "A", "Ax", "A-1", "8E"})
        CHECK_THROWS_AS(parse_label(bad), std::invalid_argument);
}

TEST_CASE("root counts match classical formulas") {
    CHECK(build("A1").roots.size() == 2);
    CHECK(build("A2").roots.size() == 6);
    for (int n = 1; n <= 7; ++n)
        CHECK(build("A" + std::to_string(n)).roots.size() ==
              static_cast<std::size_t>(n * (n + 1)));
    for (int n = 3; n <= 7; ++n)
        CHECK(build("D" + std::to_string(n)).roots.size() ==
              static_cast<std::size_t>(2 * n * (n - 1)));
    CHECK(build("E6").roots.size() == 72);
    CHECK(build("E7").roots.size() == 126);
}

TEST_CASE("rank-8 E-type root count matches lattice oracle") {
    std::size_t oracle = norm2_vector_count_rank8();
    CHECK(oracle == 240);
    CHECK(build("E8").roots.size() == oracle);
}

TEST_CASE("structural invariants of the built systems") {
    for (const char* lbl : {"A3", "D4", "D5", "E6"}) {
        RootSystem rs = build(lbl);
        INFO(lbl);

        CHECK(rs.cartan == rs.cartan.transposed());
        for (std::size_t i = 0; i < rs.rank(); ++i) CHECK(rs.cartan.at(i, i) == 2);

        std::set<RootVec> rset(rs.roots.begin(), rs.roots.end());
        for (const RootVec& v : rs.roots) {
            CHECK(vec_norm(rs.cartan, v) == 2);
            RootVec neg = v;
            for (int& c : neg) c = -c;
            CHECK(rset.count(neg) == 1);
        }

        for (const auto& s : rs.weyl_gens) {
            CHECK(s * s == exactla::IntMatrix::identity(rs.rank()));
            std::set<RootVec> image;
            for (const RootVec& v : rs.roots) image.insert(apply_mat(s, v));
            CHECK(image == rset);
        }
    }
}

TEST_CASE("highest root and heights") {
    CHECK(height(highest_root(build("A2"))) == 2);
    CHECK(height(highest_root(build("D5"))) == 7);
    CHECK(height(highest_root(build("E8"))) == 29);

    for (const char* lbl : {"A4", "D4", "E6"}) {
        RootSystem rs = build(lbl);
        INFO(lbl);
        RootVec top = highest_root(rs);
        for (const RootVec& v : positive_roots(rs))
            for (std::size_t j = 0; j < top.size(); ++j) CHECK(v[j] <= top[j]);

        HeightTable t = height_table(rs);
        CHECK(t.counts.size() == static_cast<std::size_t>(coxeter_number(rs)) - 1);
        CHECK(t.counts[0] == rs.rank());
        for (std::size_t h = 1; h < t.counts.size(); ++h) {
            CHECK(t.counts[h] <= t.counts[h - 1]);
            CHECK(t.counts[h] >= 1);
        }
        std::size_t total = 0;
        for (std::size_t c : t.counts) total += c;
        CHECK(total == rs.num_positive());
    }
}

TEST_CASE("exponents and invariant degrees") {
    CHECK(invariant_degrees(build("A4")) == std::vector<int>{2, 3, 4, 5});
    CHECK(invariant_degrees(build("D4")) == std::vector<int>{2, 4, 4, 6});
    CHECK(invariant_degrees(build("E8")) ==
          std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30});

    CHECK(exponents(build("D4")) == std::vector<int>{1, 3, 3, 5});

    // product of degrees is the Weyl group order
    CHECK(weyl_order(build("A2")) == 6);
    CHECK(weyl_order(build("D4")) == 192);
    CHECK(weyl_order(build("E6")) == 51840);
    CHECK(weyl_order(build("E8")) == 696729600);

    // exponents pair up as m and h-m
    for (const std::string& lbl : all_supported_labels()) {
        RootSystem rs = build(lbl);
        INFO(lbl);
        std::vector<int> exp = exponents(rs);
        int h = coxeter_number(rs);
        for (std::size_t i = 0; i < exp.size(); ++i)
            CHECK(exp[i] + exp[exp.size() - 1 - i] == h);
    }
}

TEST_CASE("representation dimension count") {
    CHECK(dim_v(build("A2")) == 5);
    CHECK(dim_v(build("D4")) == 16);
    CHECK(dim_v(build("E8")) == 128);

    for (const std::string& lbl : all_supported_labels()) {
        RootSystem rs = build(lbl);
        INFO(lbl);
        std::size_t sum = 0;
        for (int d : invariant_degrees(rs)) sum += static_cast<std::size_t>(d);
        CHECK(sum == dim_v(rs));
    }
}

TEST_CASE("longest element and -1 test") {
    CHECK(minus_one_in_weyl(build("A1")));
    CHECK_FALSE(minus_one_in_weyl(build("A2")));
    CHECK_FALSE(minus_one_in_weyl(build("A4")));
    CHECK(minus_one_in_weyl(build("D4")));
    CHECK_FALSE(minus_one_in_weyl(build("D5")));
    CHECK(minus_one_in_weyl(build("D6")));
    CHECK_FALSE(minus_one_in_weyl(build("E6")));
    CHECK(minus_one_in_weyl(build("E7")));
    CHECK(minus_one_in_weyl(build("E8")));

    for (const std::string& lbl : all_supported_labels()) {
        RootSystem rs = build(lbl);
        INFO(lbl);
        LongestElement w = longest_element(rs);
        CHECK(w.length == rs.num_positive());
        // longest element is an involution permuting the root set
        CHECK(w.matrix * w.matrix == exactla::IntMatrix::identity(rs.rank()));
        std::set<RootVec> rset(rs.roots.begin(), rs.roots.end());
        std::set<RootVec> image;
        for (const RootVec& v : rs.roots) image.insert(apply_mat(w.matrix, v));
        CHECK(image == rset);
        // and it sends every positive root to a negative one
        for (const RootVec& v : positive_roots(rs)) CHECK_FALSE(is_positive(apply_mat(w.matrix, v)));
    }
}
