#pragma once

// Mod-2 shadow of a root lattice L: the image N of L/2L inside the dual
// L∨/2L∨ under the Gram pairing, with its Weyl action, induced bilinear
// form, component-group arithmetic and derived counts.

#include <stdexcept>
#include <string>
#include <vector>

#include "thetarep/exactla/f2.hpp"
#include "thetarep/exactla/snf.hpp"
#include "thetarep/rootsys.hpp"

namespace thetarep::mod2 {

using exactla::F2Matrix;
using exactla::F2Vec;
using exactla::Int;

struct Mod2Module {
    rootsys::Label label;
    std::size_t ambient_dim = 0;          // rank of the lattice
    std::size_t dim = 0;                  // F2-dimension of N
    F2Matrix basis;                       // dim x ambient, rows = basis of N (rref)
    std::vector<std::size_t> pivot_cols;  // pivot columns of the basis rows
    std::vector<F2Matrix> dual_gens;      // simple reflections on L∨/2L∨ (transposed gens)
    std::vector<F2Matrix> gens;           // the same, restricted to N (dim x dim)
    F2Matrix pairing;                     // Gram matrix of the induced form on N
    F2Matrix proj_matrix;                 // dim x ambient: L/2L -> coordinates on N

    F2Vec proj(const F2Vec& v) const { return exactla::f2_mul_vec(proj_matrix, v); }
};

namespace detail {

// coordinates of an ambient vector lying in the row span of a rref basis
inline F2Vec coords_on(const F2Matrix& basis, const std::vector<std::size_t>& pivots,
                       const F2Vec& v) {
    F2Vec x(basis.rows(), false);
    F2Vec residue = v;
    for (std::size_t j = 0; j < pivots.size(); ++j) {
        if (!residue[pivots[j]]) continue;
        x[j] = true;
        for (std::size_t c = 0; c < basis.cols(); ++c)
            if (basis.get(j, c)) residue[c] = !residue[c];
    }
    for (bool b : residue)
        if (b) throw std::logic_error("vector does not lie in the lattice image");
    return x;
}

}  // namespace detail

// The A1 lattice maps to zero in its dual mod 2; every downstream statement
// breaks there, so it is rejected unless the caller explicitly opts in.
inline Mod2Module n_lattice(const rootsys::RootSystem& rs, bool allow_a1 = false) {
    if (!allow_a1 && rs.label == rootsys::Label{'A', 1})
        throw std::invalid_argument("type A1 is outside the supported monodromy range");

    Mod2Module n;
    n.label = rs.label;
    n.ambient_dim = rs.rank();
    std::size_t r = n.ambient_dim;

    F2Matrix c2 = F2Matrix::from_int_mod2(rs.cartan);
    F2Matrix span = c2.transposed();  // rows = columns of the Gram matrix
    std::vector<std::size_t> pivots = span.rref();
    n.dim = pivots.size();
    n.pivot_cols = pivots;
    n.basis = F2Matrix(n.dim, r);
    for (std::size_t i = 0; i < n.dim; ++i)
        for (std::size_t j = 0; j < r; ++j) n.basis.set(i, j, span.get(i, j));

    n.proj_matrix = F2Matrix(n.dim, r);
    for (std::size_t i = 0; i < n.dim; ++i)
        for (std::size_t j = 0; j < r; ++j) n.proj_matrix.set(i, j, c2.get(pivots[i], j));

    for (std::size_t g = 0; g < r; ++g) {
        F2Matrix dual = F2Matrix::from_int_mod2(rs.weyl_gens[g].transposed());
        F2Matrix restricted(n.dim, n.dim);
        for (std::size_t k = 0; k < n.dim; ++k) {
            F2Vec b(r, false);
            for (std::size_t j = 0; j < r; ++j) b[j] = n.basis.get(k, j);
            F2Vec image = exactla::f2_mul_vec(dual, b);
            F2Vec x = detail::coords_on(n.basis, n.pivot_cols, image);
            for (std::size_t j = 0; j < n.dim; ++j) restricted.set(j, k, x[j]);
        }
        n.dual_gens.push_back(std::move(dual));
        n.gens.push_back(std::move(restricted));
    }

    // induced form: pair a preimage of one basis vector against the other;
    // well defined because the Gram matrix is symmetric
    n.pairing = F2Matrix(n.dim, n.dim);
    for (std::size_t k = 0; k < n.dim; ++k) {
        F2Vec bk(r, false);
        for (std::size_t j = 0; j < r; ++j) bk[j] = n.basis.get(k, j);
        F2Vec pk;
        if (!exactla::f2_solve(c2, bk, pk))
            throw std::logic_error("basis vector has no preimage under the Gram map");
        for (std::size_t l = 0; l < n.dim; ++l) {
            bool val = false;
            for (std::size_t j = 0; j < r; ++j)
                if (pk[j] && n.basis.get(l, j)) val = !val;
            n.pairing.set(k, l, val);
        }
    }
    if (exactla::f2_rank(n.pairing) != n.dim)
        throw std::logic_error("induced pairing is degenerate");
    return n;
}

// True iff no nonzero vector of the ambient dual space is fixed by every
// simple reflection: the stacked kernels of (g - 1) intersect trivially.
inline bool check_no_invariants(const Mod2Module& n) {
    std::size_t r = n.ambient_dim;
    F2Matrix stacked(r * n.dual_gens.size(), r);
    for (std::size_t g = 0; g < n.dual_gens.size(); ++g) {
        F2Matrix diff = n.dual_gens[g] + F2Matrix::identity(r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) stacked.set(g * r + i, j, diff.get(i, j));
    }
    return exactla::f2_nullspace(stacked).empty();
}

// Irreducibility by exhausting orbit spans of all nonzero vectors, plus a
// one-dimensional commutant (so no splitting appears over any extension).
inline bool check_absolutely_irreducible(const Mod2Module& n) {
    std::size_t d = n.dim;
    if (d == 0 || d > 24) throw std::invalid_argument("dimension out of the exhaustive range");

    for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << d); ++bits) {
        F2Vec v(d, false);
        for (std::size_t j = 0; j < d; ++j) v[j] = (bits >> j) & 1;
        exactla::F2Span span(d);
        std::vector<F2Vec> work;
        if (span.insert(v)) work.push_back(v);
        while (!work.empty() && span.dim() < d) {
            F2Vec w = work.back();
            work.pop_back();
            for (const auto& g : n.gens) {
                F2Vec u = exactla::f2_mul_vec(g, w);
                if (span.insert(u)) work.push_back(u);
            }
        }
        if (span.dim() < d) return false;
    }

    // commutant solve: X g + g X = 0 for all generators, unknowns X_{ab}
    F2Matrix sys(n.gens.size() * d * d, d * d);
    for (std::size_t gi = 0; gi < n.gens.size(); ++gi) {
        const F2Matrix& g = n.gens[gi];
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                std::size_t row = (gi * d + i) * d + j;
                // (X g)_{ij} = sum_k X_{ik} g_{kj};  (g X)_{ij} = sum_k g_{ik} X_{kj}
                for (std::size_t k = 0; k < d; ++k) {
                    if (g.get(k, j)) {
                        std::size_t col = i * d + k;
                        sys.set(row, col, !sys.get(row, col));
                    }
                    if (g.get(i, k)) {
                        std::size_t col = k * d + j;
                        sys.set(row, col, !sys.get(row, col));
                    }
                }
            }
    }
    return exactla::f2_nullspace(sys).size() == 1;
}

struct AnisotropicElement {
    std::vector<std::size_t> word;  // indices of the chosen simple reflections
    F2Matrix matrix;                // their product acting on N
};

// Product of reflections in a greedily chosen set of simple roots whose
// images form a basis of N; acts with no nonzero fixed vector.
inline AnisotropicElement anisotropic_element(const Mod2Module& n) {
    exactla::F2Span span(n.dim);
    AnisotropicElement out;
    out.matrix = F2Matrix::identity(n.dim);
    for (std::size_t i = 0; i < n.ambient_dim; ++i) {
        F2Vec e(n.ambient_dim, false);
        e[i] = true;
        if (span.insert(n.proj(e))) out.word.push_back(i);
    }
    if (span.dim() != n.dim)
        throw std::logic_error("simple-root images failed to span the lattice image");
    for (std::size_t i : out.word) out.matrix = out.matrix * n.gens[i];
    F2Matrix diff = out.matrix + F2Matrix::identity(n.dim);
    if (exactla::f2_rank(diff) != n.dim)
        throw std::logic_error("chosen reflection word has a nonzero fixed vector");
    return out;
}

struct ComponentGroup {
    std::vector<Int> divisors;  // elementary divisors of the fundamental group
    int m = 0;                  // marked-point count: 1 + number of even divisors
    Int pi0_order;              // order of the 2-torsion quotient, 2^{m-1}
    std::string structure;      // "1", "Z/2", "(Z/2)^k"
};

inline ComponentGroup component_group(const rootsys::RootSystem& rs) {
    ComponentGroup cg;
    cg.divisors = exactla::smith_normal_form(rs.cartan).divisors();
    int evens = 0;
    for (const Int& d : cg.divisors)
        if (mpz_even_p(d.get_mpz_t())) ++evens;
    cg.m = evens + 1;
    cg.pi0_order = Int(1) << evens;
    if (evens == 0)
        cg.structure = "1";
    else if (evens == 1)
        cg.structure = "Z/2";
    else
        cg.structure = "(Z/2)^" + std::to_string(evens);
    return cg;
}

inline std::size_t genus(const rootsys::RootSystem& rs) {
    std::size_t d = n_lattice(rs).dim;
    if (d % 2 != 0) throw std::logic_error("lattice image has odd dimension");
    return d / 2;
}

inline bool roots_nonzero_in_n(const rootsys::RootSystem& rs) {
    Mod2Module n = n_lattice(rs);
    for (const rootsys::RootVec& root : rs.roots) {
        F2Vec v(rs.rank(), false);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = (root[j] % 2) != 0;
        bool zero = true;
        for (bool b : n.proj(v))
            if (b) zero = false;
        if (zero) return false;
    }
    return true;
}

struct DerivedConstants {
    Int tamagawa_number;           // 2^m
    Int average_selmer_bound;      // 3 * 2^{m-1}
    Int fundamental_group_order;   // 2 * #pi0
};

inline DerivedConstants derived_constants(const rootsys::RootSystem& rs) {
    ComponentGroup cg = component_group(rs);
    DerivedConstants dc;
    dc.tamagawa_number = Int(1) << cg.m;
    dc.average_selmer_bound = Int(3) * (Int(1) << (cg.m - 1));
    dc.fundamental_group_order = Int(2) * cg.pi0_order;
    return dc;
}

}  // namespace thetarep::mod2
