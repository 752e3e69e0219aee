#pragma once

// Rank-2n orthogonal pair model: elements of the representation are 2n x 2n
// rational matrices A, embedded as D = [[0, A], [-A*, 0]] inside so(4n).
// Carries the antitranspose, discriminant tests, centralizer dimensions,
// staircase (regular-nilpotent) sampling, the 4n^2 weight grid with its
// partial order, and the Klein four-group of diagram symmetries.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thetarep/exactla/matrix.hpp"
#include "thetarep/exactla/poly.hpp"

namespace thetarep::d2n {

using exactla::Int;
using exactla::Rat;
using exactla::RatMatrix;
using exactla::RatPoly;

// reflection along the antidiagonal: (i, j) -> (N+1-j, N+1-i)
inline RatMatrix antitranspose(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("antitranspose needs a square matrix");
    std::size_t N = a.rows();
    RatMatrix out(N, N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out.at(N - 1 - j, N - 1 - i) = a.at(i, j);
    return out;
}

struct VMatrix {
    std::size_t n;
    RatMatrix a;  // 2n x 2n

    VMatrix(std::size_t n_, RatMatrix a_) : n(n_), a(std::move(a_)) {
        if (n < 2) throw std::invalid_argument("model needs n >= 2");
        if (a.rows() != 2 * n || a.cols() != 2 * n)
            throw std::invalid_argument("entry matrix must be 2n x 2n");
    }
};

// D = [[0, A], [-A*, 0]]; antisymmetric for the split form on W1 + W2
inline RatMatrix build_d(const VMatrix& v) {
    std::size_t m = 2 * v.n;
    RatMatrix d(2 * m, 2 * m);
    RatMatrix astar = antitranspose(v.a);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            d.at(i, m + j) = v.a.at(i, j);
            d.at(m + i, j) = -astar.at(i, j);
        }
    return d;
}

inline Rat disc_delta(const VMatrix& v) {
    RatMatrix prod = v.a * antitranspose(v.a);
    return exactla::poly_disc(exactla::charpoly(prod));
}

inline bool is_regular_semisimple(const VMatrix& v) { return disc_delta(v) != 0; }

// Exact check of the two structural identities tying D to A: the even
// characteristic-polynomial substitution and the discriminant factorization.
// For monic g of degree m and f(x) = g(x^2), pairing the roots +-sqrt(lambda)
// gives disc(f) = (-4)^m f(0) disc(g)^2; with g = chi_{-AA*} (m = 2n even)
// and f(0) = det(A)^2 this reads 4^{2n} det(A)^2 disc(g)^2.
inline bool verify_disc_identity(const VMatrix& v, std::string* diagnostic = nullptr) {
    RatMatrix minus_aastar = -(v.a * antitranspose(v.a));
    RatPoly chi_b = exactla::charpoly(minus_aastar);
    RatPoly chi_d = exactla::charpoly(build_d(v));

    if (chi_d != chi_b.compose_x2()) {
        if (diagnostic) *diagnostic = "characteristic polynomial of D is not chi(x^2)";
        return false;
    }

    Rat lhs = exactla::poly_disc(chi_d);
    Rat disc_b = exactla::poly_disc(chi_b);
    Rat deta = exactla::det(v.a);
    Rat rhs = exactla::rat_pow(Rat(4), 2 * v.n) * disc_b * disc_b * deta * deta;
    if (abs(lhs) != abs(rhs)) {
        if (diagnostic)
            *diagnostic = "discriminant mismatch: |disc chi_D| = " + exactla::to_string(abs(lhs)) +
                          " vs disc^2 det^2 = " + exactla::to_string(abs(rhs));
        return false;
    }
    return true;
}

namespace detail {

// Order of the basis in which the invariant form becomes the full
// antidiagonal: e1,f1,...,en,fn,fn*,en*,...,f1*,e1*. Index k (0-based) gives
// the position of that vector in the block order e,e*,f,f*.
inline std::vector<std::size_t> interleaving(std::size_t n) {
    std::vector<std::size_t> perm(4 * n);
    for (std::size_t i = 1; i <= n; ++i) {
        perm[2 * i - 2] = i - 1;                    // e_i
        perm[2 * i - 1] = 2 * n + i - 1;            // f_i
        perm[4 * n + 1 - 2 * i] = 2 * n - i;        // e_i* at block index 2n+1-i
        perm[4 * n - 2 * i] = 4 * n - i;            // f_i* at block index 4n+1-i
    }
    return perm;
}

}  // namespace detail

// Dimension of the commutant of D inside so(W, b). After moving to the
// interleaved basis the form is the antidiagonal, so the Lie algebra is
// spanned by E_ij - E_{(4n+1-j)(4n+1-i)} over positions above the
// antidiagonal. Regular elements have commutant dimension exactly 2n.
inline std::size_t centralizer_dim(const VMatrix& v) {
    std::size_t N = 4 * v.n;
    RatMatrix d = build_d(v);
    std::vector<std::size_t> perm = detail::interleaving(v.n);
    RatMatrix d2(N, N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) d2.at(i, j) = d.at(perm[i], perm[j]);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            std::size_t mi = N - 1 - j, mj = N - 1 - i;
            if (std::make_pair(i, j) < std::make_pair(mi, mj)) pairs.emplace_back(i, j);
        }

    // column per basis element: vectorized [B, D] with B = E_ab - E_cd
    RatMatrix sys(N * N, pairs.size());
    for (std::size_t m = 0; m < pairs.size(); ++m) {
        auto [a, b] = pairs[m];
        std::size_t c = N - 1 - b, e = N - 1 - a;
        for (std::size_t k = 0; k < N; ++k) {
            sys.at(a * N + k, m) += d2.at(b, k);   // (E_ab D)_{a,k}
            sys.at(k * N + b, m) -= d2.at(k, a);   // (D E_ab)_{k,b}
            sys.at(c * N + k, m) -= d2.at(e, k);
            sys.at(k * N + e, m) += d2.at(k, c);
        }
    }
    return exactla::rational_nullspace(sys).size();
}

inline bool is_regular(const VMatrix& v) { return centralizer_dim(v) == 2 * v.n; }

// ---- weights ----------------------------------------------------------

struct WeightD2n {
    std::size_t n;
    std::size_t t_index;  // 1..n
    int t_sign;           // +-1
    std::size_t s_index;  // 1..n
    int s_sign;           // +-1

    friend bool operator==(const WeightD2n& a, const WeightD2n& b) {
        return a.n == b.n && a.t_index == b.t_index && a.t_sign == b.t_sign &&
               a.s_index == b.s_index && a.s_sign == b.s_sign;
    }
};

// Row r carries t_r for r <= n and -t_{2n+1-r} below; column c carries -s_c
// for c <= n and +s_{2n+1-c} to the right. Top-right corner is t_1 + s_1.
inline WeightD2n weight_at(std::size_t n, std::size_t row, std::size_t col) {
    if (n < 2 || row < 1 || row > 2 * n || col < 1 || col > 2 * n)
        throw std::out_of_range("weight position out of range");
    WeightD2n w;
    w.n = n;
    if (row <= n) {
        w.t_index = row;
        w.t_sign = 1;
    } else {
        w.t_index = 2 * n + 1 - row;
        w.t_sign = -1;
    }
    if (col <= n) {
        w.s_index = col;
        w.s_sign = -1;
    } else {
        w.s_index = 2 * n + 1 - col;
        w.s_sign = 1;
    }
    return w;
}

inline std::pair<std::size_t, std::size_t> position_of(const WeightD2n& w) {
    std::size_t row = (w.t_sign > 0) ? w.t_index : 2 * w.n + 1 - w.t_index;
    std::size_t col = (w.s_sign < 0) ? w.s_index : 2 * w.n + 1 - w.s_index;
    return {row, col};
}

// ---- simple-root coordinates ------------------------------------------

struct SGVector {
    std::size_t n = 0;
    std::vector<Rat> beta;   // n coordinates
    std::vector<Rat> gamma;  // n coordinates

    explicit SGVector(std::size_t n_ = 0) : n(n_), beta(n_), gamma(n_) {}

    bool all_nonneg() const {
        for (const Rat& r : beta)
            if (r < 0) return false;
        for (const Rat& r : gamma)
            if (r < 0) return false;
        return true;
    }

    friend SGVector operator+(SGVector a, const SGVector& b) {
        for (std::size_t i = 0; i < a.n; ++i) {
            a.beta[i] += b.beta[i];
            a.gamma[i] += b.gamma[i];
        }
        return a;
    }
    friend SGVector operator-(SGVector a, const SGVector& b) {
        for (std::size_t i = 0; i < a.n; ++i) {
            a.beta[i] -= b.beta[i];
            a.gamma[i] -= b.gamma[i];
        }
        return a;
    }
    friend bool operator==(const SGVector& a, const SGVector& b) {
        return a.n == b.n && a.beta == b.beta && a.gamma == b.gamma;
    }

    // coefficients over t_1..t_n, s_1..s_n obtained by expanding each basis
    // vector (difference of consecutive coordinates, with the fork at the end)
    std::vector<Rat> ts_coords() const {
        std::vector<Rat> ts(2 * n);
        for (std::size_t k = 1; k <= n; ++k) {
            if (k <= n - 1) {
                ts[k - 1] += beta[k - 1];
                ts[k] -= beta[k - 1];
                ts[n + k - 1] += gamma[k - 1];
                ts[n + k] -= gamma[k - 1];
            } else {
                ts[n - 2] += beta[n - 1];
                ts[n - 1] += beta[n - 1];
                ts[2 * n - 2] += gamma[n - 1];
                ts[2 * n - 1] += gamma[n - 1];
            }
        }
        return ts;
    }
};

namespace detail {

// t_i = beta_i + ... + beta_{n-2} + (beta_{n-1} + beta_n)/2 for i <= n-2,
// with the two fork cases at i = n-1 and i = n
inline std::vector<Rat> t_in_basis(std::size_t n, std::size_t i) {
    std::vector<Rat> c(n);
    Rat half = exactla::make_rat(1, 2);
    if (i <= n - 1) {
        for (std::size_t k = i; k <= n - 2; ++k) c[k - 1] = 1;
        c[n - 2] = half;
        c[n - 1] = half;
    } else {
        c[n - 2] = -half;
        c[n - 1] = half;
    }
    return c;
}

}  // namespace detail

inline SGVector sg_coords(const WeightD2n& w) {
    SGVector out(w.n);
    std::vector<Rat> t = detail::t_in_basis(w.n, w.t_index);
    std::vector<Rat> s = detail::t_in_basis(w.n, w.s_index);
    for (std::size_t k = 0; k < w.n; ++k) {
        out.beta[k] = Rat(w.t_sign) * t[k];
        out.gamma[k] = Rat(w.s_sign) * s[k];
    }
    return out;
}

// a <= b in the dominance order: b - a has nonnegative coordinates
inline bool leq(const WeightD2n& a, const WeightD2n& b) {
    if (a.n != b.n) throw std::invalid_argument("weights from different models");
    return (sg_coords(b) - sg_coords(a)).all_nonneg();
}

// ---- Klein four-group of symmetries -----------------------------------

enum class Omega { id, w1, w2, w1w2 };

inline WeightD2n omega_act(Omega g, WeightD2n w) {
    bool swap_ts = (g == Omega::w1 || g == Omega::w1w2);
    bool flip_last = (g == Omega::w2 || g == Omega::w1w2);
    if (swap_ts) {
        std::swap(w.t_index, w.s_index);
        std::swap(w.t_sign, w.s_sign);
    }
    if (flip_last) {
        if (w.t_index == w.n) w.t_sign = -w.t_sign;
        if (w.s_index == w.n) w.s_sign = -w.s_sign;
    }
    return w;
}

// ---- sampling ----------------------------------------------------------

enum class PositionClass { One, Zero, Star };

// A position is free ("star") exactly when its weight is a negative root of
// the ambient group; it carries a 1 when the weight is simple there, and is
// forced to 0 on the remaining (positive, non-simple) weights. The ambient
// coordinate order interleaves the two factors: t_1 > s_1 > ... > t_n > s_n.
inline PositionClass classify_position(std::size_t n, std::size_t row, std::size_t col) {
    WeightD2n w = weight_at(n, row, col);
    bool negative = (w.t_index <= w.s_index) ? (w.t_sign < 0) : (w.s_sign < 0);
    if (negative) return PositionClass::Star;
    bool simple = (w.t_sign > 0 && w.s_sign < 0 && w.t_index == w.s_index) ||
                  (w.t_sign < 0 && w.s_sign > 0 && w.t_index == w.s_index + 1) ||
                  (w.t_sign > 0 && w.s_sign > 0 && w.t_index == n && w.s_index == n);
    return simple ? PositionClass::One : PositionClass::Zero;
}

namespace detail {

inline int draw_small(std::mt19937_64& rng) { return static_cast<int>(rng() % 19) - 9; }

}  // namespace detail

// staircase matrix: 1s on the regular-nilpotent support, free entries below
inline VMatrix kostant_sample(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RatMatrix a(2 * n, 2 * n);
    for (std::size_t r = 1; r <= 2 * n; ++r)
        for (std::size_t c = 1; c <= 2 * n; ++c) switch (classify_position(n, r, c)) {
                case PositionClass::One:
                    a.at(r - 1, c - 1) = 1;
                    break;
                case PositionClass::Star:
                    a.at(r - 1, c - 1) = detail::draw_small(rng);
                    break;
                case PositionClass::Zero:
                    break;
            }
    return VMatrix(n, std::move(a));
}

struct BlockPattern {
    enum class Kind { TopRight, Pair, Reducible };
    Kind kind;
    std::size_t i = 0;
    std::size_t j = 0;

    static BlockPattern top_right(std::size_t i) { return {Kind::TopRight, i, 0}; }
    static BlockPattern pair(std::size_t i, std::size_t j) { return {Kind::Pair, i, j}; }
    static BlockPattern reducible() { return {Kind::Reducible, 0, 0}; }
};

// zero out the requested top-right blocks, randomize everything else
inline VMatrix block_zero_sample(std::size_t n, const BlockPattern& p, std::uint64_t seed) {
    std::size_t m = 2 * n;
    auto in_top_right = [m](std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) {
        return r <= rows && c > m - cols;
    };
    auto zeroed = [&](std::size_t r, std::size_t c) {
        switch (p.kind) {
            case BlockPattern::Kind::TopRight:
                return in_top_right(r, c, p.i, m + 1 - p.i);
            case BlockPattern::Kind::Pair:
                return in_top_right(r, c, p.i, p.j) || in_top_right(r, c, p.j, p.i);
            case BlockPattern::Kind::Reducible:
                return in_top_right(r, c, n - 1, n + 1) || in_top_right(r, c, n, n - 1);
        }
        return false;
    };
    if (p.kind == BlockPattern::Kind::TopRight && (p.i < 1 || p.i > m))
        throw std::invalid_argument("block height out of range");
    if (p.kind == BlockPattern::Kind::Pair && (p.i < 1 || p.j < 1 || p.i + p.j != m))
        throw std::invalid_argument("block pair must satisfy i + j = 2n");

    std::mt19937_64 rng(seed);
    RatMatrix a(m, m);
    for (std::size_t r = 1; r <= m; ++r)
        for (std::size_t c = 1; c <= m; ++c)
            if (!zeroed(r, c)) a.at(r - 1, c - 1) = detail::draw_small(rng);
    return VMatrix(n, std::move(a));
}

// For the reducibility pattern: the span of {e*_{n-1},...,e*_1} together
// with its image under AA* must stay inside an n-dimensional isotropic
// subspace of W1 (the form on W1 pairs index k with index 2n+1-k).
inline bool isotropic_span_check(const VMatrix& v) {
    std::size_t m = 2 * v.n;
    RatMatrix b = v.a * antitranspose(v.a);
    std::vector<std::vector<Rat>> span;
    for (std::size_t idx = v.n + 1; idx < m; ++idx) {  // 0-based rows n+1..2n-1
        std::vector<Rat> x(m), bx(m);
        x[idx] = 1;
        for (std::size_t r = 0; r < m; ++r) bx[r] = b.at(r, idx);
        span.push_back(std::move(x));
        span.push_back(std::move(bx));
    }
    RatMatrix mat(span.size(), m);
    for (std::size_t r = 0; r < span.size(); ++r)
        for (std::size_t c = 0; c < m; ++c) mat.at(r, c) = span[r][c];
    if (exactla::rank(mat) > v.n) return false;
    for (const auto& u : span)
        for (const auto& w : span) {
            Rat form(0);
            for (std::size_t k = 0; k < m; ++k) form += u[k] * w[m - 1 - k];
            if (form != 0) return false;
        }
    return true;
}

// ---- sum of positive roots of the fixed subgroup -----------------------

// 2(n-1)t_1 + 2(n-2)t_2 + ... + 2t_{n-1}, plus the mirror image in s
inline SGVector sum_pos_roots_g(std::size_t n) {
    if (n < 2) throw std::invalid_argument("model needs n >= 2");
    SGVector out(n);
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Rat> t = detail::t_in_basis(n, i);
        Rat coeff(2 * (static_cast<long>(n) - static_cast<long>(i)));
        for (std::size_t k = 0; k < n; ++k) {
            out.beta[k] += coeff * t[k];
            out.gamma[k] += coeff * t[k];
        }
    }
    return out;
}

}  // namespace thetarep::d2n
