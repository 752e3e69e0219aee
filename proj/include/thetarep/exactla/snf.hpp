#pragma once

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"

namespace thetarep::exactla {

// Smith normal form U*M*V = D with unimodular U, V and divisor chain
// d1 | d2 | ... (divisors normalized nonnegative).
struct SNFResult {
    IntMatrix d;  // diagonal form, same shape as input
    IntMatrix u;  // rows transform
    IntMatrix v;  // cols transform

    std::vector<Int> divisors() const {
        std::vector<Int> out;
        const std::size_t k = std::min(d.rows(), d.cols());
        for (std::size_t i = 0; i < k; ++i) out.push_back(d.at(i, i));
        return out;
    }
};

namespace detail {

inline void row_op(IntMatrix& m, IntMatrix& u, std::size_t dst, std::size_t src, const Int& q) {
    // row dst -= q * row src, mirrored in u
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) -= q * m.at(src, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(dst, j) -= q * u.at(src, j);
}

inline void col_op(IntMatrix& m, IntMatrix& v, std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) -= q * m.at(i, src);
    for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, dst) -= q * v.at(i, src);
}

inline void swap_rows(IntMatrix& m, IntMatrix& u, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
}

inline void swap_cols(IntMatrix& m, IntMatrix& v, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
}

}  // namespace detail

inline SNFResult smith_normal_form(IntMatrix m) {
    using namespace detail;
    const std::size_t rows = m.rows(), cols = m.cols();
    SNFResult res{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
    IntMatrix& a = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    const std::size_t k = std::min(rows, cols);
    for (std::size_t t = 0; t < k; ++t) {
        for (;;) {
            // pivot: smallest nonzero absolute value in the trailing block
            // (limits coefficient growth)
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (a.at(i, j) == 0) continue;
                    if (!found || cmp(abs(a.at(i, j)), abs(a.at(pi, pj))) < 0) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) {
                // trailing block zero; done with this and all later pivots
                t = k;
                break;
            }
            swap_rows(a, u, t, pi);
            swap_cols(a, v, t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), a.at(t, t).get_mpz_t());
                row_op(a, u, i, t, q);
                if (a.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), a.at(t, t).get_mpz_t());
                col_op(a, v, j, t, q);
                if (a.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // smaller remainders appeared; re-pivot

            // enforce divisibility d_t | (everything below right): if some
            // entry resists, fold its row in and restart the pivot hunt
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols && divides; ++j)
                    if (!mpz_divisible_p(a.at(i, j).get_mpz_t(), a.at(t, t).get_mpz_t())) {
                        row_op(a, u, t, i, Int(-1));  // row t += row i
                        divides = false;
                    }
            if (divides) break;
        }
        if (t == k) break;
    }

    for (std::size_t t = 0; t < k; ++t)
        if (a.at(t, t) < 0) {
            for (std::size_t j = 0; j < cols; ++j) a.at(t, j) = -a.at(t, j);
            for (std::size_t j = 0; j < u.cols(); ++j) u.at(t, j) = -u.at(t, j);
        }
    return res;
}

}  // namespace thetarep::exactla
