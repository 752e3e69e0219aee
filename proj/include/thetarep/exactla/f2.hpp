#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"

namespace thetarep::exactla {

// Matrix over GF(2), rows packed into 64-bit words. Elimination always picks
// the leftmost available pivot so every derived quantity is deterministic.
class F2Matrix {
public:
    F2Matrix() : rows_(0), cols_(0), words_(0) {}
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

    static F2Matrix identity(std::size_t n) {
        F2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    static F2Matrix from_int_mod2(const IntMatrix& a) {
        F2Matrix m(a.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                m.set(i, j, mpz_odd_p(a.at(i, j).get_mpz_t()));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const {
        check(i, j);
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        check(i, j);
        std::uint64_t& w = bits_[i * words_ + j / 64];
        const std::uint64_t mask = std::uint64_t(1) << (j % 64);
        if (v)
            w |= mask;
        else
            w &= ~mask;
    }

    bool operator==(const F2Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
    }
    bool operator!=(const F2Matrix& o) const { return !(*this == o); }

    F2Matrix operator+(const F2Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("F2Matrix: shape mismatch");
        F2Matrix r = *this;
        for (std::size_t k = 0; k < bits_.size(); ++k) r.bits_[k] ^= o.bits_[k];
        return r;
    }
    F2Matrix operator*(const F2Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("F2Matrix: shape mismatch");
        F2Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k)
                if (get(i, k))
                    for (std::size_t w = 0; w < o.words_; ++w)
                        r.bits_[i * r.words_ + w] ^= o.bits_[k * o.words_ + w];
        return r;
    }

    F2Matrix transposed() const {
        F2Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (get(i, j)) r.set(j, i, true);
        return r;
    }

    bool is_zero() const {
        for (auto w : bits_)
            if (w) return false;
        return true;
    }

    void xor_row_into(std::size_t src, std::size_t dst) {
        for (std::size_t w = 0; w < words_; ++w)
            bits_[dst * words_ + w] ^= bits_[src * words_ + w];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t w = 0; w < words_; ++w)
            std::swap(bits_[a * words_ + w], bits_[b * words_ + w]);
    }

    // Row reduce in place (reduced echelon form); returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && !get(p, c)) ++p;
            if (p == rows_) continue;
            swap_rows(r, p);
            for (std::size_t i = 0; i < rows_; ++i)
                if (i != r && get(i, c)) xor_row_into(r, i);
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

private:
    void check(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("F2Matrix: index out of range");
    }

    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> bits_;
};

// Column vectors over GF(2) are row-count-1 F2Matrix values in what follows.
using F2Vec = std::vector<bool>;

inline F2Vec f2_mul_vec(const F2Matrix& m, const F2Vec& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("f2_mul_vec: size mismatch");
    F2Vec r(m.rows(), false);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        bool acc = false;
        for (std::size_t j = 0; j < m.cols(); ++j) acc ^= (m.get(i, j) && v[j]);
        r[i] = acc;
    }
    return r;
}

inline std::size_t f2_rank(F2Matrix m) { return m.rref().size(); }

inline std::vector<F2Vec> f2_nullspace(F2Matrix m) {
    const std::size_t n = m.cols();
    std::vector<std::size_t> pivots = m.rref();
    std::vector<long> pivot_row(n, -1);
    for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<long>(r);
    std::vector<F2Vec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (pivot_row[f] >= 0) continue;
        F2Vec v(n, false);
        v[f] = true;
        for (std::size_t c = 0; c < n; ++c)
            if (pivot_row[c] >= 0) v[c] = m.get(static_cast<std::size_t>(pivot_row[c]), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve M x = b over GF(2); returns false if inconsistent.
inline bool f2_solve(const F2Matrix& m, const F2Vec& b, F2Vec& out) {
    if (b.size() != m.rows()) throw std::invalid_argument("f2_solve: size mismatch");
    F2Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m.get(i, j));
        aug.set(i, m.cols(), b[i]);
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == m.cols()) return false;
    out.assign(m.cols(), false);
    for (std::size_t r = 0; r < pivots.size(); ++r) out[pivots[r]] = aug.get(r, m.cols());
    return true;
}

// Incremental span tracker; insert() reports whether the vector was new.
class F2Span {
public:
    explicit F2Span(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return basis_.size(); }

    bool insert(F2Vec v) {
        reduce(v);
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!v[j]) continue;
            basis_.push_back(std::move(v));
            pivot_.push_back(j);
            return true;
        }
        return false;
    }

    bool contains(F2Vec v) const {
        reduce(v);
        for (bool b : v)
            if (b) return false;
        return true;
    }

private:
    void reduce(F2Vec& v) const {
        for (std::size_t k = 0; k < basis_.size(); ++k)
            if (v[pivot_[k]])
                for (std::size_t j = 0; j < dim_; ++j) v[j] = v[j] ^ basis_[k][j];
    }

    std::size_t dim_;
    std::vector<F2Vec> basis_;
    std::vector<std::size_t> pivot_;
};

}  // namespace thetarep::exactla
