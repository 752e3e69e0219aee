#pragma once

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"
#include "scalar.hpp"

namespace thetarep::exactla {

// Univariate polynomial, coefficients ascending by degree, trailing zeros
// stripped (so lc() is nonzero unless the polynomial is zero).
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { normalize(); }

    static Poly x_power(std::size_t k) {
        std::vector<T> c(k + 1, T(0));
        c[k] = T(1);
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is reported as -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const T& lc() const {
        if (c_.empty()) throw std::logic_error("Poly::lc: zero polynomial");
        return c_.back();
    }
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
    const std::vector<T>& coeffs() const { return c_; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<T> r(c_);
        for (auto& v : r) v = -v;
        return Poly(std::move(r));
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }
    Poly operator*(const T& s) const {
        std::vector<T> r(c_);
        for (auto& v : r) v *= s;
        return Poly(std::move(r));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
        return Poly(std::move(r));
    }

    T eval(const T& x) const {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // p(x^2): used for characteristic-polynomial identities of block matrices
    Poly compose_x2() const {
        if (is_zero()) return Poly();
        std::vector<T> r(2 * (c_.size() - 1) + 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
        return Poly(std::move(r));
    }

    // matrix substitution p(M); exercised by the Cayley-Hamilton property test
    template <class M>
    Mat<M> eval_matrix(const Mat<M>& m) const {
        if (!m.square()) throw std::invalid_argument("Poly::eval_matrix: not square");
        Mat<M> acc(m.rows(), m.cols());
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * m;
            for (std::size_t d = 0; d < m.rows(); ++d) acc.at(d, d) += M(c_[i]);
        }
        return acc;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

inline RatPoly to_rational(const IntPoly& p) {
    std::vector<Rat> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rat(p.coeffs()[i]);
    return RatPoly(std::move(c));
}

// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recursion.
// For integer input every division tr(M_k)/k is exact (the quotients are the
// charpoly coefficients), enforced via exact_div.
inline IntPoly charpoly(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("charpoly: not square");
    const std::size_t n = m.rows();
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    IntMatrix mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        c[n - k] = -exact_div(mk.trace(), Int(static_cast<long>(k)));
        if (k == n) break;
        for (std::size_t d = 0; d < n; ++d) mk.at(d, d) += c[n - k];
        mk = m * mk;
    }
    return IntPoly(std::move(c));
}

inline RatPoly charpoly(const RatMatrix& m) {
    if (!m.square()) throw std::invalid_argument("charpoly: not square");
    const std::size_t n = m.rows();
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    RatMatrix mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        c[n - k] = -mk.trace() / Rat(static_cast<long>(k));
        if (k == n) break;
        for (std::size_t d = 0; d < n; ++d) mk.at(d, d) += c[n - k];
        mk = m * mk;
    }
    return RatPoly(std::move(c));
}

// Sylvester matrix of (p, q), size deg p + deg q.
inline IntMatrix sylvester_matrix(const IntPoly& p, const IntPoly& q) {
    const long dp = p.degree(), dq = q.degree();
    if (dp < 0 || dq < 0) throw std::invalid_argument("sylvester_matrix: zero polynomial");
    const std::size_t n = static_cast<std::size_t>(dp + dq);
    IntMatrix s(n, n);
    for (long r = 0; r < dq; ++r)
        for (long k = 0; k <= dp; ++k) s.at(r, r + k) = p.coeff(static_cast<std::size_t>(dp - k));
    for (long r = 0; r < dp; ++r)
        for (long k = 0; k <= dq; ++k) s.at(dq + r, r + k) = q.coeff(static_cast<std::size_t>(dq - k));
    return s;
}

inline Int resultant(const IntPoly& p, const IntPoly& q) {
    const long dp = p.degree(), dq = q.degree();
    if (dp < 0 || dq < 0) throw std::invalid_argument("resultant: zero polynomial");
    if (dp == 0) return int_pow(p.coeff(0), static_cast<unsigned long>(dq));
    if (dq == 0) return int_pow(q.coeff(0), static_cast<unsigned long>(dp));
    return det_bareiss(sylvester_matrix(p, q));
}

// disc(p) = (-1)^{d(d-1)/2} Res(p, p') / lc(p)
inline Int poly_disc(const IntPoly& p) {
    const long d = p.degree();
    if (d < 1) throw std::invalid_argument("poly_disc: degree must be >= 1");
    if (d == 1) return Int(1);
    IntPoly dp = p.derivative();
    Int res = dp.is_zero() ? Int(0) : resultant(p, dp);
    Int disc = exact_div(res, p.lc());
    return ((d * (d - 1) / 2) % 2 == 0) ? disc : -disc;
}

// Rational discriminant via denominator clearing: disc(k p) = k^{2d-2} disc(p).
inline Rat poly_disc(const RatPoly& p) {
    const long d = p.degree();
    if (d < 1) throw std::invalid_argument("poly_disc: degree must be >= 1");
    Int k(1);
    for (const auto& c : p.coeffs()) k = lcm(k, c.get_den());
    std::vector<Int> zc(p.coeffs().size());
    for (std::size_t i = 0; i < zc.size(); ++i) {
        Rat v = p.coeffs()[i] * Rat(k);
        zc[i] = v.get_num();
    }
    Int dz = poly_disc(IntPoly(std::move(zc)));
    return make_rat(dz, int_pow(k, static_cast<unsigned long>(2 * d - 2)));
}

// gcd over Q, returned monic (or zero). Euclid is fine at the sizes used here.
inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        // remainder of a by b
        RatPoly r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Rat f = r.lc() / b.lc();
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            r = r - (b * RatPoly::x_power(shift)) * f;
        }
        a = b;
        b = r;
    }
    if (!a.is_zero() && a.lc() != 1) a = a * (Rat(1) / a.lc());
    return a;
}

}  // namespace thetarep::exactla
