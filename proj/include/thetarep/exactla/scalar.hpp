#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace thetarep::exactla {

// Arbitrary-precision integers and rationals. mpq_class arithmetic keeps
// results canonical (lowest terms, positive denominator) as long as inputs
// are canonical, so the only care point is construction from a raw pair.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;  // powers of a canonical rational are canonical
}

// Exact quotient; throws if b does not divide a. Used where an algorithm's
// correctness hinges on a divisibility guarantee (Bareiss, Faddeev-LeVerrier).
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw std::invalid_argument("exact_div: division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::logic_error("exact_div: inexact division");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// p-adic valuation of a nonzero integer; throws on zero (ord is infinite).
inline unsigned long ord_p(const Int& a, const Int& p) {
    if (a == 0) throw std::invalid_argument("ord_p: valuation of zero");
    if (p < 2) throw std::invalid_argument("ord_p: p must be >= 2");
    unsigned long k = 0;
    Int v = a;
    while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
        v = exact_div(v, p);
        ++k;
    }
    return k;
}

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace thetarep::exactla
