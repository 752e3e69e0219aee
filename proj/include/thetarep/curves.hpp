#pragma once

// The seven families of marked affine curves attached to the simply-laced
// diagrams: equation evaluation, weighted heights, integral-point counts in
// height boxes, hyperelliptic discriminants, and singular-fiber scans mod p
// with tangent-cone classification of the singular points.

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thetarep/exactla/poly.hpp"
#include "thetarep/mod2.hpp"
#include "thetarep/rootsys.hpp"

namespace thetarep::curves {

using exactla::Int;
using exactla::Rat;
using exactla::RatPoly;

// coefficient tuple, aligned with CurveFamily::degrees
using BPoint = std::vector<Int>;

enum class FamilyKind { HyperellipticOdd, HyperellipticEven, DEven, DOdd, E6, E7, E8 };

struct CurveFamily {
    rootsys::Label label;
    FamilyKind kind;
    std::size_t g = 0;  // row parameter; equals the genus for the A and D rows
    std::size_t rank = 0;
    std::vector<unsigned> degrees;  // in equation order; D rows repeat one degree
    int marked_points = 0;
    std::size_t genus = 0;
};

// sparse integer polynomial in two variables
class XYPoly {
public:
    void add(unsigned i, unsigned j, const Int& c) {
        if (c == 0) return;
        Int& slot = terms_[{i, j}];
        slot += c;
        if (slot == 0) terms_.erase({i, j});
    }

    const std::map<std::pair<unsigned, unsigned>, Int>& terms() const { return terms_; }

    Int eval(const Int& x, const Int& y) const {
        Int total = 0;
        for (const auto& [mono, c] : terms_) {
            Int t = c;
            for (unsigned k = 0; k < mono.first; ++k) t *= x;
            for (unsigned k = 0; k < mono.second; ++k) t *= y;
            total += t;
        }
        return total;
    }

    long eval_mod(long x, long y, long p) const {
        long total = 0;
        for (const auto& [mono, c] : terms_) {
            long t = static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p)));
            for (unsigned k = 0; k < mono.first; ++k) t = t * (x % p) % p;
            for (unsigned k = 0; k < mono.second; ++k) t = t * (y % p) % p;
            total = (total + t) % p;
        }
        return (total % p + p) % p;
    }

    XYPoly dx() const {
        XYPoly out;
        for (const auto& [mono, c] : terms_)
            if (mono.first > 0) out.add(mono.first - 1, mono.second, c * mono.first);
        return out;
    }

    XYPoly dy() const {
        XYPoly out;
        for (const auto& [mono, c] : terms_)
            if (mono.second > 0) out.add(mono.first, mono.second - 1, c * mono.second);
        return out;
    }

private:
    std::map<std::pair<unsigned, unsigned>, Int> terms_;
};

// Families exist for every diagram except A_1 (no curve) and D_3 (the odd D
// row starts at D_5; use A_3 instead). Genus comes from the two-torsion
// module so the curve and orbit sides stay in sync by construction.
inline CurveFamily make_family(const rootsys::Label& label) {
    CurveFamily fam;
    fam.label = label;
    fam.rank = label.rank;
    std::size_t n = label.rank;

    if (label.family == 'A') {
        if (n < 2) throw std::invalid_argument("no curve family for A1");
        fam.kind = n % 2 == 0 ? FamilyKind::HyperellipticOdd : FamilyKind::HyperellipticEven;
        fam.g = n % 2 == 0 ? n / 2 : (n - 1) / 2;
        for (unsigned d = 2; d <= n + 1; ++d) fam.degrees.push_back(d);
        fam.marked_points = n % 2 == 0 ? 1 : 2;
    } else if (label.family == 'D') {
        if (n < 4) throw std::invalid_argument("no curve family for D3");
        if (n % 2 == 0) {
            fam.kind = FamilyKind::DEven;
            fam.g = (n - 2) / 2;
            for (unsigned d = 2; d <= 4 * fam.g + 2; d += 2) fam.degrees.push_back(d);
            fam.degrees.push_back(static_cast<unsigned>(2 * fam.g + 2));
            fam.marked_points = 3;
        } else {
            fam.kind = FamilyKind::DOdd;
            fam.g = (n - 1) / 2;
            for (unsigned d = 2; d <= 4 * fam.g; d += 2) fam.degrees.push_back(d);
            fam.degrees.push_back(static_cast<unsigned>(2 * fam.g + 1));
            fam.marked_points = 2;
        }
    } else if (label.family == 'E' && n == 6) {
        fam.kind = FamilyKind::E6;
        fam.degrees = {2, 5, 8, 6, 9, 12};
        fam.marked_points = 1;
    } else if (label.family == 'E' && n == 7) {
        fam.kind = FamilyKind::E7;
        fam.degrees = {10, 2, 8, 14, 6, 12, 18};
        fam.marked_points = 2;
    } else if (label.family == 'E' && n == 8) {
        fam.kind = FamilyKind::E8;
        fam.degrees = {2, 8, 14, 20, 12, 18, 24, 30};
        fam.marked_points = 1;
    } else {
        throw std::invalid_argument("no curve family for this diagram");
    }

    if (fam.degrees.size() != fam.rank) throw std::logic_error("coefficient count mismatch");
    fam.genus = mod2::genus(rootsys::build(label));
    return fam;
}

namespace detail {

inline void require_point(const CurveFamily& fam, const BPoint& b) {
    if (b.size() != fam.rank) throw std::invalid_argument("coefficient tuple has the wrong length");
}

}  // namespace detail

// F(x, y; b) with the curve cut out by F = 0; integer coefficients throughout
inline XYPoly defining_polynomial(const CurveFamily& fam, const BPoint& b) {
    detail::require_point(fam, b);
    XYPoly f;
    std::size_t g = fam.g;
    switch (fam.kind) {
        case FamilyKind::HyperellipticOdd: {
            f.add(0, 2, 1);
            f.add(static_cast<unsigned>(2 * g + 1), 0, -1);
            for (std::size_t k = 0; k < fam.rank; ++k)
                f.add(static_cast<unsigned>(2 * g + 1 - fam.degrees[k]), 0, -b[k]);
            break;
        }
        case FamilyKind::HyperellipticEven: {
            f.add(0, 2, 1);
            f.add(static_cast<unsigned>(2 * g + 2), 0, -1);
            for (std::size_t k = 0; k < fam.rank; ++k)
                f.add(static_cast<unsigned>(2 * g + 2 - fam.degrees[k]), 0, -b[k]);
            break;
        }
        case FamilyKind::DEven: {
            f.add(1, 2, 1);
            f.add(0, 1, b.back());
            f.add(static_cast<unsigned>(2 * g + 1), 0, -1);
            for (std::size_t k = 0; k + 1 < fam.rank; ++k)
                f.add(static_cast<unsigned>(2 * g + 1 - fam.degrees[k] / 2), 0, -b[k]);
            break;
        }
        case FamilyKind::DOdd: {
            f.add(1, 2, 1);
            f.add(0, 1, b.back());
            f.add(static_cast<unsigned>(2 * g), 0, -1);
            for (std::size_t k = 0; k + 1 < fam.rank; ++k)
                f.add(static_cast<unsigned>(2 * g - fam.degrees[k] / 2), 0, -b[k]);
            break;
        }
        case FamilyKind::E6: {
            f.add(0, 3, 1);
            f.add(4, 0, -1);
            f.add(2, 1, -b[0]);
            f.add(1, 1, -b[1]);
            f.add(0, 1, -b[2]);
            f.add(2, 0, -b[3]);
            f.add(1, 0, -b[4]);
            f.add(0, 0, -b[5]);
            break;
        }
        case FamilyKind::E7: {
            f.add(0, 3, 1);
            f.add(3, 1, -1);
            f.add(2, 0, -b[0]);
            f.add(1, 2, -b[1]);
            f.add(1, 1, -b[2]);
            f.add(1, 0, -b[3]);
            f.add(0, 2, -b[4]);
            f.add(0, 1, -b[5]);
            f.add(0, 0, -b[6]);
            break;
        }
        case FamilyKind::E8: {
            f.add(0, 3, 1);
            f.add(5, 0, -1);
            f.add(3, 1, -b[0]);
            f.add(2, 1, -b[1]);
            f.add(1, 1, -b[2]);
            f.add(0, 1, -b[3]);
            f.add(3, 0, -b[4]);
            f.add(2, 0, -b[5]);
            f.add(1, 0, -b[6]);
            f.add(0, 0, -b[7]);
            break;
        }
    }
    return f;
}

// ---- heights and counting -------------------------------------------------

inline BPoint scale_point(const CurveFamily& fam, const BPoint& b, const Int& lambda) {
    detail::require_point(fam, b);
    BPoint out = b;
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] *= exactla::int_pow(lambda, fam.degrees[k]);
    return out;
}

// exact form of ht(b) < X for integral X
inline bool height_below(const CurveFamily& fam, const BPoint& b, const Int& X) {
    detail::require_point(fam, b);
    for (std::size_t k = 0; k < b.size(); ++k) {
        Int bound = exactla::int_pow(X, fam.degrees[k]);
        if (b[k] >= bound || -b[k] >= bound) return false;
    }
    return true;
}

inline double height(const CurveFamily& fam, const BPoint& b) {
    detail::require_point(fam, b);
    double best = 0;
    for (std::size_t k = 0; k < b.size(); ++k) {
        double v = std::pow(std::abs(b[k].get_d()), 1.0 / fam.degrees[k]);
        if (v > best) best = v;
    }
    return best;
}

// #\{b integral : ht(b) < X\} as the box product over the coefficient degrees
inline Int census(const CurveFamily& fam, const Int& X) {
    if (X < 1) throw std::invalid_argument("census needs X >= 1");
    Int total = 1;
    for (unsigned d : fam.degrees) total *= 2 * exactla::int_pow(X, d) - 1;
    return total;
}

// ---- hyperelliptic discriminants -------------------------------------------

namespace detail {

inline RatPoly x_side_polynomial(const CurveFamily& fam, const BPoint& b) {
    require_point(fam, b);
    std::size_t deg =
        fam.kind == FamilyKind::HyperellipticOdd ? 2 * fam.g + 1 : 2 * fam.g + 2;
    std::vector<Rat> coeffs(deg + 1, Rat(0));
    coeffs[deg] = 1;
    for (std::size_t k = 0; k < fam.rank; ++k) coeffs[deg - fam.degrees[k]] = b[k];
    return RatPoly(coeffs);
}

}  // namespace detail

// discriminant of the monic x-side; vanishes exactly on the singular fibers
inline Int family_disc(const CurveFamily& fam, const BPoint& b) {
    if (fam.kind != FamilyKind::HyperellipticOdd && fam.kind != FamilyKind::HyperellipticEven)
        throw std::invalid_argument("closed-form discriminant only for the hyperelliptic rows");
    Rat d = exactla::poly_disc(detail::x_side_polynomial(fam, b));
    if (d.get_den() != 1) throw std::logic_error("integral model produced a non-integral discriminant");
    return d.get_num();
}

// ---- singular fibers mod p ---------------------------------------------------

enum class PointClass { Node, Worse };

struct SingularPoint {
    long x = 0;
    long y = 0;
    PointClass cls = PointClass::Worse;
};

struct SingularFiberReport {
    long p = 0;
    std::vector<SingularPoint> points;
    bool smooth = false;  // no singular points on the scanned affine chart
};

namespace detail {

inline bool is_small_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace detail

// Brute-force scan of the affine chart over F_p. A singular point is a node
// exactly when its tangent cone is a nondegenerate binary quadratic form,
// detected by the Hessian determinant; this needs p > 3.
inline SingularFiberReport singular_scan(const CurveFamily& fam, const BPoint& b, long p) {
    if (p <= 3 || !detail::is_small_prime(p))
        throw std::invalid_argument("scan needs a prime p > 3");
    XYPoly f = defining_polynomial(fam, b);
    XYPoly fx = f.dx();
    XYPoly fy = f.dy();
    XYPoly fxx = fx.dx();
    XYPoly fxy = fx.dy();
    XYPoly fyy = fy.dy();

    SingularFiberReport report;
    report.p = p;
    for (long x = 0; x < p; ++x)
        for (long y = 0; y < p; ++y) {
            if (f.eval_mod(x, y, p) != 0) continue;
            if (fx.eval_mod(x, y, p) != 0 || fy.eval_mod(x, y, p) != 0) continue;
            long det = (fxx.eval_mod(x, y, p) * fyy.eval_mod(x, y, p) -
                        fxy.eval_mod(x, y, p) * fxy.eval_mod(x, y, p)) % p;
            report.points.push_back(
                {x, y, det % p != 0 ? PointClass::Node : PointClass::Worse});
        }
    report.smooth = report.points.empty();
    return report;
}

// degree of gcd(f, f') over F_p for the hyperelliptic x-side; positive degree
// with no rational singular point means the repeated roots live in an
// extension field, which the affine scan cannot see
inline int repeated_root_degree(const CurveFamily& fam, const BPoint& b, long p) {
    if (fam.kind != FamilyKind::HyperellipticOdd && fam.kind != FamilyKind::HyperellipticEven)
        throw std::invalid_argument("repeated-root degree only for the hyperelliptic rows");
    if (p <= 3 || !detail::is_small_prime(p))
        throw std::invalid_argument("needs a prime p > 3");

    RatPoly f = detail::x_side_polynomial(fam, b);
    auto reduce = [&](const RatPoly& q, std::size_t cap) {
        std::vector<long> c(cap + 1, 0);
        for (std::size_t k = 0; k <= static_cast<std::size_t>(q.degree()) && k <= cap; ++k) {
            Int num = q.coeff(k).get_num();
            c[k] = static_cast<long>(mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(p)));
        }
        while (c.size() > 1 && c.back() == 0) c.pop_back();
        return c;
    };
    std::size_t deg = static_cast<std::size_t>(f.degree());
    std::vector<long> a = reduce(f, deg);
    std::vector<long> bb(deg, 0);
    for (std::size_t k = 1; k <= deg; ++k)
        bb[k - 1] = static_cast<long>(
            mpz_fdiv_ui(Int(f.coeff(k).get_num() * static_cast<long>(k)).get_mpz_t(),
                        static_cast<unsigned long>(p)));
    while (bb.size() > 1 && bb.back() == 0) bb.pop_back();

    auto inv_mod = [&](long v) {
        long r = 1, base = ((v % p) + p) % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    auto is_zero = [](const std::vector<long>& v) { return v.size() == 1 && v[0] == 0; };

    while (!is_zero(bb)) {
        // a mod bb
        long lead_inv = inv_mod(bb.back());
        while (a.size() >= bb.size() && !is_zero(a)) {
            long factor = a.back() * lead_inv % p;
            std::size_t shift = a.size() - bb.size();
            for (std::size_t k = 0; k < bb.size(); ++k)
                a[k + shift] = ((a[k + shift] - factor * bb[k]) % p + p) % p;
            while (a.size() > 1 && a.back() == 0) a.pop_back();
            if (a.size() < bb.size()) break;
        }
        std::swap(a, bb);
    }
    return static_cast<int>(a.size() - 1);
}

// ---- sampling ------------------------------------------------------------------

struct NodalSummary {
    long p = 0;
    int attempts = 0;
    int kept = 0;          // samples with ord_p(disc) exactly one
    int unique_nodes = 0;  // kept samples whose scan found a single node
    std::vector<BPoint> failures;
};

// Random hyperelliptic fibers with discriminant of p-valuation one must show a
// single affine singular point and it must be a node; anything else is pushed
// into the failure list for inspection.
inline NodalSummary nodal_statistics(const CurveFamily& fam, long p, int kept_target,
                                     std::uint64_t seed) {
    if (fam.kind != FamilyKind::HyperellipticOdd && fam.kind != FamilyKind::HyperellipticEven)
        throw std::invalid_argument("nodal statistics need a computable discriminant");
    if (p <= 3 || !detail::is_small_prime(p))
        throw std::invalid_argument("needs a prime p > 3");

    std::mt19937_64 rng(seed);
    long box = p * p;
    NodalSummary s;
    s.p = p;
    int max_attempts = kept_target * static_cast<int>(p) * 60;
    while (s.kept < kept_target) {
        if (++s.attempts > max_attempts)
            throw std::runtime_error("sampling budget exhausted before reaching the target");
        BPoint b(fam.rank);
        for (Int& v : b) v = static_cast<long>(rng() % (2 * box + 1)) - box;
        Int disc = family_disc(fam, b);
        if (disc == 0 || disc % p != 0) continue;
        if ((disc / p) % p == 0) continue;
        ++s.kept;
        SingularFiberReport rep = singular_scan(fam, b, p);
        if (rep.points.size() == 1 && rep.points[0].cls == PointClass::Node)
            ++s.unique_nodes;
        else
            s.failures.push_back(b);
    }
    return s;
}

}  // namespace thetarep::curves
