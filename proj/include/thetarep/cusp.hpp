#pragma once

// Boundary combinatorics for the rank-2n orthogonal pair model: enumerate the
// upward-closed weight subsets, filter them through the four reducibility
// conditions, decompose simple roots as sums of surviving weights, and produce
// exact linear-programming certificates (with an independent re-checker) for
// the boundedness inequalities and their inductive variant.

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "thetarep/d2n.hpp"
#include "thetarep/exactla/lp.hpp"

namespace thetarep::cusp {

using exactla::Rat;
using d2n::SGVector;
using d2n::WeightD2n;

// One bit per weight-grid position, row-major from the top-left corner.
using Mask = std::uint64_t;

// ---- precomputed order tables ------------------------------------------

class WeightPoset {
public:
    explicit WeightPoset(std::size_t n) : n_(n), size_(4 * n * n) {
        if (n < 2) throw std::invalid_argument("weight poset needs n >= 2");
        if (size_ > 64) throw std::invalid_argument("weight poset masks hold at most 64 positions (n <= 4)");
        weights_.reserve(size_);
        for (std::size_t r = 1; r <= 2 * n; ++r)
            for (std::size_t c = 1; c <= 2 * n; ++c) weights_.push_back(d2n::weight_at(n, r, c));
        sg_.reserve(size_);
        for (const WeightD2n& w : weights_) sg_.push_back(d2n::sg_coords(w));
        up_.assign(size_, 0);
        comparable_.assign(size_, 0);
        for (std::size_t p = 0; p < size_; ++p)
            for (std::size_t q = 0; q < size_; ++q)
                if (d2n::leq(weights_[p], weights_[q])) {
                    up_[p] |= bit(q);
                    comparable_[p] |= bit(q);
                    comparable_[q] |= bit(p);
                }
        for (int g = 0; g < 4; ++g) {
            omega_perm_[g].resize(size_);
            for (std::size_t p = 0; p < size_; ++p)
                omega_perm_[g][p] = index_of(d2n::omega_act(static_cast<d2n::Omega>(g), weights_[p]));
        }
        strip_ = 0;
        for (std::size_t p = 0; p < size_; ++p) {
            auto [r, c] = d2n::position_of(weights_[p]);
            if (r == 1 || r == 2 * n || c == 1 || c == 2 * n) strip_ |= bit(p);
        }
    }

    std::size_t n() const { return n_; }
    std::size_t size() const { return size_; }
    Mask bit(std::size_t p) const { return Mask(1) << p; }
    Mask full() const { return size_ == 64 ? ~Mask(0) : (Mask(1) << size_) - 1; }
    Mask strip() const { return strip_; }

    std::size_t index(std::size_t row, std::size_t col) const {
        if (row < 1 || row > 2 * n_ || col < 1 || col > 2 * n_)
            throw std::out_of_range("weight position out of range");
        return (row - 1) * 2 * n_ + (col - 1);
    }
    std::size_t index_of(const WeightD2n& w) const {
        auto [r, c] = d2n::position_of(w);
        return index(r, c);
    }

    const WeightD2n& weight(std::size_t p) const { return weights_.at(p); }
    const SGVector& sg(std::size_t p) const { return sg_.at(p); }
    // positions whose weight dominates (respectively, is comparable to) p
    Mask up(std::size_t p) const { return up_.at(p); }
    Mask comparable(std::size_t p) const { return comparable_.at(p); }
    std::size_t omega_image(d2n::Omega g, std::size_t p) const {
        return omega_perm_[static_cast<int>(g)].at(p);
    }

private:
    std::size_t n_;
    std::size_t size_;
    std::vector<WeightD2n> weights_;
    std::vector<SGVector> sg_;
    std::vector<Mask> up_;
    std::vector<Mask> comparable_;
    std::array<std::vector<std::size_t>, 4> omega_perm_;
    Mask strip_ = 0;
};

// ---- upward-closed subsets ----------------------------------------------

struct CuspSubset {
    std::size_t n = 0;
    Mask bits = 0;
    int card = 0;

    bool contains(std::size_t p) const { return (bits >> p) & 1; }

    std::string hex() const {
        std::size_t digits = (4 * n * n + 3) / 4;
        std::string out(digits, '0');
        for (std::size_t d = 0; d < digits; ++d) {
            unsigned nib = static_cast<unsigned>((bits >> (4 * (digits - 1 - d))) & 0xf);
            out[d] = "0123456789abcdef"[nib];
        }
        return "0x" + out;
    }

    friend bool operator==(const CuspSubset& a, const CuspSubset& b) {
        return a.n == b.n && a.bits == b.bits;
    }
};

inline int popcount(Mask m) {
    int c = 0;
    while (m) {
        m &= m - 1;
        ++c;
    }
    return c;
}

inline bool is_upward_closed(const WeightPoset& poset, Mask bits) {
    for (std::size_t p = 0; p < poset.size(); ++p)
        if ((bits >> p) & 1)
            if ((poset.up(p) & bits) != poset.up(p)) return false;
    return true;
}

inline CuspSubset subset_from_mask(const WeightPoset& poset, Mask bits) {
    if (bits == 0) throw std::invalid_argument("cusp subset must be nonempty");
    if (!is_upward_closed(poset, bits)) throw std::invalid_argument("cusp subset must be upward-closed");
    return CuspSubset{poset.n(), bits, popcount(bits)};
}

// smallest upward-closed superset of the seed positions
inline CuspSubset close_up(const WeightPoset& poset, const std::vector<std::size_t>& seed) {
    if (seed.empty()) throw std::invalid_argument("cusp subset must be nonempty");
    Mask bits = 0;
    for (std::size_t p : seed) bits |= poset.up(p);
    return CuspSubset{poset.n(), bits, popcount(bits)};
}

inline CuspSubset apply_omega(const WeightPoset& poset, const CuspSubset& m, d2n::Omega g) {
    Mask out = 0;
    for (std::size_t p = 0; p < poset.size(); ++p)
        if (m.contains(p)) out |= poset.bit(poset.omega_image(g, p));
    return CuspSubset{m.n, out, m.card};
}

// ---- enumeration ---------------------------------------------------------

struct EnumerationCapError : std::runtime_error {
    std::size_t emitted;
    explicit EnumerationCapError(std::size_t count)
        : std::runtime_error("enumeration cap exceeded after " + std::to_string(count) + " subsets"),
          emitted(count) {}
};

inline constexpr std::size_t kDefaultEnumCap = 1u << 22;

// Every nonempty upward-closed subset is the closure of its antichain of
// minimal elements, so a depth-first scan over antichains (positions taken in
// increasing index order, skipping anything comparable to a chosen element)
// emits each subset exactly once.
template <typename Visit>
std::size_t enumerate_c(const WeightPoset& poset, Visit&& visit, std::size_t cap = kDefaultEnumCap) {
    std::size_t emitted = 0;
    auto dfs = [&](auto&& self, std::size_t start, Mask closure, Mask blocked) -> void {
        for (std::size_t q = start; q < poset.size(); ++q) {
            if ((blocked >> q) & 1) continue;
            Mask next = closure | poset.up(q);
            if (emitted == cap) throw EnumerationCapError(emitted);
            ++emitted;
            visit(CuspSubset{poset.n(), next, popcount(next)});
            self(self, q + 1, next, blocked | poset.comparable(q));
        }
    };
    dfs(dfs, 0, 0, 0);
    return emitted;
}

inline std::vector<CuspSubset> enumerate_c(const WeightPoset& poset, std::size_t cap = kDefaultEnumCap) {
    std::vector<CuspSubset> out;
    enumerate_c(poset, [&](const CuspSubset& m) { out.push_back(m); }, cap);
    return out;
}

// ---- reducibility filter --------------------------------------------------

struct CGoodVerdict {
    bool pass = false;
    int violated = 0;  // 1..4 for failures, 0 on pass
    std::vector<WeightD2n> witnesses;
};

// The four exclusion conditions, checked in order; the first one violated is
// reported together with the offending weights that landed inside M.
inline CGoodVerdict is_cgood(const WeightPoset& poset, const CuspSubset& m) {
    std::size_t n = poset.n();
    auto in = [&](const WeightD2n& w) { return m.contains(poset.index_of(w)); };
    auto wt = [&](std::size_t ti, int tsgn, std::size_t si, int ssgn) {
        return WeightD2n{n, ti, tsgn, si, ssgn};
    };

    CGoodVerdict v;
    for (std::size_t i = 1; i + 1 <= n; ++i)
        for (const WeightD2n& w : {wt(i, 1, i, -1), wt(i, -1, i, 1)})
            if (in(w)) {
                v.violated = 1;
                v.witnesses.push_back(w);
            }
    if (v.violated) return v;

    for (int tsgn : {1, -1})
        for (int ssgn : {1, -1})
            if (in(wt(n, tsgn, n, ssgn))) {
                v.violated = 2;
                v.witnesses.push_back(wt(n, tsgn, n, ssgn));
            }
    if (v.violated) return v;

    for (std::size_t i = 1; i + 2 <= n; ++i) {
        WeightD2n a = wt(i, 1, i + 1, -1);
        WeightD2n b = wt(i + 1, -1, i, 1);  // s_i - t_{i+1}
        if (in(a) && in(b)) {
            v.violated = 3;
            v.witnesses.push_back(a);
            v.witnesses.push_back(b);
        }
    }
    if (v.violated) return v;

    std::vector<WeightD2n> corner = {wt(n - 1, 1, n, -1), wt(n - 1, 1, n, 1), wt(n, 1, n - 1, 1),
                                     wt(n, -1, n - 1, 1)};
    std::vector<WeightD2n> hits;
    for (const WeightD2n& w : corner)
        if (in(w)) hits.push_back(w);
    if (hits.size() > 2) {
        v.violated = 4;
        v.witnesses = hits;
        return v;
    }

    v.pass = true;
    return v;
}

// ---- simple-root decompositions --------------------------------------------

namespace detail {

// coefficients over t_1..t_n, s_1..s_n as plain integers
inline std::vector<int> weight_ts(const WeightD2n& w) {
    std::vector<int> ts(2 * w.n, 0);
    ts[w.t_index - 1] = w.t_sign;
    ts[w.n + w.s_index - 1] += w.s_sign;
    return ts;
}

// basis index 0..n-1 for the t-side simple roots, n..2n-1 for the s-side
inline std::vector<int> sg_root_ts(std::size_t n, std::size_t idx) {
    std::vector<int> ts(2 * n, 0);
    std::size_t off = idx < n ? 0 : n;
    std::size_t k = idx < n ? idx : idx - n;
    if (k + 1 < n) {
        ts[off + k] = 1;
        ts[off + k + 1] = -1;
    } else {
        ts[off + n - 2] = 1;
        ts[off + n - 1] = 1;
    }
    return ts;
}

}  // namespace detail

// For each of the 2n simple roots, a pair of weights outside M summing to it,
// found by scanning position pairs in index order. A miss would contradict
// the exclusion conditions, so it is reported as a logic error.
inline std::vector<std::pair<WeightD2n, WeightD2n>> lemma_a8(const WeightPoset& poset,
                                                             const CuspSubset& m) {
    std::size_t n = poset.n();
    std::vector<std::pair<WeightD2n, WeightD2n>> out;
    for (std::size_t idx = 0; idx < 2 * n; ++idx) {
        std::vector<int> target = detail::sg_root_ts(n, idx);
        bool found = false;
        for (std::size_t p = 0; p < poset.size() && !found; ++p) {
            if (m.contains(p)) continue;
            std::vector<int> first = detail::weight_ts(poset.weight(p));
            for (std::size_t q = p; q < poset.size() && !found; ++q) {
                if (m.contains(q)) continue;
                std::vector<int> sum = detail::weight_ts(poset.weight(q));
                for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += first[k];
                if (sum == target) {
                    out.emplace_back(poset.weight(p), poset.weight(q));
                    found = true;
                }
            }
        }
        if (!found)
            throw std::logic_error("simple root " + std::to_string(idx) +
                                   " is not a sum of two weights outside M");
    }
    return out;
}

// ---- linear-programming certificates ---------------------------------------

struct LPCertificate {
    std::size_t n = 0;
    Mask subset = 0;
    bool induction = false;
    std::map<std::size_t, Rat> f;  // position -> coefficient, nonzero entries only
    Rat lambda_star;
    Rat margin;  // lambda_star / 2; both strict inequalities hold with this slack
    Rat sum_f;
    Rat budget;

    Rat budget_slack() const { return budget - sum_f; }
};

struct LPOutcome {
    Rat lambda_star;
    std::optional<LPCertificate> certificate;
};

namespace detail {

inline SGVector scaled(SGVector v, const Rat& c) {
    for (Rat& r : v.beta) r *= c;
    for (Rat& r : v.gamma) r *= c;
    return v;
}

// target vector before the correction term: for the full problem the sum of
// positive ambient roots minus the subset sum, for the induction step the
// boundary-strip analogue with budget #(M restricted to the strip)
inline std::pair<SGVector, Rat> residual_and_budget(const WeightPoset& poset, const CuspSubset& m,
                                                    bool induction) {
    std::size_t n = poset.n();
    SGVector residual(n);
    Mask charged = m.bits;
    if (induction) {
        residual = scaled(d2n::sg_coords(WeightD2n{n, 1, 1, 1, 1}), Rat(2 * (n - 1)));
        charged &= poset.strip();
    } else {
        residual = d2n::sum_pos_roots_g(n);
    }
    for (std::size_t p = 0; p < poset.size(); ++p)
        if ((charged >> p) & 1) residual = residual - poset.sg(p);
    return {residual, Rat(popcount(charged))};
}

inline const Rat& coord(const SGVector& v, std::size_t j) {
    return j < v.n ? v.beta[j] : v.gamma[j - v.n];
}

inline LPOutcome solve_margin_lp(const WeightPoset& poset, const CuspSubset& m, bool induction) {
    if (m.n != poset.n()) throw std::invalid_argument("subset belongs to a different poset");
    auto [residual, budget] = residual_and_budget(poset, m, induction);

    std::vector<std::size_t> support;
    for (std::size_t p = 0; p < poset.size(); ++p)
        if (!m.contains(p)) support.push_back(p);

    // variables: one coefficient per weight outside M, then the margin
    std::size_t nv = support.size() + 1;
    exactla::LPProblem prob;
    prob.num_vars = nv;
    prob.objective.assign(nv, Rat(0));
    prob.objective.back() = 1;
    prob.signs.assign(nv, exactla::VarSign::NONNEG);
    prob.signs.back() = exactla::VarSign::FREE;

    std::size_t ncoord = 2 * poset.n();
    for (std::size_t j = 0; j < ncoord; ++j) {
        exactla::LPConstraint row;
        row.a.assign(nv, Rat(0));
        for (std::size_t k = 0; k < support.size(); ++k) row.a[k] = coord(poset.sg(support[k]), j);
        row.a.back() = -1;
        row.rel = exactla::Rel::GE;
        row.b = -coord(residual, j);
        prob.rows.push_back(std::move(row));
    }
    exactla::LPConstraint total;
    total.a.assign(nv, Rat(1));
    total.rel = exactla::Rel::LE;
    total.b = budget;
    prob.rows.push_back(std::move(total));

    exactla::LPResult res = exactla::lp_max(prob);
    if (res.status != exactla::LPStatus::OPTIMAL)
        throw std::logic_error("margin program must be feasible and bounded");

    LPOutcome out;
    out.lambda_star = res.value;
    if (res.value > 0) {
        LPCertificate cert;
        cert.n = poset.n();
        cert.subset = m.bits;
        cert.induction = induction;
        cert.lambda_star = res.value;
        cert.margin = res.value / 2;
        cert.budget = budget;
        cert.sum_f = 0;
        for (std::size_t k = 0; k < support.size(); ++k) {
            if (res.point[k] == 0) continue;
            cert.f[support[k]] = res.point[k];
            cert.sum_f += res.point[k];
        }
        out.certificate = std::move(cert);
    }
    return out;
}

}  // namespace detail

inline LPOutcome solve_cusp_lp(const WeightPoset& poset, const CuspSubset& m) {
    return detail::solve_margin_lp(poset, m, false);
}

inline LPOutcome solve_induction_lp(const WeightPoset& poset, const CuspSubset& m) {
    if (poset.n() < 3) throw std::invalid_argument("induction step needs n >= 3");
    return detail::solve_margin_lp(poset, m, true);
}

// Substitution-only re-check of a certificate: nonnegative coefficients
// supported outside M, every basis coordinate of the target at least the
// margin, and total mass under the budget with the same slack. Shares the
// table lookups with the solver but none of the simplex machinery.
inline bool check_certificate(const WeightPoset& poset, const LPCertificate& cert,
                              std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (cert.n != poset.n()) return fail("certificate belongs to a different poset");
    if (!(cert.margin > 0)) return fail("margin is not positive");
    CuspSubset m = subset_from_mask(poset, cert.subset);
    auto [residual, budget] = detail::residual_and_budget(poset, m, cert.induction);
    if (budget != cert.budget) return fail("stored budget disagrees with the subset");

    Rat sum(0);
    SGVector target = residual;
    for (const auto& [p, value] : cert.f) {
        if (p >= poset.size()) return fail("coefficient index out of range");
        if (m.contains(p)) return fail("coefficient supported inside M");
        if (value < 0) return fail("negative coefficient");
        sum += value;
        target = target + detail::scaled(poset.sg(p), value);
    }
    if (sum != cert.sum_f) return fail("stored coefficient sum disagrees");
    if (sum + cert.margin > budget) return fail("budget inequality fails at the stated margin");
    for (std::size_t j = 0; j < 2 * poset.n(); ++j)
        if (detail::coord(target, j) < cert.margin) return fail("coordinate below the stated margin");
    return true;
}

// ---- batch verification -----------------------------------------------------

struct CuspRecord {
    CuspSubset m;
    CGoodVerdict verdict;
    Rat lambda_star;
    std::optional<LPCertificate> cert;
    std::optional<Rat> induction_lambda;
    std::optional<LPCertificate> induction_cert;
    double wall_ms = 0;

    std::string ledger_line() const {
        std::ostringstream os;
        os << "M=" << m.hex() << " card=" << m.card;
        os << " verdict=" << (verdict.pass ? std::string("good") : "cond" + std::to_string(verdict.violated));
        os << " lambda=" << lambda_star;
        if (cert) {
            os << " sumf=" << cert->sum_f << " margin=" << cert->margin;
        } else {
            os << " sumf=- margin=-";
        }
        if (induction_lambda) {
            os << " ind_lambda=" << *induction_lambda;
            os << " ind_sumf=" << (induction_cert ? to_string_rat(induction_cert->sum_f) : std::string("-"));
        }
        os << " ms=" << wall_ms;
        return os.str();
    }

private:
    static std::string to_string_rat(const Rat& r) {
        std::ostringstream os;
        os << r;
        return os.str();
    }
};

struct CuspReport {
    std::size_t n = 0;
    std::size_t total = 0;
    std::size_t good = 0;
    std::size_t certified = 0;
    std::size_t induction_certified = 0;
    std::size_t failures = 0;
    std::size_t omega_orbits = 0;
    std::size_t omega_orbits_good = 0;
    std::optional<Rat> min_margin;
    Rat max_sum_f;
    std::vector<CuspRecord> records;

    bool ok() const { return failures == 0 && certified == good; }
};

// Enumerates every member of the family, classifies it, solves the margin
// program for all of them (the outcome on filtered-out members is recorded as
// data), and demands a checked certificate, plus the inductive one for n >= 3,
// from every member that passes the filter.
inline CuspReport verify_all(const WeightPoset& poset, std::size_t cap = kDefaultEnumCap) {
    CuspReport report;
    report.n = poset.n();
    report.max_sum_f = 0;
    std::set<Mask> orbit_reps;
    std::set<Mask> orbit_reps_good;

    enumerate_c(
        poset,
        [&](const CuspSubset& m) {
            auto t0 = std::chrono::steady_clock::now();
            CuspRecord rec;
            rec.m = m;
            rec.verdict = is_cgood(poset, m);

            LPOutcome main = solve_cusp_lp(poset, m);
            rec.lambda_star = main.lambda_star;
            rec.cert = main.certificate;

            Mask rep = m.bits;
            for (int g = 1; g < 4; ++g)
                rep = std::min(rep, apply_omega(poset, m, static_cast<d2n::Omega>(g)).bits);
            orbit_reps.insert(rep);

            ++report.total;
            if (rec.verdict.pass) {
                ++report.good;
                orbit_reps_good.insert(rep);
                bool certified = rec.cert && check_certificate(poset, *rec.cert);
                bool ind_ok = true;
                if (poset.n() >= 3) {
                    LPOutcome ind = solve_induction_lp(poset, m);
                    rec.induction_lambda = ind.lambda_star;
                    rec.induction_cert = ind.certificate;
                    ind_ok = rec.induction_cert && check_certificate(poset, *rec.induction_cert);
                    if (ind_ok) ++report.induction_certified;
                }
                if (certified) {
                    ++report.certified;
                    if (!report.min_margin || rec.cert->margin < *report.min_margin)
                        report.min_margin = rec.cert->margin;
                    if (rec.cert->sum_f > report.max_sum_f) report.max_sum_f = rec.cert->sum_f;
                }
                if (!certified || !ind_ok) ++report.failures;
            }

            auto t1 = std::chrono::steady_clock::now();
            rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            report.records.push_back(std::move(rec));
        },
        cap);

    report.omega_orbits = orbit_reps.size();
    report.omega_orbits_good = orbit_reps_good.size();
    return report;
}

inline void write_ledger(const CuspReport& report, std::ostream& os) {
    for (const CuspRecord& rec : report.records) os << rec.ledger_line() << '\n';
}

}  // namespace thetarep::cusp
