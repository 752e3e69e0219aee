#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "scalar.hpp"

namespace thetarep::exactla {

enum class Rel { LE, GE, EQ };
enum class VarSign { NONNEG, FREE };
enum class LPStatus { OPTIMAL, UNBOUNDED, INFEASIBLE };

struct LPConstraint {
    std::vector<Rat> a;
    Rel rel = Rel::LE;
    Rat b;
};

// max objective . x  subject to the rows; per-variable sign constraints.
struct LPProblem {
    std::size_t num_vars = 0;
    std::vector<Rat> objective;
    std::vector<LPConstraint> rows;
    std::vector<VarSign> signs;
};

struct LPResult {
    LPStatus status = LPStatus::INFEASIBLE;
    Rat value;
    std::vector<Rat> point;  // original variables, only when OPTIMAL
};

namespace detail {

// Dense tableau in equation form. Row i reads
//   x_{basis[i]} + sum_{j nonbasic} t[i][j] x_j = rhs[i],
// and the objective z = obj_const + sum_j robj[j] x_j with robj zero on basic
// columns. Entering/leaving choices follow Bland's rule throughout, which
// guarantees termination and makes every solve deterministic.
struct Tableau {
    std::size_t ncols = 0;
    std::vector<std::vector<Rat>> t;
    std::vector<Rat> rhs;
    std::vector<std::size_t> basis;
    std::vector<Rat> robj;
    Rat obj_const;

    void pivot(std::size_t row, std::size_t col) {
        Rat inv = Rat(1) / t[row][col];
        for (auto& v : t[row]) v *= inv;
        rhs[row] *= inv;
        t[row][col] = 1;  // normalize away rounding-free residue
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i == row || t[i][col] == 0) continue;
            Rat f = t[i][col];
            for (std::size_t j = 0; j < ncols; ++j) t[i][j] -= f * t[row][j];
            t[i][col] = 0;
            rhs[i] -= f * rhs[row];
        }
        if (robj[col] != 0) {
            Rat f = robj[col];
            for (std::size_t j = 0; j < ncols; ++j) robj[j] -= f * t[row][j];
            robj[col] = 0;
            obj_const += f * rhs[row];
        }
        basis[row] = col;
    }

    // Bland: smallest-index improving column; among minimum-ratio rows the
    // one whose basic variable has the smallest index.
    LPStatus run(const std::vector<bool>& eligible) {
        for (;;) {
            std::size_t enter = ncols;
            for (std::size_t j = 0; j < ncols; ++j)
                if (eligible[j] && robj[j] > 0) {
                    enter = j;
                    break;
                }
            if (enter == ncols) return LPStatus::OPTIMAL;
            std::size_t leave = t.size();
            Rat best;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i][enter] <= 0) continue;
                Rat ratio = rhs[i] / t[i][enter];
                if (leave == t.size() || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == t.size()) return LPStatus::UNBOUNDED;
            pivot(leave, enter);
        }
    }
};

}  // namespace detail

inline LPResult lp_max(const LPProblem& prob) {
    if (prob.objective.size() != prob.num_vars || prob.signs.size() != prob.num_vars)
        throw std::invalid_argument("lp_max: objective/signs size mismatch");
    for (const auto& row : prob.rows)
        if (row.a.size() != prob.num_vars)
            throw std::invalid_argument("lp_max: constraint size mismatch");

    // expand frees into differences of nonnegatives
    std::vector<std::size_t> pos_col(prob.num_vars), neg_col(prob.num_vars, SIZE_MAX);
    std::size_t nstruct = 0;
    for (std::size_t j = 0; j < prob.num_vars; ++j) {
        pos_col[j] = nstruct++;
        if (prob.signs[j] == VarSign::FREE) neg_col[j] = nstruct++;
    }
    std::size_t nslack = 0;
    for (const auto& row : prob.rows)
        if (row.rel != Rel::EQ) ++nslack;

    const std::size_t m = prob.rows.size();
    const std::size_t nart = m;
    const std::size_t ncols = nstruct + nslack + nart;

    detail::Tableau tb;
    tb.ncols = ncols;
    tb.t.assign(m, std::vector<Rat>(ncols, Rat(0)));
    tb.rhs.assign(m, Rat(0));
    tb.basis.resize(m);

    std::size_t slack_at = nstruct;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = prob.rows[i];
        for (std::size_t j = 0; j < prob.num_vars; ++j) {
            tb.t[i][pos_col[j]] = row.a[j];
            if (neg_col[j] != SIZE_MAX) tb.t[i][neg_col[j]] = -row.a[j];
        }
        if (row.rel == Rel::LE)
            tb.t[i][slack_at++] = 1;
        else if (row.rel == Rel::GE)
            tb.t[i][slack_at++] = -1;
        tb.rhs[i] = row.b;
        if (tb.rhs[i] < 0) {
            for (auto& v : tb.t[i]) v = -v;
            tb.rhs[i] = -tb.rhs[i];
        }
        tb.t[i][nstruct + nslack + i] = 1;
        tb.basis[i] = nstruct + nslack + i;
    }

    // phase 1: maximize -sum(artificials)
    tb.robj.assign(ncols, Rat(0));
    tb.obj_const = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < nstruct + nslack; ++j) tb.robj[j] += tb.t[i][j];
        tb.obj_const -= tb.rhs[i];
    }
    std::vector<bool> eligible(ncols, true);
    LPStatus st = tb.run(eligible);
    if (st == LPStatus::UNBOUNDED)
        throw std::logic_error("lp_max: phase-1 objective unbounded");
    if (tb.obj_const != 0) return {LPStatus::INFEASIBLE, Rat(0), {}};

    // drive leftover artificials out of the basis; drop redundant rows
    for (std::size_t i = tb.t.size(); i-- > 0;) {
        if (tb.basis[i] < nstruct + nslack) continue;
        std::size_t col = ncols;
        for (std::size_t j = 0; j < nstruct + nslack; ++j)
            if (tb.t[i][j] != 0) {
                col = j;
                break;
            }
        if (col != ncols) {
            tb.pivot(i, col);
        } else {
            tb.t.erase(tb.t.begin() + static_cast<long>(i));
            tb.rhs.erase(tb.rhs.begin() + static_cast<long>(i));
            tb.basis.erase(tb.basis.begin() + static_cast<long>(i));
        }
    }

    // phase 2: real objective over structural columns, artificials frozen
    for (std::size_t j = nstruct + nslack; j < ncols; ++j) eligible[j] = false;
    tb.robj.assign(ncols, Rat(0));
    tb.obj_const = 0;
    for (std::size_t j = 0; j < prob.num_vars; ++j) {
        tb.robj[pos_col[j]] = prob.objective[j];
        if (neg_col[j] != SIZE_MAX) tb.robj[neg_col[j]] = -prob.objective[j];
    }
    for (std::size_t i = 0; i < tb.t.size(); ++i) {
        std::size_t bj = tb.basis[i];
        if (tb.robj[bj] == 0) continue;
        Rat f = tb.robj[bj];
        for (std::size_t j = 0; j < ncols; ++j) tb.robj[j] -= f * tb.t[i][j];
        tb.robj[bj] = 0;
        tb.obj_const += f * tb.rhs[i];
    }
    st = tb.run(eligible);
    if (st == LPStatus::UNBOUNDED) return {LPStatus::UNBOUNDED, Rat(0), {}};

    std::vector<Rat> expanded(nstruct + nslack, Rat(0));
    for (std::size_t i = 0; i < tb.t.size(); ++i)
        if (tb.basis[i] < expanded.size()) expanded[tb.basis[i]] = tb.rhs[i];
    LPResult res;
    res.status = LPStatus::OPTIMAL;
    res.value = tb.obj_const;
    res.point.resize(prob.num_vars);
    for (std::size_t j = 0; j < prob.num_vars; ++j) {
        res.point[j] = expanded[pos_col[j]];
        if (neg_col[j] != SIZE_MAX) res.point[j] -= expanded[neg_col[j]];
    }
    return res;
}

}  // namespace thetarep::exactla
