#pragma once

// Simply-laced root systems (A_n, D_n, E6..E8) in simple-root coordinates.
// Conventions: simple root i is the i-th unit vector, the Cartan matrix is
// the Gram matrix of the simple roots, and a simple reflection acts on
// coordinate vectors as s_i(v) = v - (Cv)_i e_i.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "thetarep/exactla/matrix.hpp"

namespace thetarep::rootsys {

using exactla::Int;
using exactla::IntMatrix;
using exactla::Rat;
using exactla::RatMatrix;

using RootVec = std::vector<int>;

struct Label {
    char family = 0;  // 'A', 'D' or 'E'
    int rank = 0;

    std::string to_string() const { return std::string(1, family) + std::to_string(rank); }

    friend bool operator==(const Label& a, const Label& b) {
        return a.family == b.family && a.rank == b.rank;
    }
};

// Accepts "A1".."A99", "D3".., "E6", "E7", "E8". D2 is not simple and D-type
// coordinates below rank 3 have no fork node, so both are rejected here.
inline Label parse_label(const std::string& text) {
    if (text.size() < 2) throw std::invalid_argument("root system label too short: '" + text + "'");
    char fam = text[0];
    for (std::size_t i = 1; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("malformed root system label: '" + text + "'");
    int rank = std::atoi(text.c_str() + 1);
    bool ok = (fam == 'A' && rank >= 1) || (fam == 'D' && rank >= 3) ||
              (fam == 'E' && rank >= 6 && rank <= 8);
    if (!ok) throw std::invalid_argument("unsupported root system label: '" + text + "'");
    return Label{fam, rank};
}

struct RootSystem {
    Label label;
    IntMatrix cartan;                  // symmetric, diagonal 2
    std::vector<RootVec> simple_roots; // unit vectors, kept for callers
    std::vector<RootVec> roots;        // all roots, sorted lexicographically
    std::vector<IntMatrix> weyl_gens;  // s_i acting on root coordinates

    std::size_t rank() const { return static_cast<std::size_t>(label.rank); }
    std::size_t num_positive() const { return roots.size() / 2; }
};

namespace detail {

inline IntMatrix cartan_matrix(const Label& label) {
    std::size_t n = static_cast<std::size_t>(label.rank);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    if (label.family == 'A') {
        for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    } else if (label.family == 'D') {
        // chain 0..n-3 with both n-2 and n-1 attached to the fork node n-3
        for (std::size_t i = 0; i + 1 < n - 2; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(n - 3, n - 2);
        edges.emplace_back(n - 3, n - 1);
    } else {
        // Bourbaki numbering: chain 1-3-4-5-..., node 2 hangs off node 4
        edges.emplace_back(0, 2);
        edges.emplace_back(1, 3);
        for (std::size_t i = 2; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    }
    IntMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i) c.at(i, i) = 2;
    for (auto [a, b] : edges) {
        c.at(a, b) = -1;
        c.at(b, a) = -1;
    }
    return c;
}

inline RootVec reflect(const IntMatrix& cartan, const RootVec& v, std::size_t i) {
    long pair = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
        pair += cartan.at(i, j).get_si() * v[j];
    RootVec w = v;
    w[static_cast<std::size_t>(i)] -= static_cast<int>(pair);
    return w;
}

}  // namespace detail

inline RootSystem build(const Label& label) {
    RootSystem rs;
    rs.label = label;
    rs.cartan = detail::cartan_matrix(label);
    std::size_t n = rs.rank();

    for (std::size_t i = 0; i < n; ++i) {
        RootVec e(n, 0);
        e[i] = 1;
        rs.simple_roots.push_back(std::move(e));
    }

    for (std::size_t i = 0; i < n; ++i) {
        IntMatrix s = IntMatrix::identity(n);
        for (std::size_t j = 0; j < n; ++j) s.at(i, j) -= rs.cartan.at(i, j);
        rs.weyl_gens.push_back(std::move(s));
    }

    std::set<RootVec> closed(rs.simple_roots.begin(), rs.simple_roots.end());
    std::vector<RootVec> frontier(rs.simple_roots);
    while (!frontier.empty()) {
        std::vector<RootVec> next;
        for (const RootVec& v : frontier)
            for (std::size_t i = 0; i < n; ++i) {
                RootVec w = detail::reflect(rs.cartan, v, i);
                if (closed.insert(w).second) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    rs.roots.assign(closed.begin(), closed.end());
    return rs;
}

inline RootSystem build(const std::string& label) { return build(parse_label(label)); }

inline int height(const RootVec& v) {
    int h = 0;
    for (int c : v) h += c;
    return h;
}

inline bool is_positive(const RootVec& v) {
    for (int c : v)
        if (c < 0) return false;
    return true;
}

inline std::vector<RootVec> positive_roots(const RootSystem& rs) {
    std::vector<RootVec> pos;
    for (const RootVec& v : rs.roots)
        if (is_positive(v)) pos.push_back(v);
    return pos;
}

// The unique positive root dominating every other one coordinatewise.
inline RootVec highest_root(const RootSystem& rs) {
    std::vector<RootVec> pos = positive_roots(rs);
    for (const RootVec& cand : pos) {
        bool top = true;
        for (const RootVec& other : pos)
            for (std::size_t j = 0; j < cand.size(); ++j)
                if (other[j] > cand[j]) {
                    top = false;
                    break;
                }
        if (top) return cand;
    }
    throw std::logic_error("no coordinatewise-maximal positive root found");
}

struct HeightTable {
    std::map<RootVec, int> height_of;  // positive roots only
    std::vector<std::size_t> counts;   // counts[h-1] = #roots of height h
};

inline HeightTable height_table(const RootSystem& rs) {
    HeightTable t;
    for (const RootVec& v : positive_roots(rs)) {
        int h = height(v);
        t.height_of[v] = h;
        if (t.counts.size() < static_cast<std::size_t>(h)) t.counts.resize(h);
        ++t.counts[static_cast<std::size_t>(h) - 1];
    }
    return t;
}

inline int coxeter_number(const RootSystem& rs) { return height(highest_root(rs)) + 1; }

// Exponents as the conjugate of the (weakly decreasing) height-count
// partition; avoids any eigenvalue computation.
inline std::vector<int> exponents(const RootSystem& rs) {
    HeightTable t = height_table(rs);
    std::vector<int> exp;
    for (std::size_t j = 1; j <= t.counts[0]; ++j) {
        int part = 0;
        for (std::size_t c : t.counts)
            if (c >= j) ++part;
        exp.push_back(part);
    }
    std::sort(exp.begin(), exp.end());
    return exp;
}

inline std::vector<int> invariant_degrees(const RootSystem& rs) {
    std::vector<int> deg = exponents(rs);
    for (int& d : deg) ++d;
    return deg;
}

inline Int weyl_order(const RootSystem& rs) {
    Int w(1);
    for (int d : invariant_degrees(rs)) w *= d;
    return w;
}

inline std::size_t dim_v(const RootSystem& rs) { return rs.roots.size() / 2 + rs.rank(); }

struct LongestElement {
    IntMatrix matrix;    // action on root coordinates
    std::size_t length;  // reflections applied; equals #positive roots
};

// Drive a strictly antidominant integer vector (a positive multiple of
// -C^{-1}*ones) into the dominant chamber, always reflecting at the lowest
// negative wall. The applied word is the longest element.
inline LongestElement longest_element(const RootSystem& rs) {
    std::size_t n = rs.rank();
    RatMatrix sys = exactla::to_rational(rs.cartan);
    std::vector<Rat> rho;
    if (!exactla::rational_solve(sys, std::vector<Rat>(n, Rat(1)), rho))
        throw std::logic_error("Cartan matrix is singular");
    Int scale(1);
    for (const Rat& r : rho) scale = exactla::lcm(scale, Int(r.get_den()));
    std::vector<Int> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = -Int(rho[i] * Rat(scale));

    LongestElement w{IntMatrix::identity(n), 0};
    for (;;) {
        std::size_t wall = n;
        Int pair;
        for (std::size_t i = 0; i < n && wall == n; ++i) {
            pair = 0;
            for (std::size_t j = 0; j < n; ++j) pair += rs.cartan.at(i, j) * x[j];
            if (pair < 0) wall = i;
        }
        if (wall == n) break;
        x[wall] -= pair;
        w.matrix = rs.weyl_gens[wall] * w.matrix;
        ++w.length;
    }
    return w;
}

inline bool minus_one_in_weyl(const RootSystem& rs) {
    LongestElement w = longest_element(rs);
    return w.matrix == -IntMatrix::identity(rs.rank());
}

}  // namespace thetarep::rootsys
