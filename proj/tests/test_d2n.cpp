#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "thetarep/d2n.hpp"

using namespace thetarep;
using namespace thetarep::d2n;
using exactla::IntMatrix;
using exactla::Rat;
using exactla::RatMatrix;
using exactla::RatPoly;

namespace {

RatMatrix random_rat_matrix(std::mt19937_64& rng, std::size_t m, int lo, int hi) {
    RatMatrix a(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            a.at(i, j) = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    return a;
}

RatMatrix diag(std::initializer_list<int> vals) {
    RatMatrix d(vals.size(), vals.size());
    std::size_t k = 0;
    for (int v : vals) {
        d.at(k, k) = v;
        ++k;
    }
    return d;
}

// independent discriminant oracle via the Euclidean remainder recursion
Rat resultant_euclid(RatPoly f, RatPoly g) {
    Rat acc(1);
    for (;;) {
        if (g.degree() == 0) return acc * exactla::rat_pow(g.lc(), static_cast<unsigned long>(f.degree()));
        if (f.degree() < g.degree()) {
            if (((f.degree() * g.degree()) % 2) != 0) acc = -acc;
            std::swap(f, g);
        }
        RatPoly r = f;
        while (!r.is_zero() && r.degree() >= g.degree()) {
            Rat q = r.lc() / g.lc();
            r = r - (g * RatPoly::x_power(static_cast<std::size_t>(r.degree() - g.degree()))) * q;
        }
        if (r.is_zero()) return Rat(0);
        acc *= exactla::rat_pow(g.lc(), static_cast<unsigned long>(f.degree() - r.degree()));
        if (((f.degree() * g.degree()) % 2) != 0) acc = -acc;
        f = g;
        g = r;
    }
}

Rat disc_oracle(const RatPoly& p) {
    Rat res = resultant_euclid(p, p.derivative());
    Rat d = res / p.lc();
    long deg = p.degree();
    return ((deg * (deg - 1) / 2) % 2 == 0) ? d : -d;
}

WeightD2n ts_weight(std::size_t n, std::size_t i, int si, std::size_t j, int sj) {
    WeightD2n w;
    w.n = n;
    w.t_index = i;
    w.t_sign = si;
    w.s_index = j;
    w.s_sign = sj;
    return w;
}

}  // namespace

TEST_CASE("antitranspose basics") {
    CHECK(antitranspose(exactla::to_rational(IntMatrix::identity(4))) ==
          exactla::to_rational(IntMatrix::identity(4)));
    CHECK(antitranspose(diag({1, 2, 3, 4})) == diag({4, 3, 2, 1}));

    RatMatrix e12(4, 4);
    e12.at(0, 1) = 1;
    RatMatrix img = antitranspose(e12);
    CHECK(img.at(2, 3) == 1);  // (1,2) lands at (3,4) in 1-based indexing
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (!(i == 2 && j == 3)) CHECK(img.at(i, j) == 0);

    CHECK_THROWS_AS(antitranspose(RatMatrix(2, 3)), std::invalid_argument);

    std::mt19937_64 rng(21);
    for (int t = 0; t < 10; ++t) {
        RatMatrix a = random_rat_matrix(rng, 4, -5, 5);
        RatMatrix b = random_rat_matrix(rng, 4, -5, 5);
        CHECK(antitranspose(antitranspose(a)) == a);
        CHECK(antitranspose(a * b) == antitranspose(b) * antitranspose(a));
    }
}

TEST_CASE("model element validation and embedding") {
    CHECK_THROWS_AS(VMatrix(1, RatMatrix(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(VMatrix(2, RatMatrix(3, 4)), std::invalid_argument);

    std::mt19937_64 rng(22);
    for (std::size_t n : {std::size_t(2), std::size_t(3)}) {
        VMatrix v(n, random_rat_matrix(rng, 2 * n, -4, 4));
        RatMatrix d = build_d(v);
        // gram of the split form: antidiagonal ones inside each 2n-block
        std::size_t N = 4 * n, m = 2 * n;
        RatMatrix gram(N, N);
        for (std::size_t k = 0; k < m; ++k) {
            gram.at(k, m - 1 - k) = 1;
            gram.at(m + k, N - 1 - k) = 1;
        }
        // D lies in the orthogonal Lie algebra: D^T gram + gram D = 0
        CHECK((d.transposed() * gram + gram * d).is_zero());
    }
}

TEST_CASE("discriminant of the invariant polynomial") {
    CHECK(disc_delta(VMatrix(2, exactla::to_rational(IntMatrix::identity(4)))) == 0);
    CHECK(disc_delta(VMatrix(2, diag({1, 2, 3, 4}))) == 0);

    std::mt19937_64 rng(23);
    int nonzero = 0;
    for (int t = 0; t < 12; ++t) {
        VMatrix v(2, random_rat_matrix(rng, 4, -5, 5));
        Rat d = disc_delta(v);
        if (d != 0) ++nonzero;
        CHECK(d == disc_oracle(exactla::charpoly(v.a * antitranspose(v.a))));
        CHECK(is_regular_semisimple(v) == (d != 0));
    }
    CHECK(nonzero >= 10);
}

TEST_CASE("characteristic polynomial symmetry of the product") {
    std::mt19937_64 rng(24);
    for (int t = 0; t < 10; ++t) {
        std::size_t n = 2 + t % 2;
        VMatrix v(n, random_rat_matrix(rng, 2 * n, -6, 6));
        RatMatrix astar = antitranspose(v.a);
        CHECK(exactla::charpoly(v.a * astar) == exactla::charpoly(astar * v.a));
    }
}

TEST_CASE("discriminant identity for the embedded element") {
    SECTION("degenerate corners") {
        CHECK(verify_disc_identity(VMatrix(2, RatMatrix(4, 4))));
        VMatrix id2(2, exactla::to_rational(IntMatrix::identity(4)));
        CHECK(verify_disc_identity(id2));
        // chi_D = (x^2+1)^4
        RatPoly x2p1{Rat(1), Rat(0), Rat(1)};
        CHECK(exactla::charpoly(build_d(id2)) == x2p1 * x2p1 * x2p1 * x2p1);
    }
    SECTION("random integer samples") {
        std::mt19937_64 rng(25);
        for (int t = 0; t < 100; ++t) {
            VMatrix v(2, random_rat_matrix(rng, 4, -9, 9));
            std::string why;
            bool ok = verify_disc_identity(v, &why);
            INFO(why);
            CHECK(ok);
        }
        for (int t = 0; t < 25; ++t) {
            VMatrix v(3, random_rat_matrix(rng, 6, -9, 9));
            std::string why;
            bool ok = verify_disc_identity(v, &why);
            INFO(why);
            CHECK(ok);
        }
    }
}

TEST_CASE("centralizer dimension") {
    CHECK(centralizer_dim(VMatrix(2, RatMatrix(4, 4))) == 28);  // everything commutes

    std::mt19937_64 rng(26);
    for (int t = 0; t < 6; ++t) {
        VMatrix v(2, random_rat_matrix(rng, 4, -5, 5));
        if (!is_regular_semisimple(v)) continue;
        CHECK(centralizer_dim(v) == 4);
        CHECK(is_regular(v));
    }
}

TEST_CASE("staircase samples") {
    SECTION("shape") {
        for (std::size_t n : {std::size_t(2), std::size_t(3)}) {
            VMatrix v = kostant_sample(n, 7);
            for (std::size_t r = 1; r <= 2 * n; ++r)
                for (std::size_t c = 1; c <= 2 * n; ++c) {
                    Rat entry = v.a.at(r - 1, c - 1);
                    switch (classify_position(n, r, c)) {
                        case PositionClass::One:
                            CHECK(entry == 1);
                            break;
                        case PositionClass::Zero:
                            CHECK(entry == 0);
                            break;
                        case PositionClass::Star:
                            CHECK(entry.get_den() == 1);
                            CHECK(abs(entry) <= 9);
                            break;
                    }
                }
        }
        // the unit staircase for n=2: ones at (1,1),(2,2),(2,3),(3,4)
        VMatrix e(2, kostant_sample(2, 0).a);
        CHECK(e.a.at(0, 0) == 1);
        CHECK(e.a.at(1, 1) == 1);
        CHECK(e.a.at(1, 2) == 1);
        CHECK(e.a.at(2, 3) == 1);
    }
    SECTION("determinism") {
        CHECK(kostant_sample(2, 42).a == kostant_sample(2, 42).a);
        CHECK(kostant_sample(2, 42).a != kostant_sample(2, 43).a);
    }
    SECTION("every sample is regular") {
        // all-stars-zero: the plain regular nilpotent
        VMatrix bare(2, RatMatrix(4, 4));
        for (std::size_t r = 1; r <= 4; ++r)
            for (std::size_t c = 1; c <= 4; ++c)
                if (classify_position(2, r, c) == PositionClass::One) bare.a.at(r - 1, c - 1) = 1;
        CHECK(centralizer_dim(bare) == 4);

        CHECK(centralizer_dim(kostant_sample(2, 1)) == 4);
        CHECK(centralizer_dim(kostant_sample(3, 2)) == 6);
        for (std::uint64_t seed : {3, 4, 5})
            CHECK(centralizer_dim(kostant_sample(2, seed)) == 4);
    }
}

TEST_CASE("block-zero samples force degeneracy") {
    SECTION("top-right block kills the discriminant") {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            CHECK(disc_delta(block_zero_sample(2, BlockPattern::top_right(1), seed)) == 0);
            CHECK(disc_delta(block_zero_sample(3, BlockPattern::top_right(1), seed)) == 0);
        }
        for (std::size_t i = 1; i <= 4; ++i)
            CHECK(disc_delta(block_zero_sample(2, BlockPattern::top_right(i), 11)) == 0);
    }
    SECTION("complementary block pairs kill the discriminant") {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            CHECK(disc_delta(block_zero_sample(2, BlockPattern::pair(1, 3), seed)) == 0);
            CHECK(disc_delta(block_zero_sample(2, BlockPattern::pair(2, 2), seed)) == 0);
            CHECK(disc_delta(block_zero_sample(3, BlockPattern::pair(1, 5), seed)) == 0);
            CHECK(disc_delta(block_zero_sample(3, BlockPattern::pair(2, 4), seed)) == 0);
        }
    }
    SECTION("reducibility pattern gives an isotropic invariant span") {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            CHECK(isotropic_span_check(block_zero_sample(2, BlockPattern::reducible(), seed)));
            CHECK(isotropic_span_check(block_zero_sample(3, BlockPattern::reducible(), seed)));
        }
        // a generic element does not admit such a span
        std::mt19937_64 rng(27);
        int fails = 0;
        for (int t = 0; t < 5; ++t)
            if (!isotropic_span_check(VMatrix(2, random_rat_matrix(rng, 4, -9, 9)))) ++fails;
        CHECK(fails == 5);
    }
    SECTION("pattern validation") {
        CHECK_THROWS_AS(block_zero_sample(2, BlockPattern::top_right(0), 0), std::invalid_argument);
        CHECK_THROWS_AS(block_zero_sample(2, BlockPattern::top_right(5), 0), std::invalid_argument);
        CHECK_THROWS_AS(block_zero_sample(2, BlockPattern::pair(1, 2), 0), std::invalid_argument);
        CHECK_THROWS_AS(block_zero_sample(2, BlockPattern::pair(0, 4), 0), std::invalid_argument);
    }
}

TEST_CASE("weight grid bijection") {
    CHECK(weight_at(2, 1, 4) == ts_weight(2, 1, +1, 1, +1));  // top-right corner
    CHECK(weight_at(2, 1, 1) == ts_weight(2, 1, +1, 1, -1));
    CHECK(weight_at(2, 4, 1) == ts_weight(2, 1, -1, 1, -1));
    CHECK(weight_at(3, 4, 3) == ts_weight(3, 3, -1, 3, -1));  // -t3 - s3

    CHECK_THROWS_AS(weight_at(2, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(weight_at(2, 1, 5), std::out_of_range);

    for (std::size_t n : {std::size_t(2), std::size_t(3), std::size_t(4)}) {
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (std::size_t r = 1; r <= 2 * n; ++r)
            for (std::size_t c = 1; c <= 2 * n; ++c) {
                WeightD2n w = weight_at(n, r, c);
                CHECK(position_of(w) == std::make_pair(r, c));
                seen.insert(position_of(w));
            }
        CHECK(seen.size() == 4 * n * n);
    }
}

TEST_CASE("simple-root coordinates of weights") {
    Rat half = exactla::make_rat(1, 2);
    SGVector v = sg_coords(ts_weight(2, 1, +1, 1, +1));  // t1 + s1 at n=2
    CHECK(v.beta == std::vector<Rat>{half, half});
    CHECK(v.gamma == std::vector<Rat>{half, half});

    SGVector w = sg_coords(ts_weight(3, 1, +1, 1, -1));  // t1 - s1 at n=3
    CHECK(w.beta == std::vector<Rat>{Rat(1), half, half});
    CHECK(w.gamma == std::vector<Rat>{Rat(-1), -half, -half});

    // round-trip: expanding the coordinates recovers the +-t_i +- s_j form
    for (std::size_t n : {std::size_t(2), std::size_t(3), std::size_t(4)})
        for (std::size_t r = 1; r <= 2 * n; ++r)
            for (std::size_t c = 1; c <= 2 * n; ++c) {
                WeightD2n ww = weight_at(n, r, c);
                std::vector<Rat> ts = sg_coords(ww).ts_coords();
                for (std::size_t k = 0; k < 2 * n; ++k) {
                    Rat expect(0);
                    if (k + 1 == ww.t_index) expect = ww.t_sign;
                    if (k + 1 == n + ww.s_index) expect += ww.s_sign;
                    CHECK(ts[k] == expect);
                }
            }
}

namespace {

// row and column covering relations read off the printed grid; the global
// order is their transitive closure
std::vector<std::vector<bool>> closure_order(std::size_t n) {
    std::size_t m = 2 * n, total = m * m;
    auto idx = [m](std::size_t r, std::size_t c) { return (r - 1) * m + (c - 1); };
    std::vector<std::vector<bool>> le(total, std::vector<bool>(total, false));
    for (std::size_t k = 0; k < total; ++k) le[k][k] = true;
    auto add = [&](std::size_t a, std::size_t b) { le[a][b] = true; };

    for (std::size_t r = 1; r <= m; ++r) {
        // ascending left to right, middle two columns incomparable
        for (std::size_t c = 1; c + 1 <= m; ++c)
            if (c != n) add(idx(r, c), idx(r, c + 1));
        add(idx(r, n - 1), idx(r, n + 1));
        add(idx(r, n), idx(r, n + 2));
    }
    for (std::size_t c = 1; c <= m; ++c) {
        // ascending bottom to top, middle two rows incomparable
        for (std::size_t r = 1; r + 1 <= m; ++r)
            if (r != n) add(idx(r + 1, c), idx(r, c));
        add(idx(n + 1, c), idx(n - 1, c));
        add(idx(n + 2, c), idx(n, c));
    }
    for (std::size_t k = 0; k < total; ++k)
        for (std::size_t a = 0; a < total; ++a)
            for (std::size_t b = 0; b < total; ++b)
                if (le[a][k] && le[k][b]) le[a][b] = true;
    return le;
}

}  // namespace

TEST_CASE("partial order on the weight grid") {
    // the top-right corner is the unique maximum
    for (std::size_t n : {std::size_t(2), std::size_t(3)}) {
        WeightD2n top = weight_at(n, 1, 2 * n);
        for (std::size_t r = 1; r <= 2 * n; ++r)
            for (std::size_t c = 1; c <= 2 * n; ++c) {
                WeightD2n w = weight_at(n, r, c);
                CHECK(leq(w, top));
                if (!(w == top)) CHECK_FALSE(leq(top, w));
            }
    }

    // mirror pair is incomparable
    CHECK_FALSE(leq(ts_weight(2, 1, +1, 1, -1), ts_weight(2, 1, -1, 1, +1)));
    CHECK_FALSE(leq(ts_weight(2, 1, -1, 1, +1), ts_weight(2, 1, +1, 1, -1)));

    // ascending chain along a row
    for (std::size_t n : {std::size_t(2), std::size_t(3)})
        for (std::size_t c = 1; c + 1 <= n; ++c)
            CHECK(leq(weight_at(n, 1, c), weight_at(n, 1, c + 1)));

    // inside each n x n quadrant: le iff the other position is weakly
    // up and to the right
    for (auto [r0, c0] : {std::pair<std::size_t, std::size_t>{1, 1},
                          {1, std::size_t(4)},
                          {std::size_t(4), 1},
                          {std::size_t(4), std::size_t(4)}}) {
        std::size_t n = 3;
        for (std::size_t r = r0; r < r0 + n; ++r)
            for (std::size_t c = c0; c < c0 + n; ++c)
                for (std::size_t r2 = r0; r2 < r0 + n; ++r2)
                    for (std::size_t c2 = c0; c2 < c0 + n; ++c2)
                        CHECK(leq(weight_at(n, r, c), weight_at(n, r2, c2)) ==
                              (r2 <= r && c2 >= c));
    }

    // coordinate order equals the closure of the row/column Hasse relations
    for (std::size_t n : {std::size_t(2), std::size_t(3)}) {
        auto le = closure_order(n);
        std::size_t m = 2 * n;
        for (std::size_t r = 1; r <= m; ++r)
            for (std::size_t c = 1; c <= m; ++c)
                for (std::size_t r2 = 1; r2 <= m; ++r2)
                    for (std::size_t c2 = 1; c2 <= m; ++c2) {
                        bool via_coords = leq(weight_at(n, r, c), weight_at(n, r2, c2));
                        bool via_hasse = le[(r - 1) * m + (c - 1)][(r2 - 1) * m + (c2 - 1)];
                        CHECK(via_coords == via_hasse);
                    }
    }
}

TEST_CASE("diagram symmetries") {
    CHECK(omega_act(Omega::w1, ts_weight(3, 1, +1, 2, +1)) == ts_weight(3, 2, +1, 1, +1));
    CHECK(omega_act(Omega::w2, ts_weight(2, 2, +1, 1, -1)) == ts_weight(2, 2, -1, 1, -1));
    CHECK(omega_act(Omega::id, ts_weight(2, 1, +1, 1, +1)) == ts_weight(2, 1, +1, 1, +1));

    for (std::size_t n : {std::size_t(2), std::size_t(3)}) {
        std::size_t m = 2 * n;
        for (std::size_t r = 1; r <= m; ++r)
            for (std::size_t c = 1; c <= m; ++c) {
                WeightD2n w = weight_at(n, r, c);

                // involutions that commute
                CHECK(omega_act(Omega::w1, omega_act(Omega::w1, w)) == w);
                CHECK(omega_act(Omega::w2, omega_act(Omega::w2, w)) == w);
                CHECK(omega_act(Omega::w1, omega_act(Omega::w2, w)) ==
                      omega_act(Omega::w2, omega_act(Omega::w1, w)));
                CHECK(omega_act(Omega::w1w2, w) == omega_act(Omega::w1, omega_act(Omega::w2, w)));

                // positional description: antidiagonal flip, middle swaps
                CHECK(position_of(omega_act(Omega::w1, w)) ==
                      std::make_pair(m + 1 - c, m + 1 - r));
                auto swap_mid = [n, m](std::size_t k) {
                    if (k == n) return n + 1;
                    if (k == n + 1) return n;
                    return k;
                };
                CHECK(position_of(omega_act(Omega::w2, w)) ==
                      std::make_pair(swap_mid(r), swap_mid(c)));

                // order preservation
                for (std::size_t r2 = 1; r2 <= m; ++r2)
                    for (std::size_t c2 = 1; c2 <= m; ++c2) {
                        WeightD2n u = weight_at(n, r2, c2);
                        for (Omega g : {Omega::w1, Omega::w2, Omega::w1w2})
                            CHECK(leq(w, u) == leq(omega_act(g, w), omega_act(g, u)));
                    }
            }
    }
}

TEST_CASE("sum of positive roots of the fixed subgroup") {
    SGVector two = sum_pos_roots_g(2);
    CHECK(two.beta == std::vector<Rat>{Rat(1), Rat(1)});
    CHECK(two.gamma == std::vector<Rat>{Rat(1), Rat(1)});

    // expansion in t/s coordinates: 2(n-1)t_1 + 2(n-2)t_2 + ... and mirror
    for (std::size_t n = 2; n <= 5; ++n) {
        std::vector<Rat> ts = sum_pos_roots_g(n).ts_coords();
        for (std::size_t i = 1; i <= n; ++i) {
            CHECK(ts[i - 1] == Rat(2 * (static_cast<long>(n) - static_cast<long>(i))));
            CHECK(ts[n + i - 1] == ts[i - 1]);
        }
    }

    // independent oracle: sum the positive roots {t_i +- t_j : i < j} directly
    for (std::size_t n = 2; n <= 5; ++n) {
        std::vector<long> total(n, 0);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j) total[i - 1] += 2;  // (t_i-t_j)+(t_i+t_j)
        std::vector<Rat> ts = sum_pos_roots_g(n).ts_coords();
        for (std::size_t i = 0; i < n; ++i) CHECK(ts[i] == Rat(total[i]));
    }

    // basis coefficients: k(2n-k-1) away from the fork, n(n-1)/2 at it
    for (std::size_t n = 3; n <= 5; ++n) {
        SGVector s = sum_pos_roots_g(n);
        for (std::size_t k = 1; k + 2 <= n; ++k)
            CHECK(s.beta[k - 1] == Rat(static_cast<long>(k * (2 * n - k - 1))));
        CHECK(s.beta[n - 2] == Rat(static_cast<long>(n * (n - 1) / 2)));
        CHECK(s.beta[n - 1] == Rat(static_cast<long>(n * (n - 1) / 2)));
        CHECK(s.beta == s.gamma);
    }
}
