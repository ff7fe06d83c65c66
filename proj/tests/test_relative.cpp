#include <doctest.h>

#include <cmath>
#include <random>

#include "chanmaj/majorize.hpp"
#include "chanmaj/relative.hpp"

using namespace chanmaj;

namespace {

prob_vector pv(std::initializer_list<double> e) { return prob_vector(vec(e)); }

mat random_stochastic(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    mat m(rows, vec(cols, 0.0));
    for (std::size_t j = 0; j < cols; ++j) {
        const prob_vector col = sample_random(rows, seed + 131 * (j + 1));
        for (std::size_t i = 0; i < rows; ++i) m[i][j] = col[i];
    }
    return m;
}

prob_vector apply_m(const mat& m, const prob_vector& p) {
    return prob_vector(mat_vec(m, p.entries()), tolerance{1e-7, 1e-7});
}

double curve_sup_distance(const lorenz_curve& a, const lorenz_curve& b) {
    double worst = 0.0;
    for (const auto& v : a.vertices) worst = std::max(worst, std::abs(a.value_at(v.a) - b.value_at(v.a)));
    for (const auto& v : b.vertices) worst = std::max(worst, std::abs(a.value_at(v.a) - b.value_at(v.a)));
    return worst;
}

} // namespace

TEST_CASE("standardize drops joint zeros") {
    const dichotomy_pair pair(pv({1.0, 0.0}), pv({1.0, 0.0}));
    const std_pair sp = standardize_pair(pair);
    CHECK(sp.pair.dim() == 1);
    CHECK(sp.pair.p[0] == doctest::Approx(1.0));
}

TEST_CASE("standardize keeps an already-sorted pair") {
    const std_pair sp = standardize_pair(dichotomy_pair(pv({0.9, 0.1, 0.0}), pv({0.1, 0.8, 0.1})));
    CHECK(sp.pair.p.entries() == vec{0.9, 0.1, 0.0});
    CHECK(sp.pair.q.entries() == vec{0.1, 0.8, 0.1});
    CHECK(sp.ratios[0] == doctest::Approx(9.0));
    CHECK(sp.ratios[2] == doctest::Approx(0.0));
}

TEST_CASE("standardize reorders by ratio") {
    const std_pair sp = standardize_pair(dichotomy_pair(pv({0.2, 0.8}), pv({0.9, 0.1})));
    CHECK(sp.pair.p.entries() == vec{0.8, 0.2});
    CHECK(sp.pair.q.entries() == vec{0.1, 0.9});
}

TEST_CASE("lower Lorenz vertices of the running example") {
    const lorenz_curve c =
        lower_lorenz(standardize_pair(dichotomy_pair(pv({0.9, 0.1, 0.0}), pv({0.1, 0.8, 0.1}))));
    REQUIRE(c.vertices.size() == 4);
    CHECK(c.vertices[1].a == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(c.vertices[1].b == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(c.vertices[2].a == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.vertices[2].b == doctest::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("equal marginals give the diagonal") {
    const prob_vector p = sample_random(4, 10);
    const lorenz_curve c = lower_lorenz(standardize_pair(dichotomy_pair(p, p)));
    for (const auto& v : c.vertices) CHECK(v.b == doctest::Approx(v.a).epsilon(1e-9));
}

TEST_CASE("collinear merge leaves the curve unchanged as a point set") {
    const dichotomy_pair pair(pv({0.2, 0.2, 0.5, 0.1}), pv({0.4, 0.4, 0.1, 0.1}));
    const std_pair sp = standardize_pair(pair);
    const lorenz_curve full = lower_lorenz(sp, false);
    const lorenz_curve merged = lower_lorenz(sp, true);
    CHECK(merged.vertices.size() < full.vertices.size());
    CHECK(curve_sup_distance(full, merged) <= 1e-12);
}

TEST_CASE("every pair relatively majorizes the trivial pair") {
    const dichotomy_pair x(sample_random(4, 21), sample_random(4, 22));
    const dichotomy_pair unit(pv({1.0}), pv({1.0}));
    CHECK(relatively_majorizes(x, unit).holds);
}

TEST_CASE("the running example dominates the two-outcome pair with a transport") {
    const dichotomy_pair x(pv({0.9, 0.1, 0.0}), pv({0.1, 0.8, 0.1}));
    const dichotomy_pair y(pv({0.2, 0.8}), pv({0.1, 0.9}));
    const relative_decision d = relatively_majorizes(x, y);
    REQUIRE(d.holds);
    REQUIRE(d.transport.has_value());
    const mat& e = *d.transport;
    const vec ep = mat_vec(e, x.p.entries());
    const vec eq = mat_vec(e, x.q.entries());
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(ep[i] == doctest::Approx(y.p[i]).epsilon(1e-7));
        CHECK(eq[i] == doctest::Approx(y.q[i]).epsilon(1e-7));
    }
}

TEST_CASE("a failed containment reports the violating abscissa") {
    const dichotomy_pair x(pv({0.5, 0.5}), pv({0.5, 0.5}));
    const dichotomy_pair y(pv({0.9, 0.1}), pv({0.1, 0.9}));
    const relative_decision d = relatively_majorizes(x, y);
    CHECK(!d.holds);
    REQUIRE(d.violation.has_value());
    CHECK(d.violation->lhs_b > d.violation->rhs_b);
}

TEST_CASE("decision matches the l1 breakpoint criterion on random pairs") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 2 + rng() % 4;
        const std::size_t n2 = 2 + rng() % 4;
        const prob_vector p = sample_random(n, 4000 + t);
        const prob_vector q = sample_random(n, 4100 + t);
        prob_vector p2 = sample_random(n2, 4200 + t);
        prob_vector q2 = sample_random(n2, 4300 + t);
        if (t % 2 == 0) {
            const mat e = random_stochastic(n2, n, 4400 + t);
            p2 = apply_m(e, p);
            q2 = apply_m(e, q);
        }
        const dichotomy_pair x(p, q), y(p2, q2);
        vec ts{0.0};
        for (std::size_t i = 0; i < x.dim(); ++i)
            if (x.q[i] > 0) ts.push_back(x.p[i] / x.q[i]);
        for (std::size_t i = 0; i < y.dim(); ++i)
            if (y.q[i] > 0) ts.push_back(y.p[i] / y.q[i]);
        double mx = 0;
        for (double v : ts) mx = std::max(mx, v);
        ts.push_back(mx + 1.0);
        auto l1 = [](const dichotomy_pair& pr, double tt) {
            double s = 0;
            for (std::size_t i = 0; i < pr.dim(); ++i) s += std::abs(pr.p[i] - tt * pr.q[i]);
            return s;
        };
        bool l1_ok = true;
        for (double tt : ts)
            if (l1(x, tt) < l1(y, tt) - 1e-9) l1_ok = false;
        CHECK(relatively_majorizes(x, y).holds == l1_ok);
    }
}

TEST_CASE("beta star endpoints and the worked value") {
    const dichotomy_pair pair(pv({0.9, 0.1, 0.0}), pv({0.1, 0.8, 0.1}));
    CHECK(beta_star(pair, 1.0) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(beta_star(pair, 0.0) == doctest::Approx(0.9).epsilon(1e-9));
    CHECK(beta_star(pair, 0.0) == doctest::Approx(beta_star_from_curve(pair, 0.0)).epsilon(1e-9));
    const prob_vector p = sample_random(4, 50);
    const dichotomy_pair same(p, p);
    for (double eps : vec{0.0, 0.25, 0.6, 1.0})
        CHECK(beta_star(same, eps) == doctest::Approx(1.0 - eps).epsilon(1e-8));
    CHECK_THROWS_AS(beta_star(pair, 1.5), std::invalid_argument);
}

TEST_CASE("beta star agrees with the curve at random epsilons") {
    for (std::uint64_t t = 0; t < 20; ++t) {
        const dichotomy_pair pair(sample_random(4, 5000 + t), sample_random(4, 5100 + t));
        for (double eps : vec{0.0, 0.1, 0.37, 0.5, 0.9})
            CHECK(beta_star(pair, eps) ==
                  doctest::Approx(beta_star_from_curve(pair, eps)).epsilon(1e-8));
    }
}

TEST_CASE("kl f-divergence normalization") {
    CHECK(f_divergence(prob_vector::point_mass(0, 2), prob_vector::uniform(2), kl_divergence_fn()) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("chi-square vanishes on equal arguments") {
    const prob_vector p = sample_random(5, 60);
    CHECK(f_divergence(p, p, chi_square_fn()) == doctest::Approx(0.0));
}

TEST_CASE("f(1) must vanish") {
    scalar_divergence bad{[](double r) { return r; }, 0.0, 1.0};
    CHECK_THROWS_AS(f_divergence(prob_vector::uniform(2), prob_vector::uniform(2), bad),
                    std::invalid_argument);
}

TEST_CASE("data processing holds for KL under random stochastic maps") {
    for (std::uint64_t t = 0; t < 100; ++t) {
        const std::size_t n = 2 + t % 4;
        const prob_vector p = sample_random(n, 6000 + t);
        const prob_vector q = sample_random(n, 6100 + t);
        const mat e = random_stochastic(2 + t % 3, n, 6200 + t);
        const double before = f_divergence(p, q, kl_divergence_fn());
        const double after = f_divergence(apply_m(e, p), apply_m(e, q), kl_divergence_fn());
        if (std::isinf(before)) continue;
        CHECK(after <= before + 1e-8);
    }
}

TEST_CASE("renyi relative entropies: worked values") {
    CHECK(renyi_relative(pv({0.2, 0.8}), pv({0.1, 0.9}), kInf) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(renyi_relative(pv({0.9, 0.1, 0.0}), pv({0.1, 0.8, 0.1}), 0.0) ==
          doctest::Approx(-std::log2(0.9)).epsilon(1e-12));
    const prob_vector p = sample_random(4, 70);
    for (double alpha : vec{0.0, 0.5, 1.0, 2.0, kInf})
        CHECK(renyi_relative(p, p, alpha) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("renyi relative entropies: support case split") {
    const prob_vector e1 = prob_vector::point_mass(0, 2);
    const prob_vector e2 = prob_vector::point_mass(1, 2);
    CHECK(std::isinf(renyi_relative(e1, e2, 0.0)));
    CHECK(std::isinf(renyi_relative(e1, e2, 1.0)));
    CHECK(std::isinf(renyi_relative(e1, e2, kInf)));
    // alpha in [0,1) tolerates partial support overlap
    CHECK(std::isfinite(renyi_relative(pv({0.5, 0.5}), pv({1.0, 0.0}), 0.5)));
    CHECK(std::isinf(renyi_relative(pv({0.5, 0.5}), pv({1.0, 0.0}), 2.0)));
}

TEST_CASE("the min/max relative entropy sufficient condition") {
    const dichotomy_pair unit(prob_vector::point_mass(0, 2), prob_vector::uniform(2));
    CHECK(dmax_dmin_sufficient(unit, unit));

    const dichotomy_pair x(pv({0.9, 0.1, 0.0}), pv({0.1, 0.8, 0.1}));
    const dichotomy_pair y(pv({0.2, 0.8}), pv({0.1, 0.9}));
    CHECK(!dmax_dmin_sufficient(x, y));
    CHECK(relatively_majorizes(x, y).holds);

    const dichotomy_pair inf_pair(prob_vector::point_mass(0, 2), prob_vector::point_mass(1, 2));
    CHECK(dmax_dmin_sufficient(inf_pair, y));
}

TEST_CASE("sufficiency implies relative majorization on random pairs") {
    for (std::uint64_t t = 0; t < 60; ++t) {
        const dichotomy_pair x(sample_random(3, 7000 + t), sample_random(3, 7100 + t));
        const dichotomy_pair y(sample_random(3, 7200 + t), sample_random(3, 7300 + t));
        if (dmax_dmin_sufficient(x, y)) CHECK(relatively_majorizes(x, y).holds);
    }
}

TEST_CASE("rational second components blow up to uniform pairs with the same curve") {
    std::mt19937_64 rng(81);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + rng() % 3;
        const std::size_t denom = 3 + rng() % 10; // denominators up to 12
        // random positive rational q with denominator denom
        std::vector<std::size_t> parts(n, 1);
        for (std::size_t extra = 0; extra < denom - n; ++extra) parts[rng() % n] += 1;
        vec qe(n);
        for (std::size_t i = 0; i < n; ++i) qe[i] = static_cast<double>(parts[i]) / denom;
        const prob_vector p = sample_random(n, 8000 + t);
        const prob_vector q(qe);

        vec blow;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t r = 0; r < parts[i]; ++r) blow.push_back(p[i] / parts[i]);
        const dichotomy_pair original(p, q);
        const dichotomy_pair blown(prob_vector(blow), prob_vector::uniform(denom));
        const lorenz_curve c1 = lower_lorenz(standardize_pair(original));
        const lorenz_curve c2 = lower_lorenz(standardize_pair(blown));
        CHECK(curve_sup_distance(c1, c2) <= 1e-9);
    }
}

TEST_CASE("pairs against uniform reduce to plain majorization") {
    for (std::uint64_t t = 0; t < 40; ++t) {
        const std::size_t n = 2 + t % 4;
        const prob_vector p = sample_random(n, 9000 + t);
        const prob_vector q = sample_random(n, 9100 + t);
        const prob_vector u = prob_vector::uniform(n);
        CHECK(relatively_majorizes(dichotomy_pair(p, u), dichotomy_pair(q, u)).holds ==
              majorizes(p, q));
    }
}
