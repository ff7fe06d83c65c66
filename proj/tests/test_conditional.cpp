#include <doctest.h>

#include <cmath>

#include "chanmaj/conditional.hpp"

using namespace chanmaj;

namespace {

joint_dist correlated(std::size_t n) {
    std::vector<vec> cols(n, vec(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) cols[i][i] = 1.0 / static_cast<double>(n);
    return joint_dist::from_columns(std::move(cols));
}

joint_dist product(const prob_vector& x, const prob_vector& y) {
    std::vector<vec> cols;
    for (std::size_t j = 0; j < y.dim(); ++j) {
        vec c(x.dim());
        for (std::size_t i = 0; i < x.dim(); ++i) c[i] = x[i] * y[j];
        cols.push_back(std::move(c));
    }
    return joint_dist::from_columns(std::move(cols));
}

} // namespace

TEST_CASE("joint construction validates mass and signs") {
    CHECK_THROWS_AS(joint_dist(2, 2, {0.5, 0.5, 0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(joint_dist(2, 2, {0.7, 0.5, -0.1, -0.1}), std::invalid_argument);
    const joint_dist jd(2, 2, {0.25, 0.25, 0.25, 0.25});
    CHECK(jd.x_dim() == 2);
    CHECK(jd.y_mass(0) == doctest::Approx(0.5));
}

TEST_CASE("zero-mass columns carry a uniform conditional") {
    const joint_dist jd = joint_dist::from_columns({{0.5, 0.5}, {0.0, 0.0}});
    CHECK(jd.zero_mass_column(1));
    CHECK(jd.conditional(1).entries() == vec{0.5, 0.5});
}

TEST_CASE("perfect correlation conditionally majorizes everything") {
    const joint_dist p = correlated(3);
    const joint_dist q = product(sample_random(3, 5), sample_random(2, 6));
    const cond_decision d = conditionally_majorizes(p, q);
    CHECK(d.holds);
    REQUIRE(d.mixing.has_value());
}

TEST_CASE("uniform-on-X products are conditionally minimal") {
    const joint_dist q = product(prob_vector::uniform(3), sample_random(4, 7));
    const joint_dist p = product(sample_random(3, 8), sample_random(2, 9));
    CHECK(conditionally_majorizes(p, q).holds);
}

TEST_CASE("a uniform product cannot majorize perfect correlation") {
    const joint_dist p = product(prob_vector::uniform(2), sample_random(2, 10));
    const joint_dist q = correlated(2);
    const cond_decision d = conditionally_majorizes(p, q);
    CHECK(!d.holds);
    REQUIRE(d.refuter.has_value());
    CHECK(!s_test(p, q, *d.refuter));
}

TEST_CASE("random search over sorted substochastic matrices finds a refuter") {
    const joint_dist p = product(prob_vector::uniform(2), sample_random(2, 99));
    const joint_dist q = correlated(2);
    REQUIRE(!conditionally_majorizes(p, q).holds);
    bool found = false;
    for (std::uint64_t t = 0; t < 1000 && !found; ++t) {
        mat s(2, vec(2, 0.0));
        for (std::size_t w = 0; w < 2; ++w) {
            vec col = sample_random(3, 100000 + 3 * t + w).entries();
            // two sorted entries with total mass below one
            const double a = std::max(col[0], col[1]);
            const double b = std::min(col[0], col[1]);
            s[0][w] = a;
            s[1][w] = b;
        }
        found = !s_test(p, q, s);
    }
    CHECK(found);
}

TEST_CASE("the mixing certificate reproduces the target conditionals") {
    const joint_dist p = correlated(2);
    const joint_dist q = product(prob_vector::uniform(2), prob_vector::uniform(2));
    const cond_decision d = conditionally_majorizes(p, q);
    REQUIRE(d.holds);
    const mat& r = *d.mixing;
    // columns of R are stochastic over the targets
    for (std::size_t y = 0; y < p.y_dim(); ++y) {
        double colsum = 0.0;
        for (std::size_t w = 0; w < q.y_dim(); ++w) colsum += r[w][y];
        CHECK(colsum == doctest::Approx(1.0).epsilon(1e-9));
    }
    // mixture of sorted sources majorizes each target (prefix dominance)
    for (std::size_t w = 0; w < q.y_dim(); ++w) {
        vec mix(p.x_dim(), 0.0);
        for (std::size_t y = 0; y < p.y_dim(); ++y) {
            const vec sorted = sorted_desc(p.column(y));
            for (std::size_t i = 0; i < mix.size(); ++i) mix[i] += r[w][y] * sorted[i];
        }
        const vec mp = prefix_sums(mix);
        const vec tq = prefix_sums(sorted_desc(q.column(w)));
        for (std::size_t k = 0; k < mp.size(); ++k) CHECK(mp[k] >= tq[k] - 1e-8);
    }
}

TEST_CASE("game payoffs: guessing everything always wins") {
    const joint_dist p = product(sample_random(3, 11), sample_random(2, 12));
    mat t(3, vec(1, 0.0));
    t[2][0] = 1.0; // n guesses with certainty
    CHECK(cond_game_payoff(p, validate_cond_game(t)) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("game payoffs: one guess on perfect correlation wins") {
    mat t(2, vec(1, 0.0));
    t[0][0] = 1.0;
    CHECK(cond_game_payoff(correlated(2), validate_cond_game(t)) ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("game payoffs: one guess on a uniform conditional") {
    const joint_dist p = product(prob_vector::uniform(3), sample_random(3, 13));
    mat t(3, vec(1, 0.0));
    t[0][0] = 1.0;
    CHECK(cond_game_payoff(p, validate_cond_game(t)) == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("cond game validation rejects malformed matrices") {
    CHECK_THROWS_AS(validate_cond_game(mat{{1.0}, {0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_cond_game(mat{{-0.2}}), std::invalid_argument);
}

TEST_CASE("conditional entropy of products and correlation") {
    const prob_vector x = sample_random(3, 14);
    const joint_dist p = product(x, sample_random(4, 15));
    CHECK(conditional_entropy(p) == doctest::Approx(shannon_entropy(x)).epsilon(1e-9));
    CHECK(conditional_entropy(correlated(4)) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("conditional entropy is additive on products of joints") {
    for (std::uint64_t t = 0; t < 10; ++t) {
        const joint_dist a = product(sample_random(2, 160 + t), sample_random(2, 170 + t));
        const joint_dist b = correlated(2);
        const joint_dist ab = tensor(a, b);
        CHECK(conditional_entropy(ab) ==
              doctest::Approx(conditional_entropy(a) + conditional_entropy(b)).epsilon(1e-9));
    }
    // also on genuinely correlated factors
    const joint_dist c(2, 2, {0.4, 0.1, 0.2, 0.3});
    const joint_dist d(3, 2, {0.3, 0.05, 0.1, 0.15, 0.2, 0.2});
    CHECK(conditional_entropy(tensor(c, d)) ==
          doctest::Approx(conditional_entropy(c) + conditional_entropy(d)).epsilon(1e-9));
}

TEST_CASE("s test accepts the zero matrix and all-ones columns") {
    const joint_dist p = product(sample_random(3, 18), sample_random(2, 19));
    const joint_dist q = product(sample_random(3, 20), sample_random(2, 21));
    mat zero(3, vec(2, 0.0));
    CHECK(s_test(p, q, zero));
    mat ones(3, vec(2, 0.0));
    for (std::size_t i = 0; i < 3; ++i) ones[i][0] = 1.0;
    CHECK(s_test(p, q, ones));
}

TEST_CASE("s test validates its witness matrix") {
    const joint_dist p = product(sample_random(2, 22), sample_random(2, 23));
    CHECK_THROWS_AS(s_test(p, p, mat{{0.1, 0.0}, {0.5, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(s_test(p, p, mat{{1.5, 0.0}, {0.5, 0.0}}), std::invalid_argument);
}

TEST_CASE("x padding aligns joints of different alphabet sizes") {
    const joint_dist p = correlated(3);
    const joint_dist q = product(prob_vector::uniform(2), prob_vector::uniform(2));
    CHECK(conditionally_majorizes(p, q).holds);
}
