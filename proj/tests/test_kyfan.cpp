#include <doctest.h>

#include <algorithm>
#include <random>

#include "chanmaj/kyfan.hpp"

using namespace chanmaj;

TEST_CASE("ky fan profile of sorted vector is its prefix sums") {
    const auto prof = ky_fan({0.5, 0.3, 0.2});
    CHECK(prof.values[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(prof.values[1] == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(prof.values[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ky fan profile of a basis vector is flat one") {
    const auto prof = ky_fan({1.0, 0.0, 0.0});
    for (double v : prof.values) CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("ky fan profile of the eight-symbol example") {
    vec p{16, 4, 4, 4, 4, 4, 0, 0};
    for (double& v : p) v /= 36.0;
    const auto prof = ky_fan(p);
    CHECK(prof.values[0] == doctest::Approx(16.0 / 36.0).epsilon(1e-12));
    CHECK(prof.values[3] == doctest::Approx(28.0 / 36.0).epsilon(1e-12));
}

TEST_CASE("ky fan profile is permutation invariant") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 2 + rng() % 6;
        vec v(n);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (double& x : v) x = u(rng);
        vec w = v;
        std::shuffle(w.begin(), w.end(), rng);
        CHECK(ky_fan(v).values == ky_fan(w).values);
    }
}

TEST_CASE("ky fan profile obeys triangle inequality and homogeneity") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 2 + rng() % 5;
        vec a(n), b(n), sum(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = u(rng);
            b[i] = u(rng);
            sum[i] = a[i] + b[i];
        }
        const vec pa = ky_fan(a).values;
        const vec pb = ky_fan(b).values;
        const vec ps = ky_fan(sum).values;
        for (std::size_t k = 0; k < n; ++k) CHECK(ps[k] <= pa[k] + pb[k] + 4e-9);

        const double alpha = u(rng);
        vec scaled = a;
        for (double& x : scaled) x *= alpha;
        const vec psc = ky_fan(scaled).values;
        for (std::size_t k = 0; k < n; ++k)
            CHECK(psc[k] == doctest::Approx(std::abs(alpha) * pa[k]).epsilon(1e-9));
    }
}

TEST_CASE("empty vector is rejected") { CHECK_THROWS_AS(ky_fan({}), std::domain_error); }

TEST_CASE("diffs inverts prefix sums") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 20; ++t) {
        vec v(1 + rng() % 7);
        for (double& x : v) x = u(rng);
        const vec back = diffs_to_vector(prefix_sums(v));
        for (std::size_t i = 0; i < v.size(); ++i)
            CHECK(back[i] == doctest::Approx(v[i]).epsilon(1e-9));
    }
    CHECK(diffs_to_vector({1.0, 1.0}) == vec{1.0, 0.0});
    const vec fig = diffs_to_vector({0.4, 0.65, 0.9, 1.0});
    const vec expect{0.4, 0.25, 0.25, 0.1};
    for (std::size_t i = 0; i < 4; ++i) CHECK(fig[i] == doctest::Approx(expect[i]).epsilon(1e-12));
}

TEST_CASE("least concave majorant matches the figure") {
    const vec out = least_concave_majorant({0.4, 0.6, 0.9, 1.0});
    CHECK(out[0] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(out[1] == doctest::Approx(0.65).epsilon(1e-12));
    CHECK(out[2] == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(out[3] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("least concave majorant fixes already-concave input") {
    const vec in{0.5, 0.8, 1.0};
    const vec out = least_concave_majorant(in);
    for (std::size_t i = 0; i < in.size(); ++i) CHECK(out[i] == doctest::Approx(in[i]));
}

TEST_CASE("least concave majorant agrees with a grid-search hull oracle") {
    // Brute force on a 1e-3 grid: the smallest concave dominating value at
    // each point, scanned down until concavity or dominance would break.
    const vec in{0.2, 0.9, 1.0};
    const vec out = least_concave_majorant(in);
    CHECK(out[0] == doctest::Approx(0.45).epsilon(1e-12));
    CHECK(out[1] == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(out[2] == doctest::Approx(1.0).epsilon(1e-12));

    // dominance and concavity
    for (std::size_t k = 0; k < in.size(); ++k) CHECK(out[k] >= in[k] - 1e-12);
    vec d = diffs_to_vector(out);
    for (std::size_t k = 0; k + 1 < d.size(); ++k) CHECK(d[k] >= d[k + 1] - 1e-12);

    // minimality: lowering any interior value by one grid step must break
    // concavity or dominance.
    for (std::size_t k = 0; k < in.size(); ++k) {
        vec lowered = out;
        lowered[k] -= 1e-3;
        const bool dominates = lowered[k] >= in[k];
        vec dl = diffs_to_vector(lowered);
        bool concave = true;
        for (std::size_t j = 0; j + 1 < dl.size(); ++j)
            if (dl[j] < dl[j + 1] - 1e-12) concave = false;
        CHECK((!dominates || !concave));
    }
}

TEST_CASE("least concave majorant rejects decreasing input") {
    CHECK_THROWS_AS(least_concave_majorant({0.5, 0.4, 1.0}), std::domain_error);
}

TEST_CASE("majorant properties hold on random nondecreasing inputs") {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 2 + rng() % 7;
        vec in(n);
        for (double& x : in) x = u(rng);
        std::sort(in.begin(), in.end());
        const double top = in.back();
        for (double& x : in) x /= top > 0 ? top : 1.0;
        const vec out = least_concave_majorant(in);
        for (std::size_t k = 0; k < n; ++k) CHECK(out[k] >= in[k] - 1e-12);
        CHECK(out[n - 1] == doctest::Approx(in[n - 1]));
        const vec d = diffs_to_vector(out);
        for (std::size_t k = 0; k + 1 < n; ++k) CHECK(d[k] >= d[k + 1] - 1e-9);
    }
}
