#include "chanmaj/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "chanmaj/channel.hpp"
#include "chanmaj/conditional.hpp"
#include "chanmaj/entropy.hpp"
#include "chanmaj/json_io.hpp"
#include "chanmaj/majorize.hpp"
#include "chanmaj/oracle.hpp"
#include "chanmaj/relative.hpp"

namespace chanmaj::acceptance {

namespace {

using chanmaj::oracle::grid_verdict;

struct check_log {
    std::size_t violations = 0;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (violations < 8) detail << (violations ? "; " : "") << what;
            ++violations;
        }
    }
};

prob_vector pv(std::initializer_list<double> e) { return prob_vector(vec(e)); }

channel make_channel(std::initializer_list<std::initializer_list<double>> cols) {
    std::vector<prob_vector> c;
    for (const auto& col : cols) c.push_back(prob_vector(vec(col)));
    return channel(std::move(c));
}

mat random_stochastic(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    mat m(rows, vec(cols, 0.0));
    for (std::size_t j = 0; j < cols; ++j) {
        const prob_vector col = sample_random(rows, seed + 7919 * (j + 1));
        for (std::size_t i = 0; i < rows; ++i) m[i][j] = col[i];
    }
    return m;
}

mat random_doubly_stochastic(std::size_t n, std::uint64_t seed, std::size_t mixes = 6) {
    std::mt19937_64 rng(seed);
    mat d(n, vec(n, 0.0));
    const prob_vector w = sample_random(mixes, seed ^ 0xabcdef);
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < mixes; ++k) {
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::size_t i = 0; i < n; ++i) d[perm[i]][i] += w[k];
    }
    return d;
}

prob_vector apply_matrix(const mat& m, const prob_vector& p) {
    return prob_vector(mat_vec(m, p.entries()), tolerance{1e-7, 1e-7});
}

channel sparsified_channel(std::size_t m, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<prob_vector> cols;
    for (std::size_t x = 0; x < m; ++x) {
        vec c = sample_random(n, seed + 31 * (x + 1)).entries();
        for (std::size_t i = 1; i < n; ++i)
            if (unit(rng) < 0.35) c[i] = 0.0;
        double s = 0.0;
        for (double v : c) s += v;
        for (double& v : c) v /= s;
        cols.push_back(prob_vector(std::move(c)));
    }
    return channel(std::move(cols));
}

// M constructed to be majorized by N: each target column is a doubly
// stochastic image of a mixture of N's sorted columns.
channel degraded_channel(const channel& n, std::size_t targets, std::uint64_t seed) {
    std::vector<prob_vector> cols;
    for (std::size_t w = 0; w < targets; ++w) {
        const prob_vector s = sample_random(n.input_dim(), seed + 101 * (w + 1));
        vec mix(n.output_dim(), 0.0);
        for (std::size_t x = 0; x < n.input_dim(); ++x) {
            const vec sorted = n.column(x).sorted();
            for (std::size_t i = 0; i < mix.size(); ++i) mix[i] += s[x] * sorted[i];
        }
        const mat d = random_doubly_stochastic(n.output_dim(), seed + 211 * (w + 1));
        cols.push_back(apply_matrix(d, prob_vector(std::move(mix))));
    }
    return channel(std::move(cols));
}

joint_dist random_joint(std::size_t n, std::size_t m, std::uint64_t seed) {
    const prob_vector flat = sample_random(n * m, seed);
    return joint_dist(n, m, flat.entries());
}

std::uint64_t ly_hash(std::size_t a, std::size_t b) { return 1009 * (a + 1) + 9176 * (b + 1); }

// Q constructed to be conditionally majorized by P via a random conditionally
// doubly stochastic map.
joint_dist degraded_joint(const joint_dist& p, std::size_t targets, std::uint64_t seed) {
    const mat r = random_stochastic(targets, p.y_dim(), seed);
    std::vector<vec> cols(targets, vec(p.x_dim(), 0.0));
    for (std::size_t w = 0; w < targets; ++w) {
        for (std::size_t y = 0; y < p.y_dim(); ++y) {
            const mat d = random_doubly_stochastic(p.x_dim(), seed + ly_hash(w, y));
            const vec img = mat_vec(d, p.column(y));
            for (std::size_t x = 0; x < p.x_dim(); ++x) cols[w][x] += r[w][y] * img[x];
        }
    }
    return joint_dist::from_columns(std::move(cols), tolerance{1e-7, 1e-7});
}

cond_game random_cond_game(std::size_t n, std::size_t ell, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    mat t(n, vec(ell, 0.0));
    for (std::size_t w = 0; w < ell; ++w) {
        double colsum = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            t[k][w] = unit(rng);
            colsum += t[k][w];
        }
        const double scale = unit(rng) / colsum;
        for (std::size_t k = 0; k < n; ++k) t[k][w] *= scale;
    }
    return validate_cond_game(std::move(t));
}

vec random_sorted_probe(std::size_t n, std::uint64_t seed) {
    vec s = sample_random(n, seed).sorted();
    return s;
}

criterion_result finish(const std::string& name, const check_log& log, const std::string& ok_note = "") {
    criterion_result res;
    res.name = name;
    res.pass = log.violations == 0;
    res.detail = res.pass ? ok_note
                          : (std::to_string(log.violations) + " violation(s): " + log.detail.str());
    return res;
}

// ---------------------------------------------------------------------------

criterion_result c1_worked_example() {
    check_log log;
    const channel n = make_channel({{0.70, 0.15, 0.15}, {0.05, 0.45, 0.50}});
    const channel m = make_channel({{0.60, 0.30, 0.10}});
    const channel_decision d = channel_majorizes(n, m);
    log.require(d.holds, "decision should be true");
    if (d.holds) {
        const vec& w = d.weights[0];
        log.require(std::abs(w[0] - 0.5) <= 1e-9 && std::abs(w[1] - 0.5) <= 1e-9,
                    "witness weights are not (0.5,0.5)");
        const vec s1 = n.column(0).sorted();
        const vec s2 = n.column(1).sorted();
        for (std::size_t i = 0; i < 3; ++i) {
            const double mix = w[0] * s1[i] + w[1] * s2[i];
            log.require(std::abs(mix - m.column(0)[i]) <= 1e-12, "mixture residual above 1e-12");
        }
    }
    log.require(!unsorted_mixture_covers(n, m), "unsorted diagnostic should be infeasible");
    return finish("worked example (channel majorization)", log);
}

criterion_result c2_optimal_bounds_figure() {
    check_log log;
    const std::vector<prob_vector> a{pv({0.4, 0.2, 0.2, 0.2}), pv({0.3, 0.3, 0.3, 0.1})};
    const prob_vector ub = optimal_upper_bound(a);
    const vec expect{0.4, 0.25, 0.25, 0.1};
    for (std::size_t i = 0; i < 4; ++i)
        log.require(std::abs(ub[i] - expect[i]) <= 1e-12, "upper bound coordinate off");

    // The naive max-gap vector fails to be nonincreasing.
    vec mx = prefix_sums(a[0].sorted());
    const vec other = prefix_sums(a[1].sorted());
    for (std::size_t k = 0; k < 4; ++k) mx[k] = std::max(mx[k], other[k]);
    const vec naive = diffs_to_vector(mx);
    log.require(std::abs(naive[1] - 0.2) <= 1e-12 && std::abs(naive[2] - 0.3) <= 1e-12,
                "naive max-gap vector differs from the figure");
    bool nonincreasing = true;
    for (std::size_t k = 0; k + 1 < 4; ++k)
        if (naive[k + 1] > naive[k] + 1e-12) nonincreasing = false;
    log.require(!nonincreasing, "naive vector unexpectedly nonincreasing");
    return finish("optimal bounds figure", log);
}

criterion_result c3_hasselbarth() {
    check_log log;
    vec pe{16, 4, 4, 4, 4, 4, 0, 0}, qe{8, 8, 8, 8, 1, 1, 1, 1};
    for (double& v : pe) v /= 36.0;
    for (double& v : qe) v /= 36.0;
    const prob_vector p(pe), q(qe);
    for (double alpha : vec{0.0, 0.25, 0.5, 1.0, 2.0, 4.0, kInf}) {
        log.require(renyi_entropy(p, alpha) <= renyi_entropy(q, alpha) + 1e-9,
                    "entropy ordering fails at alpha=" + std::to_string(alpha));
    }
    log.require(!majorizes(p, q), "p should not majorize q");
    log.require(!majorizes(q, p), "q should not majorize p");
    return finish("Hasselbarth incomparability", log);
}

criterion_result c4_lorenz_example() {
    check_log log;
    const dichotomy_pair pair(pv({0.9, 0.1, 0.0}), pv({0.1, 0.8, 0.1}));
    const lorenz_curve curve = lower_lorenz(standardize_pair(pair));
    const std::vector<lorenz_point> expect{{0, 0}, {0.9, 0.1}, {1.0, 0.9}, {1.0, 1.0}};
    log.require(curve.vertices.size() == expect.size(), "vertex count");
    for (std::size_t k = 0; k < expect.size() && k < curve.vertices.size(); ++k) {
        log.require(std::abs(curve.vertices[k].a - expect[k].a) <= 1e-12 &&
                        std::abs(curve.vertices[k].b - expect[k].b) <= 1e-12,
                    "vertex " + std::to_string(k) + " off");
    }
    const double lp_value = beta_star(pair, 0.0);
    const double curve_value = beta_star_from_curve(pair, 0.0);
    log.require(std::abs(lp_value - 0.9) <= 1e-9, "beta*(0) via LP");
    log.require(std::abs(lp_value - curve_value) <= 1e-9, "LP and curve disagree");
    return finish("Lorenz curve example", log);
}

criterion_result c5_dmax_dmin_counterexample() {
    check_log log;
    const dichotomy_pair x(pv({0.9, 0.1, 0.0}), pv({0.1, 0.8, 0.1}));
    const dichotomy_pair y(pv({0.2, 0.8}), pv({0.1, 0.9}));
    log.require(relatively_majorizes(x, y).holds, "x should relatively majorize y");
    const double dmax = renyi_relative(y.p, y.q, kInf);
    const double dmin = renyi_relative(x.p, x.q, 0.0);
    log.require(std::abs(dmax - 1.0) <= 1e-9, "D_max(y) != 1 bit");
    log.require(std::abs(dmin - (-std::log2(0.9))) <= 1e-9, "D_min(x) != -log2(0.9)");
    log.require(!dmax_dmin_sufficient(x, y), "sufficient test should be false");
    return finish("D_max/D_min converse counterexample", log);
}

criterion_result c6_choi_counterexample() {
    check_log log;
    const channel n = make_channel({{1.0, 0.0}});
    const channel m = make_channel({{1.0, 0.0}, {0.5, 0.5}});
    log.require(channel_equivalent(n, m), "channels should be equivalent");
    for (const channel* c : {&n, &m}) {
        for (const entropy_spec& spec :
             {entropy_spec::shannon(), entropy_spec::min_entropy(), entropy_spec::max_entropy(),
              entropy_spec::renyi(0.5), entropy_spec::renyi(2.0)}) {
            log.require(std::abs(channel_entropy_max_ext(*c, spec)) <= 1e-12,
                        "a maximal-extension entropy is nonzero");
        }
        log.require(std::abs(channel_entropy_min_ext_shannon(*c)) <= 1e-12,
                    "minimal-extension Shannon entropy is nonzero");
        log.require(std::abs(kl_randomizing_entropy(*c)) <= 1e-12, "KL-randomizing entropy nonzero");
    }
    log.require(std::abs(choi_entropy(m) - 0.5) <= 1e-12, "choi entropy of M != 0.5");
    log.require(std::abs(choi_entropy(n) - 0.0) <= 1e-12, "choi entropy of N != 0");
    log.require(std::abs(choi_entropy(m) - choi_entropy(n)) > 1e-6,
                "choi entropy failed to separate equivalent channels");
    return finish("Choi entropy counterexample", log);
}

criterion_result c7_unique_extensions(bool fast) {
    check_log log;
    const std::size_t trials = fast ? 40 : 200;
    std::mt19937_64 rng(20240517);
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t m = 1 + rng() % 5;
        const std::size_t n = 1 + rng() % 5;
        const channel c = sparsified_channel(m, n, 5000 + t);

        const prob_vector flat = flat_top_upper_bound(c);
        bool ok = true;
        for (const auto& col : c.columns()) ok = ok && majorizes(flat, col);
        log.require(ok, "flat-top vector fails to majorize a column");
        log.require(std::abs(renyi_entropy(flat, kInf) - (-std::log2(c.max_entry()))) <= 1e-9,
                    "flat-top min-entropy mismatch");
        log.require(std::abs(renyi_entropy(optimal_upper_bound(c.columns()), kInf) -
                             (-std::log2(c.max_entry()))) <= 1e-9,
                    "image upper bound min-entropy mismatch");

        const prob_vector sup = support_matching_upper_bound(c);
        ok = true;
        for (const auto& col : c.columns()) ok = ok && majorizes(sup, col);
        log.require(ok, "support-matching vector fails to majorize a column");
        const double expect = std::log2(static_cast<double>(c.min_support()));
        log.require(std::abs(renyi_entropy(sup, 0.0) - expect) <= 1e-9,
                    "support-matching max-entropy mismatch");
        log.require(std::abs(renyi_entropy(optimal_upper_bound(c.columns()), 0.0) - expect) <= 1e-9,
                    "image upper bound max-entropy mismatch");
    }
    return finish("uniqueness of H_min/H_max extensions", log,
                  std::to_string(trials) + " random channels");
}

criterion_result c8_property_suites(bool fast) {
    check_log log;
    const std::size_t big = fast ? 40 : 200;
    const std::size_t mid = fast ? 25 : 100;
    std::mt19937_64 rng(424242);

    // Vector preorder laws, witnesses, entropies, padding and permutation.
    for (std::size_t t = 0; t < mid; ++t) {
        const std::size_t n = 2 + rng() % 4;
        const prob_vector p = sample_random(n, 900 + t);
        const prob_vector b = apply_matrix(random_doubly_stochastic(n, 1900 + t), p);
        const prob_vector c = apply_matrix(random_doubly_stochastic(n, 2900 + t), b);
        log.require(majorizes(p, p), "reflexivity");
        log.require(majorizes(p, b) && majorizes(b, c), "doubly stochastic contraction");
        log.require(majorizes(p, c), "transitivity");
        for (double alpha : vec{0.0, 0.5, 1.0, 2.0, kInf})
            log.require(renyi_entropy(p, alpha) <= renyi_entropy(b, alpha) + 1e-9,
                        "entropy antitone");
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        vec shuffled(n);
        for (std::size_t i = 0; i < n; ++i) shuffled[i] = p[perm[i]];
        const prob_vector pp(shuffled);
        log.require(majorizes(p, pp) && majorizes(pp, p), "permutation equivalence");
        log.require(majorizes(p, p.padded(n + 2)) && majorizes(p.padded(n + 2), p),
                    "padding equivalence");

        log.require(check_witness(witness_t_chain(p, b), p, b), "t-chain witness");
        log.require(check_witness(witness_doubly_stochastic(p, b), p, b), "doubly stochastic witness");
        log.require(check_witness(witness_ky_fan(p, b), p, b), "ky fan witness");
    }

    // Vector oracle agreement on small dimensions.
    for (std::size_t t = 0; t < big; ++t) {
        const std::size_t n = 2 + rng() % 3;
        const prob_vector p = sample_random(n, 3100 + t);
        const prob_vector q = t % 2 == 0 ? sample_random(n, 4100 + t)
                                         : apply_matrix(random_doubly_stochastic(n, 5100 + t), p);
        log.require(majorizes(p, q) == oracle::oracle_majorizes(p, q), "vector oracle agreement");
    }

    // Blackwell three-way agreement.
    for (std::size_t t = 0; t < big; ++t) {
        const std::size_t n = 2 + rng() % 4;
        const std::size_t n2 = 2 + rng() % 4;
        const prob_vector p = sample_random(n, 6000 + t);
        const prob_vector q = sample_random(n, 7000 + t);
        prob_vector p2 = sample_random(n2, 8000 + t);
        prob_vector q2 = sample_random(n2, 9000 + t);
        if (t % 2 == 0) {
            const mat e = random_stochastic(n2, n, 9500 + t);
            p2 = apply_matrix(e, p);
            q2 = apply_matrix(e, q);
        }
        const dichotomy_pair x(p, q), y(p2, q2);

        // criterion 3: Lorenz containment
        bool lorenz_ok = true;
        {
            const lorenz_curve cx = lower_lorenz(standardize_pair(x));
            const lorenz_curve cy = lower_lorenz(standardize_pair(y));
            for (const auto& v : cx.vertices)
                if (cx.value_at(v.a) > cy.value_at(v.a) + 1e-9) lorenz_ok = false;
            for (const auto& v : cy.vertices)
                if (cx.value_at(v.a) > cy.value_at(v.a) + 1e-9) lorenz_ok = false;
        }
        // criterion 2: l1 norms at ratio breakpoints
        bool l1_ok = true;
        {
            vec ts{0.0};
            for (std::size_t i = 0; i < x.dim(); ++i)
                if (x.q[i] > 0) ts.push_back(x.p[i] / x.q[i]);
            for (std::size_t i = 0; i < y.dim(); ++i)
                if (y.q[i] > 0) ts.push_back(y.p[i] / y.q[i]);
            double mx = 0.0;
            for (double v : ts) mx = std::max(mx, v);
            ts.push_back(mx + 1.0);
            auto l1 = [](const dichotomy_pair& pr, double tt) {
                double s = 0.0;
                for (std::size_t i = 0; i < pr.dim(); ++i) s += std::abs(pr.p[i] - tt * pr.q[i]);
                return s;
            };
            for (double tt : ts)
                if (l1(x, tt) < l1(y, tt) - 1e-9) l1_ok = false;
        }
        // criterion 1: direct transport existence
        const bool decision = relatively_majorizes(x, y).holds;
        log.require(decision == lorenz_ok, "Blackwell: decision vs containment");
        log.require(decision == l1_ok, "Blackwell: decision vs l1 breakpoints");
        if (t % 2 == 0) log.require(decision, "constructed pair must relatively majorize");
    }

    // Channel monotone laws and padding/permutation invariance.
    for (std::size_t t = 0; t < (fast ? 15 : 60); ++t) {
        const std::size_t m = 1 + rng() % 3;
        const std::size_t nd = 2 + rng() % 3;
        const channel n = sample_random_channel(m, nd, 11000 + t);
        const channel degraded = degraded_channel(n, 1 + rng() % 3, 12000 + t);
        const channel_decision cd = channel_majorizes(n, degraded);
        log.require(cd.holds, "constructed degraded channel must be majorized");

        for (std::size_t probe = 0; probe < 5; ++probe) {
            const vec s = random_sorted_probe(nd, 13000 + 17 * t + probe);
            log.require(predictability(n, s) >= predictability(degraded, s) - 1e-8,
                        "predictability monotone");
        }
        for (std::size_t probe = 0; probe < 5; ++probe) {
            const std::size_t ell = 1 + probe % 3;
            const game_spec g(ell, nd, sample_random(ell * nd, 14000 + 23 * t + probe));
            log.require(t_game_payoff(n, g) >= t_game_payoff(degraded, g) - 1e-8,
                        "t-game payoff monotone");
        }
        for (const entropy_spec& spec : {entropy_spec::shannon(), entropy_spec::min_entropy(),
                                         entropy_spec::max_entropy(), entropy_spec::renyi(2.0)}) {
            log.require(channel_entropy_max_ext(n, spec) <=
                            channel_entropy_max_ext(degraded, spec) + 1e-8,
                        "channel entropy antitone");
        }
        log.require(channel_entropy_min_ext_shannon(n) <=
                        channel_entropy_min_ext_shannon(degraded) + 1e-8,
                    "minimal-extension entropy antitone");

        // Padding never changes decisions; column permutations are equivalent.
        const channel padded = n.padded_output(nd + 2);
        log.require(channel_majorizes(padded, degraded).holds == cd.holds, "output padding invariance");
        log.require(channel_majorizes(n, degraded.padded_output(nd + 1)).holds == cd.holds,
                    "target padding invariance");
        std::vector<prob_vector> perm_cols(n.columns().rbegin(), n.columns().rend());
        log.require(channel_equivalent(n, channel(perm_cols)), "column permutation equivalence");
    }

    // Channel oracle: no oracle-yes/production-no instances.
    for (std::size_t t = 0; t < (fast ? 10 : 40); ++t) {
        const channel n = sample_random_channel(1 + rng() % 3, 2 + rng() % 3, 16000 + t);
        const channel m = t % 2 == 0 ? degraded_channel(n, 1, 17000 + t)
                                     : sample_random_channel(1 + rng() % 2, n.output_dim(), 17500 + t);
        const grid_verdict v = oracle::oracle_channel_majorizes(n, m, {0.02, 5, 24});
        const bool prod = channel_majorizes(n, m).holds;
        log.require(v != grid_verdict::yes || prod, "oracle-yes but production-no");
    }

    // Set-containment characterization on tiny standard-form instances.
    for (std::size_t t = 0; t < (fast ? 10 : 40); ++t) {
        const channel n = standard_form(sample_random_channel(1 + rng() % 2, 2 + rng() % 2, 17800 + t));
        const channel m = standard_form(sample_random_channel(1 + rng() % 2, n.output_dim(), 17900 + t));
        log.require(oracle::oracle_channel_set_containment(n, m) == channel_majorizes(n, m).holds,
                    "set containment vs channel decision");
    }

    // Conditional games, entropy, sorting invariance, refuter consistency.
    for (std::size_t t = 0; t < (fast ? 10 : 40); ++t) {
        const std::size_t n = 2 + rng() % 3;
        const std::size_t m = 1 + rng() % 3;
        const joint_dist p = random_joint(n, m, 18000 + t);
        const joint_dist q = degraded_joint(p, 1 + rng() % 3, 19000 + t);
        const cond_decision cd = conditionally_majorizes(p, q);
        log.require(cd.holds, "constructed degraded joint must be majorized");
        for (std::size_t probe = 0; probe < 5; ++probe) {
            const cond_game g = random_cond_game(n, 1 + probe % 3, 20000 + 31 * t + probe);
            log.require(cond_game_payoff(p, g) >= cond_game_payoff(q, g) - 1e-8,
                        "conditional game monotone");
        }
        log.require(conditional_entropy(p) <= conditional_entropy(q) + 1e-8,
                    "conditional entropy antitone");

        // Conditionally permuting the X entries of each column is reversible.
        std::vector<vec> shuffled;
        for (std::size_t y = 0; y < p.y_dim(); ++y) {
            vec col = p.column(y);
            std::shuffle(col.begin(), col.end(), rng);
            shuffled.push_back(std::move(col));
        }
        const joint_dist p_shuffled = joint_dist::from_columns(std::move(shuffled));
        log.require(conditionally_majorizes(p_shuffled, q).holds == cd.holds,
                    "conditional sorting invariance");

        // A refutation instance: uniform-X joint cannot majorize a correlated one.
        if (t % 4 == 0) {
            std::vector<vec> ucols(2, vec(2, 0.25));
            std::vector<vec> diag{{0.5, 0.0}, {0.0, 0.5}};
            const cond_decision neg = conditionally_majorizes(joint_dist::from_columns(std::move(ucols)),
                                                              joint_dist::from_columns(std::move(diag)));
            log.require(!neg.holds && neg.refuter.has_value(), "uniform vs correlated refutation");
        }
    }

    // LP duality on random bounded feasible programs.
    for (std::size_t t = 0; t < mid; ++t) {
        std::mt19937_64 lprng(30000 + t);
        std::uniform_real_distribution<double> coeff(0.1, 1.1);
        const std::size_t rows = 1 + lprng() % 4;
        const std::size_t cols = 1 + lprng() % 4;
        feasibility_problem prob;
        prob.sense = constraint_sense::ge;
        for (std::size_t i = 0; i < rows; ++i) {
            vec row(cols);
            for (double& v : row) v = coeff(lprng);
            prob.a.push_back(std::move(row));
            prob.b.push_back(coeff(lprng));
        }
        vec c(cols);
        for (double& v : c) v = coeff(lprng);
        const lp_min_result res = solve_lp_min(c, prob); // strong duality asserted inside
        log.require(res.st == lp_min_result::status::optimal, "random LP should be optimal");
        if (res.st == lp_min_result::status::optimal)
            log.require(dot(res.dual, prob.b) <= res.value + 1e-8, "weak duality");
    }

    return finish("property suites", log);
}

criterion_result c9_regularization_trend() {
    check_log log;
    const channel c = make_channel({{0.9, 0.1}, {0.1, 0.9}});
    const double bound = shannon_entropy(pv({0.9, 0.1}));
    vec trend;
    try {
        trend = regularized_min_ext_trend(c, 5);
    } catch (const std::exception& e) {
        log.require(false, std::string("trend computation failed: ") + e.what());
        return finish("regularization trend", log);
    }
    for (std::size_t k = 1; k < trend.size(); ++k)
        log.require(trend[k] >= trend[k - 1] - 1e-9, "estimate decreased at k=" + std::to_string(k + 1));
    for (double v : trend) log.require(v <= bound + 1e-9, "estimate exceeds min-output entropy");
    std::ostringstream note;
    note << "gap at k=5: " << bound - trend.back() << " bits";
    return finish("regularization trend", log, note.str());
}

criterion_result c10_typical_majorizer(bool fast) {
    check_log log;
    const std::size_t vectors = 20;
    std::size_t checked = 0;
    std::size_t attained = 0; // vectors whose dominance sets in within range and persists
    const std::size_t cap = fast ? 20000 : 200000;
    for (std::size_t t = 0; t < vectors; ++t) {
        const std::size_t n = 2 + t % 2;
        const prob_vector p = sample_random(n, 77000 + t);
        std::vector<bool> pattern;
        for (unsigned k = 1;; ++k) {
            double dim = std::pow(static_cast<double>(n), k);
            if (dim > static_cast<double>(cap)) break;
            const typical_majorizer_result res = typical_majorizer(p, 0.1, 0.1, k, {}, cap);
            if (!res.checked) break;
            ++checked;
            pattern.push_back(res.valid);
            log.require(res.valid, "r_k fails to majorize p^k at n=" + std::to_string(n) +
                                       " k=" + std::to_string(k));
        }
        auto first = std::find(pattern.begin(), pattern.end(), true);
        if (first != pattern.end() && std::find(first, pattern.end(), false) == pattern.end())
            ++attained;
    }
    criterion_result res = finish("typical-majorizer validity", log,
                                  std::to_string(checked) + " (p,k) instances checked");
    if (!res.pass) {
        res.detail += " | dominance is asymptotic: it sets in and persists within the "
                      "materializable range for " +
                      std::to_string(attained) + "/" + std::to_string(vectors) + " vectors";
    }
    return res;
}

} // namespace

std::vector<criterion_result> run_all(bool fast) {
    std::vector<criterion_result> out;
    out.push_back(c1_worked_example());
    out.push_back(c2_optimal_bounds_figure());
    out.push_back(c3_hasselbarth());
    out.push_back(c4_lorenz_example());
    out.push_back(c5_dmax_dmin_counterexample());
    out.push_back(c6_choi_counterexample());
    out.push_back(c7_unique_extensions(fast));
    out.push_back(c8_property_suites(fast));
    out.push_back(c9_regularization_trend());
    out.push_back(c10_typical_majorizer(fast));
    return out;
}

} // namespace chanmaj::acceptance
