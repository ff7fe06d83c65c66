#include "chanmaj/channel.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <random>
#include <stdexcept>

#include "chanmaj/majorize.hpp"

namespace chanmaj {

channel::channel(std::vector<prob_vector> columns, std::string name)
    : columns_(std::move(columns)), name_(std::move(name)) {
    if (columns_.empty()) throw std::invalid_argument("channel: no columns");
    const std::size_t n = columns_.front().dim();
    for (const auto& c : columns_)
        if (c.dim() != n) throw std::invalid_argument("channel: columns of unequal dimension");
}

channel channel::padded_output(std::size_t n) const {
    std::vector<prob_vector> cols;
    cols.reserve(columns_.size());
    for (const auto& c : columns_) cols.push_back(c.padded(n));
    return channel(std::move(cols), name_);
}

double channel::max_entry() const {
    double mx = 0.0;
    for (const auto& c : columns_)
        for (std::size_t i = 0; i < c.dim(); ++i) mx = std::max(mx, c[i]);
    return mx;
}

std::size_t channel::min_support(const tolerance& tol) const {
    std::size_t k = columns_.front().dim();
    for (const auto& c : columns_) k = std::min(k, c.support_size(tol));
    return k;
}

channel tensor(const channel& a, const channel& b) {
    std::vector<prob_vector> cols;
    cols.reserve(a.input_dim() * b.input_dim());
    for (std::size_t x = 0; x < a.input_dim(); ++x)
        for (std::size_t y = 0; y < b.input_dim(); ++y)
            cols.push_back(tensor(a.column(x), b.column(y)));
    return channel(std::move(cols));
}

channel sample_random_channel(std::size_t m, std::size_t n, std::uint64_t seed) {
    std::vector<prob_vector> cols;
    cols.reserve(m);
    for (std::size_t x = 0; x < m; ++x) cols.push_back(sample_random(n, seed + 0x9e3779b97f4a7c15ull * (x + 1)));
    return channel(std::move(cols));
}

namespace {

vec lorenz_of(const prob_vector& p) { return prefix_sums(p.sorted()); }

// One LP: simplex weights over the given sorted profiles whose mixture
// prefix-dominates the target profile.
lp_result mixture_lp(const std::vector<vec>& lorenz_cols, const vec& lorenz_target,
                     const tolerance& tol) {
    const std::size_t m = lorenz_cols.size();
    const std::size_t n = lorenz_target.size();
    feasibility_problem prob;
    prob.sense = constraint_sense::ge;
    for (std::size_t k = 0; k < n; ++k) {
        vec row(m, 0.0);
        for (std::size_t x = 0; x < m; ++x) row[x] = lorenz_cols[x][k];
        prob.a.push_back(std::move(row));
        prob.b.push_back(lorenz_target[k]);
    }
    prob.a.push_back(vec(m, -1.0));
    prob.b.push_back(-1.0);
    return solve_feasibility(prob, tol);
}

vec rescale_to_simplex(vec s) {
    double sum = 0.0;
    for (double& v : s) {
        v = std::max(v, 0.0);
        sum += v;
    }
    if (sum <= 0.0) {
        s.assign(s.size(), 0.0);
        s[0] = 1.0;
        return s;
    }
    for (double& v : s) v /= sum;
    return s;
}

// Refuting predictability vector from the Farkas rows (t over the n profile
// rows, then the simplex row): s = L^T t, normalized to a probability vector.
vec refuter_from_farkas(const vec& farkas, std::size_t n) {
    vec s(n, 0.0);
    double sum = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
        double acc = 0.0;
        for (std::size_t k = x; k < n; ++k) acc += farkas[k];
        s[x] = acc;
        sum += acc;
    }
    if (sum <= 0.0) throw std::logic_error("channel_majorizes: degenerate Farkas certificate");
    for (double& v : s) v /= sum;
    return s;
}

} // namespace

channel_decision channel_majorizes(const channel& n_in, const channel& m_in, const tolerance& tol,
                                   unsigned jobs) {
    const std::size_t nd = std::max(n_in.output_dim(), m_in.output_dim());
    const channel n = n_in.output_dim() == nd ? n_in : n_in.padded_output(nd);
    const channel m = m_in.output_dim() == nd ? m_in : m_in.padded_output(nd);

    std::vector<vec> lorenz_cols;
    lorenz_cols.reserve(n.input_dim());
    for (const auto& c : n.columns()) lorenz_cols.push_back(lorenz_of(c));

    const std::size_t targets = m.input_dim();
    std::vector<lp_result> results(targets);
    auto solve_target = [&](std::size_t w) {
        results[w] = mixture_lp(lorenz_cols, lorenz_of(m.column(w)), tol);
    };
    if (jobs > 1) {
        std::vector<std::future<void>> futs;
        futs.reserve(targets);
        for (std::size_t w = 0; w < targets; ++w)
            futs.push_back(std::async(std::launch::async, solve_target, w));
        for (auto& f : futs) f.get();
    } else {
        for (std::size_t w = 0; w < targets; ++w) solve_target(w);
    }

    channel_decision decision;
    for (std::size_t w = 0; w < targets; ++w) {
        if (!results[w].feasible) {
            decision.holds = false;
            decision.weights.clear();
            decision.failing_column = w;
            decision.refuting_s = refuter_from_farkas(results[w].farkas, nd);
            // The certificate must actually separate the predictabilities.
            const double pn = predictability(n, *decision.refuting_s, tol);
            const double pm = dot(*decision.refuting_s, m.column(w).sorted());
            if (pn >= pm)
                throw std::logic_error("channel_majorizes: refuter fails to separate");
            return decision;
        }
        decision.weights.push_back(rescale_to_simplex(results[w].x));
    }
    decision.holds = true;
    return decision;
}

bool unsorted_mixture_covers(const channel& n_in, const channel& m_in, const tolerance& tol) {
    const std::size_t nd = std::max(n_in.output_dim(), m_in.output_dim());
    if (nd > 6) throw std::invalid_argument("unsorted_mixture_covers: output dimension above cap");
    const channel n = n_in.padded_output(nd);
    const channel m = m_in.padded_output(nd);
    const std::size_t nv = n.input_dim();

    std::vector<std::size_t> order(nd);
    std::iota(order.begin(), order.end(), std::size_t{0});

    for (std::size_t w = 0; w < m.input_dim(); ++w) {
        const vec target = lorenz_of(m.column(w));
        bool covered = false;
        std::vector<std::size_t> perm = order;
        std::sort(perm.begin(), perm.end());
        do {
            // Mixture sorted by this candidate order: monotonicity rows plus
            // prefix dominance rows plus the simplex row.
            feasibility_problem prob;
            prob.sense = constraint_sense::ge;
            auto mix_coeff = [&](std::size_t out_row) {
                vec row(nv, 0.0);
                for (std::size_t x = 0; x < nv; ++x) row[x] = n.column(x)[out_row];
                return row;
            };
            for (std::size_t k = 0; k + 1 < nd; ++k) {
                vec hi = mix_coeff(perm[k]);
                const vec lo = mix_coeff(perm[k + 1]);
                for (std::size_t x = 0; x < nv; ++x) hi[x] -= lo[x];
                prob.a.push_back(std::move(hi));
                prob.b.push_back(0.0);
            }
            vec acc(nv, 0.0);
            for (std::size_t k = 0; k < nd; ++k) {
                const vec row = mix_coeff(perm[k]);
                for (std::size_t x = 0; x < nv; ++x) acc[x] += row[x];
                prob.a.push_back(acc);
                prob.b.push_back(target[k]);
            }
            prob.a.push_back(vec(nv, -1.0));
            prob.b.push_back(-1.0);
            if (solve_feasibility(prob, tol).feasible) {
                covered = true;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!covered) return false;
    }
    return true;
}

channel standard_form(const channel& n, const tolerance& tol) {
    std::vector<prob_vector> cols;
    cols.reserve(n.input_dim());
    for (const auto& c : n.columns()) cols.push_back(prob_vector(c.sorted(), tol));

    // Remove columns majorized by a convex sum of the remaining ones, lowest
    // index first, restarting the scan after each removal.
    bool removed = true;
    while (removed && cols.size() > 1) {
        removed = false;
        for (std::size_t x = 0; x < cols.size(); ++x) {
            std::vector<vec> others;
            others.reserve(cols.size() - 1);
            for (std::size_t y = 0; y < cols.size(); ++y)
                if (y != x) others.push_back(prefix_sums(cols[y].entries()));
            const lp_result res = mixture_lp(others, prefix_sums(cols[x].entries()), tol);
            if (res.feasible) {
                cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(x));
                removed = true;
                break;
            }
        }
    }

    std::stable_sort(cols.begin(), cols.end(), [&](const prob_vector& a, const prob_vector& b) {
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    });
    return channel(std::move(cols), n.name());
}

bool is_standard_form(const channel& n, const tolerance& tol) {
    for (const auto& c : n.columns()) {
        for (std::size_t i = 0; i + 1 < c.dim(); ++i)
            if (c[i + 1] > c[i] + tol.abs_eps) return false;
    }
    for (std::size_t x = 0; x + 1 < n.input_dim(); ++x) {
        const auto& a = n.column(x);
        const auto& b = n.column(x + 1);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (std::abs(a[i] - b[i]) <= tol.abs_eps) continue;
            if (a[i] < b[i]) return false;
            break;
        }
    }
    const channel s = standard_form(n, tol);
    return s.input_dim() == n.input_dim();
}

double predictability(const channel& n, const vec& s, const tolerance& tol) {
    if (s.size() != n.output_dim())
        throw std::invalid_argument("predictability: s has wrong dimension");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < -tol.abs_eps) throw std::invalid_argument("predictability: s must be nonnegative");
        if (i + 1 < s.size() && s[i + 1] > s[i] + tol.abs_eps)
            throw std::invalid_argument("predictability: s must be nonincreasing");
    }
    double best = -kInf;
    for (const auto& c : n.columns()) best = std::max(best, dot(s, c.sorted()));
    return best;
}

game_spec::game_spec(std::size_t ell, std::size_t n_, prob_vector t)
    : actions(ell), guesses(n_), joint(std::move(t)) {
    if (ell == 0 || n_ == 0) throw std::invalid_argument("game_spec: empty dimensions");
    if (joint.dim() != ell * n_)
        throw std::invalid_argument("game_spec: joint distribution has wrong dimension");
}

double t_game_payoff(const channel& n, const game_spec& g, const tolerance& tol) {
    if (g.guesses != n.output_dim())
        throw std::invalid_argument("t_game_payoff: guess dimension mismatch");

    std::vector<vec> profiles;
    profiles.reserve(n.input_dim());
    for (const auto& c : n.columns()) profiles.push_back(lorenz_of(c));

    double direct = 0.0;
    for (std::size_t w = 0; w < g.actions; ++w) {
        double tw = 0.0;
        for (std::size_t k = 0; k < g.guesses; ++k) tw += g.weight(w, k);
        if (tw <= 0.0) continue;
        double best = 0.0;
        for (const auto& prof : profiles) {
            double v = 0.0;
            for (std::size_t k = 0; k < g.guesses; ++k) v += (g.weight(w, k) / tw) * prof[k];
            best = std::max(best, v);
        }
        direct += tw * best;
    }

    // Identity path: Pr_t(N) = sum_w P_N(U t_w) with the joint column weights.
    double via_pred = 0.0;
    for (std::size_t w = 0; w < g.actions; ++w) {
        vec s(g.guesses, 0.0);
        double acc = 0.0;
        for (std::size_t k = g.guesses; k-- > 0;) {
            acc += g.weight(w, k);
            s[k] = acc;
        }
        if (acc <= 0.0) continue;
        via_pred += predictability(n, s, tol);
    }
    if (std::abs(direct - via_pred) > 1e-9 * std::max(1.0, std::abs(direct)))
        throw std::logic_error("t_game_payoff: formula and predictability paths disagree");
    return direct;
}

bool two_input_fast_path(const channel& n_in, const channel& m_in, const tolerance& tol) {
    if (n_in.input_dim() != 2)
        throw std::invalid_argument("two_input_fast_path: channel must have two inputs");
    const std::size_t nd = std::max(n_in.output_dim(), m_in.output_dim());
    const channel n = n_in.padded_output(nd);
    const channel m = m_in.padded_output(nd);

    const vec p1 = lorenz_of(n.column(0));
    const vec p2 = lorenz_of(n.column(1));
    for (std::size_t w = 0; w < m.input_dim(); ++w) {
        const vec q = lorenz_of(m.column(w));
        double mu = 0.0;
        double nu = 1.0;
        for (std::size_t k = 0; k < nd; ++k) {
            const double gap = p1[k] - p2[k];
            const double need = q[k] - p2[k];
            if (tol.is_zero(gap)) {
                if (!tol.geq(p2[k], q[k])) return false;
            } else if (gap > 0.0) {
                mu = std::max(mu, need / gap);
            } else {
                nu = std::min(nu, need / gap);
            }
        }
        if (!tol.geq(nu, mu)) return false;
    }
    return true;
}

bool replacement_reduction(const prob_vector& p, const prob_vector& q, const tolerance& tol) {
    const channel np(std::vector<prob_vector>{p});
    const channel nq(std::vector<prob_vector>{q});
    const bool channel_level = channel_majorizes(np, nq, tol).holds;
    const bool vector_level = majorizes(p, q, tol);
    if (channel_level != vector_level)
        throw std::logic_error("replacement_reduction: channel and vector decisions disagree");
    return channel_level;
}

bool channel_equivalent(const channel& n_in, const channel& m_in, const tolerance& tol) {
    const std::size_t nd = std::max(n_in.output_dim(), m_in.output_dim());
    const channel sn = standard_form(n_in.padded_output(nd), tol);
    const channel sm = standard_form(m_in.padded_output(nd), tol);
    if (sn.input_dim() != sm.input_dim()) return false;
    for (std::size_t x = 0; x < sn.input_dim(); ++x)
        for (std::size_t i = 0; i < nd; ++i)
            if (!tol.eq(sn.column(x)[i], sm.column(x)[i])) return false;
    return true;
}

bool channel_maj_via_conditional(const channel& n, const channel& m, const tolerance& tol) {
    const std::size_t nd = std::max(n.output_dim(), m.output_dim());

    auto induced_joint = [&](const channel& c, const vec& input_dist) {
        std::vector<vec> cols;
        cols.reserve(c.input_dim());
        for (std::size_t x = 0; x < c.input_dim(); ++x) {
            vec col = c.column(x).padded(nd).entries();
            for (double& v : col) v *= input_dist[x];
            cols.push_back(std::move(col));
        }
        return joint_dist::from_columns(std::move(cols), tol);
    };

    const channel_decision cm = channel_majorizes(n, m, tol);
    if (cm.holds) {
        // Identify p through the witness: uniform q over M's inputs, p the
        // witness-weight marginal.
        const double qw = 1.0 / static_cast<double>(m.input_dim());
        vec p_in(n.input_dim(), 0.0);
        for (std::size_t w = 0; w < m.input_dim(); ++w)
            for (std::size_t x = 0; x < n.input_dim(); ++x) p_in[x] += qw * cm.weights[w][x];
        const joint_dist jp = induced_joint(n, p_in);
        const joint_dist jq = induced_joint(m, vec(m.input_dim(), qw));
        if (!conditionally_majorizes(jp, jq, tol).holds)
            throw std::logic_error("channel_maj_via_conditional: witness joint not conditionally majorizing");
        return true;
    }

    // No input pair may work when the channel decision is negative; spot-check
    // the natural candidates.
    const vec pu(n.input_dim(), 1.0 / static_cast<double>(n.input_dim()));
    const vec qu(m.input_dim(), 1.0 / static_cast<double>(m.input_dim()));
    if (conditionally_majorizes(induced_joint(n, pu), induced_joint(m, qu), tol).holds)
        throw std::logic_error("channel_maj_via_conditional: conditional route contradicts channel decision");
    return false;
}

} // namespace chanmaj
