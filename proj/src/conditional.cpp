#include "chanmaj/conditional.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace chanmaj {

joint_dist::joint_dist(std::size_t n, std::size_t m, const vec& weights_row_major,
                       const tolerance& tol) {
    if (n == 0 || m == 0) throw std::invalid_argument("joint_dist: empty dimensions");
    if (weights_row_major.size() != n * m)
        throw std::invalid_argument("joint_dist: weight count does not match n*m");
    std::vector<vec> cols(m, vec(n, 0.0));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < m; ++y) cols[y][x] = weights_row_major[x * m + y];
    *this = from_columns(std::move(cols), tol);
}

joint_dist joint_dist::from_columns(std::vector<vec> cols, const tolerance& tol) {
    joint_dist jd;
    if (cols.empty() || cols.front().empty())
        throw std::invalid_argument("joint_dist: empty columns");
    jd.n_ = cols.front().size();
    double total = 0.0;
    jd.mass_.assign(cols.size(), 0.0);
    for (std::size_t y = 0; y < cols.size(); ++y) {
        if (cols[y].size() != jd.n_) throw std::invalid_argument("joint_dist: ragged columns");
        double m = 0.0;
        for (double& v : cols[y]) {
            if (v < 0.0) {
                if (v < -tol.abs_eps) throw std::invalid_argument("joint_dist: negative weight");
                v = 0.0;
            }
            m += v;
        }
        jd.mass_[y] = m;
        total += m;
    }
    const double nm = static_cast<double>(jd.n_ * cols.size());
    if (std::abs(total - 1.0) > nm * tol.abs_eps)
        throw std::invalid_argument("joint_dist: total mass is not 1");
    jd.cols_ = std::move(cols);
    return jd;
}

prob_vector joint_dist::conditional(std::size_t y) const {
    if (zero_mass_column(y)) return prob_vector::uniform(n_);
    vec c = cols_[y];
    for (double& v : c) v /= mass_[y];
    return prob_vector(std::move(c));
}

joint_dist joint_dist::padded_x(std::size_t n) const {
    if (n < n_) throw std::invalid_argument("padded_x: cannot shrink");
    std::vector<vec> cols = cols_;
    for (auto& c : cols) c.resize(n, 0.0);
    return from_columns(std::move(cols));
}

vec joint_dist::weights_row_major() const {
    vec w(n_ * cols_.size(), 0.0);
    for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = 0; y < cols_.size(); ++y) w[x * cols_.size() + y] = cols_[y][x];
    return w;
}

joint_dist tensor(const joint_dist& a, const joint_dist& b) {
    std::vector<vec> cols;
    cols.reserve(a.y_dim() * b.y_dim());
    for (std::size_t ya = 0; ya < a.y_dim(); ++ya) {
        for (std::size_t yb = 0; yb < b.y_dim(); ++yb) {
            vec c;
            c.reserve(a.x_dim() * b.x_dim());
            for (std::size_t xa = 0; xa < a.x_dim(); ++xa)
                for (std::size_t xb = 0; xb < b.x_dim(); ++xb)
                    c.push_back(a.column(ya)[xa] * b.column(yb)[xb]);
            cols.push_back(std::move(c));
        }
    }
    return joint_dist::from_columns(std::move(cols));
}

namespace {

// Cumulative-sum (L-matrix) image of a sorted column.
vec lorenz_of(const vec& c) { return prefix_sums(sorted_desc(c)); }

struct stacked_lp {
    feasibility_problem prob;
    std::vector<std::size_t> live_sources; // kept P columns
    std::vector<std::size_t> live_targets; // kept Q columns
    std::size_t n = 0;
};

stacked_lp build_conditional_lp(const joint_dist& p, const joint_dist& q) {
    stacked_lp out;
    const std::size_t n = out.n = p.x_dim();
    for (std::size_t y = 0; y < p.y_dim(); ++y)
        if (!p.zero_mass_column(y)) out.live_sources.push_back(y);
    for (std::size_t w = 0; w < q.y_dim(); ++w)
        if (!q.zero_mass_column(w)) out.live_targets.push_back(w);

    const std::size_t m = out.live_sources.size();
    const std::size_t mq = out.live_targets.size();
    const std::size_t nvars = m * mq;
    auto var = [&](std::size_t t, std::size_t s) { return t * m + s; };

    mat lp_cols(m); // L * p_y_sorted per live source
    for (std::size_t s = 0; s < m; ++s) lp_cols[s] = lorenz_of(p.column(out.live_sources[s]));

    out.prob.sense = constraint_sense::ge;
    for (std::size_t t = 0; t < mq; ++t) {
        const vec lq = lorenz_of(q.column(out.live_targets[t]));
        for (std::size_t k = 0; k < n; ++k) {
            vec row(nvars, 0.0);
            for (std::size_t s = 0; s < m; ++s) row[var(t, s)] = lp_cols[s][k];
            out.prob.a.push_back(std::move(row));
            out.prob.b.push_back(lq[k]);
        }
    }
    for (std::size_t s = 0; s < m; ++s) {
        vec row(nvars, 0.0);
        for (std::size_t t = 0; t < mq; ++t) row[var(t, s)] = -1.0;
        out.prob.a.push_back(std::move(row));
        out.prob.b.push_back(-1.0);
    }
    return out;
}

} // namespace

cond_decision conditionally_majorizes(const joint_dist& p_in, const joint_dist& q_in,
                                      const tolerance& tol) {
    const std::size_t n = std::max(p_in.x_dim(), q_in.x_dim());
    const joint_dist p = p_in.x_dim() == n ? p_in : p_in.padded_x(n);
    const joint_dist q = q_in.x_dim() == n ? q_in : q_in.padded_x(n);

    const stacked_lp sl = build_conditional_lp(p, q);
    const std::size_t m = sl.live_sources.size();
    const std::size_t mq = sl.live_targets.size();
    const lp_result res = solve_feasibility(sl.prob, tol);

    cond_decision decision;
    if (res.feasible) {
        decision.holds = true;
        // Rescale each source column of R up to exactly stochastic; raising
        // weights can only strengthen the >= constraints.
        mat r(q_in.y_dim(), vec(p_in.y_dim(), 0.0));
        for (std::size_t s = 0; s < m; ++s) {
            double colsum = 0.0;
            for (std::size_t t = 0; t < mq; ++t) colsum += res.x[t * m + s];
            if (colsum <= 0.0) {
                r[sl.live_targets.empty() ? 0 : sl.live_targets[0]][sl.live_sources[s]] = 1.0;
                continue;
            }
            for (std::size_t t = 0; t < mq; ++t)
                r[sl.live_targets[t]][sl.live_sources[s]] = res.x[t * m + s] / colsum;
        }
        // Dropped (zero-mass) sources get an arbitrary valid column.
        for (std::size_t y = 0; y < p_in.y_dim(); ++y) {
            if (!p_in.zero_mass_column(y)) continue;
            r[0][y] = 1.0;
        }
        decision.mixing = std::move(r);
        return decision;
    }

    decision.holds = false;
    // Farkas rows: mq blocks of n (the v_w) followed by m stochasticity rows.
    // s_w = L^T v_w is nonincreasing by construction.
    mat s(n, vec(q_in.y_dim(), 0.0));
    double max_col_sum = 0.0;
    for (std::size_t t = 0; t < mq; ++t) {
        double colsum = 0.0;
        for (std::size_t x = 0; x < n; ++x) {
            double acc = 0.0;
            for (std::size_t k = x; k < n; ++k) acc += res.farkas[t * n + k];
            s[x][sl.live_targets[t]] = acc;
            colsum += acc;
        }
        max_col_sum = std::max(max_col_sum, colsum);
    }
    if (max_col_sum <= 0.0)
        throw std::logic_error("conditionally_majorizes: degenerate Farkas certificate");
    for (auto& row : s)
        for (double& v : row) v /= max_col_sum;
    if (s_test(p_in, q_in, s, tol))
        throw std::logic_error("conditionally_majorizes: refuter fails to violate the s-test");
    decision.refuter = std::move(s);
    return decision;
}

cond_game validate_cond_game(mat t, const tolerance& tol) {
    if (t.empty() || t.front().empty()) throw std::invalid_argument("cond_game: empty matrix");
    const std::size_t ell = t.front().size();
    vec colsum(ell, 0.0);
    for (const auto& row : t) {
        if (row.size() != ell) throw std::invalid_argument("cond_game: ragged matrix");
        for (std::size_t w = 0; w < ell; ++w) {
            if (row[w] < -tol.abs_eps) throw std::invalid_argument("cond_game: negative entry");
            colsum[w] += row[w];
        }
    }
    for (double c : colsum)
        if (c > 1.0 + tol.abs_eps)
            throw std::invalid_argument("cond_game: column mass exceeds 1");
    return cond_game{std::move(t)};
}

double cond_game_payoff(const joint_dist& p, const cond_game& game, const tolerance& tol) {
    (void)tol;
    const std::size_t n = p.x_dim();
    if (game.guesses_dim() != n)
        throw std::invalid_argument("cond_game_payoff: game has wrong number of rows");
    const std::size_t ell = game.actions();

    // s_{xw} = sum_{k >= x} t_{k|w}
    mat s(n, vec(ell, 0.0));
    for (std::size_t w = 0; w < ell; ++w) {
        double acc = 0.0;
        for (std::size_t x = n; x-- > 0;) {
            acc += game.t[x][w];
            s[x][w] = acc;
        }
    }
    double payoff = 0.0;
    for (std::size_t y = 0; y < p.y_dim(); ++y) {
        const vec sorted = sorted_desc(p.column(y));
        double best = 0.0;
        for (std::size_t w = 0; w < ell; ++w) {
            double v = 0.0;
            for (std::size_t x = 0; x < n; ++x) v += s[x][w] * sorted[x];
            best = std::max(best, v);
        }
        payoff += best;
    }
    return payoff;
}

double conditional_entropy(const joint_dist& p) {
    double h = 0.0;
    for (std::size_t y = 0; y < p.y_dim(); ++y) {
        if (p.zero_mass_column(y)) continue;
        h += p.y_mass(y) * shannon_entropy(p.conditional(y));
    }
    return h;
}

bool s_test(const joint_dist& p_in, const joint_dist& q_in, const mat& s, const tolerance& tol) {
    const std::size_t n = std::max(p_in.x_dim(), q_in.x_dim());
    const joint_dist p = p_in.x_dim() == n ? p_in : p_in.padded_x(n);
    const joint_dist q = q_in.x_dim() == n ? q_in : q_in.padded_x(n);
    if (s.size() != n) throw std::invalid_argument("s_test: S must have X-dimension rows");
    const std::size_t mq = q.y_dim();
    for (const auto& row : s)
        if (row.size() != mq) throw std::invalid_argument("s_test: S must have one column per target");
    for (std::size_t w = 0; w < mq; ++w) {
        for (std::size_t x = 0; x < n; ++x) {
            const double v = s[x][w];
            if (v < -tol.abs_eps || v > 1.0 + tol.abs_eps)
                throw std::invalid_argument("s_test: entries must lie in [0,1]");
            if (x + 1 < n && s[x + 1][w] > v + tol.abs_eps)
                throw std::invalid_argument("s_test: columns must be nonincreasing");
        }
    }

    double lhs = 0.0;
    for (std::size_t y = 0; y < p.y_dim(); ++y) {
        const vec sorted = sorted_desc(p.column(y));
        double best = 0.0;
        for (std::size_t w = 0; w < mq; ++w) {
            double v = 0.0;
            for (std::size_t x = 0; x < n; ++x) v += s[x][w] * sorted[x];
            best = std::max(best, v);
        }
        lhs += best;
    }
    double rhs = 0.0;
    for (std::size_t w = 0; w < mq; ++w) {
        const vec sorted = sorted_desc(q.column(w));
        for (std::size_t x = 0; x < n; ++x) rhs += s[x][w] * sorted[x];
    }
    return tol.geq(lhs, rhs);
}

} // namespace chanmaj
