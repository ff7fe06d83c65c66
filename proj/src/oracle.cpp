#include "chanmaj/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace chanmaj::oracle {

namespace {

// Minimal phase-one simplex for A x = b, x >= 0, kept separate from the
// production solver on purpose.
bool equality_system_feasible(const std::vector<std::vector<double>>& a,
                              const std::vector<double>& b) {
    const std::size_t m = a.size();
    const std::size_t n = a.empty() ? 0 : a.front().size();
    std::vector<std::vector<double>> t(m, std::vector<double>(n + m + 1, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        const double sgn = b[i] < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = sgn * a[i][j];
        t[i][n + i] = 1.0;
        t[i][n + m] = sgn * b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    std::vector<double> obj(n + m, 0.0);
    double value = 0.0;
    auto rebuild = [&]() {
        for (std::size_t j = 0; j < n; ++j) obj[j] = 0.0;
        for (std::size_t j = n; j < n + m; ++j) obj[j] = 1.0;
        value = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] < n) continue;
            for (std::size_t j = 0; j < n + m; ++j) obj[j] -= t[i][j];
            value += t[i][n + m];
        }
    };
    rebuild();
    for (;;) {
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (obj[j] < -1e-11) { enter = j; break; }
        }
        if (enter == n + m) break;
        std::size_t leave = m;
        double best = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] > 1e-11) {
                const double ratio = t[i][n + m] / t[i][enter];
                if (leave == m || ratio < best - 1e-11 ||
                    (ratio < best + 1e-11 && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
        }
        if (leave == m) break;
        const double pe = t[leave][enter];
        for (double& v : t[leave]) v /= pe;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave) continue;
            const double f = t[i][enter];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
        rebuild();
    }
    return value <= 1e-8;
}

bool profile_dominates(const std::vector<double>& v, const std::vector<double>& target_profile) {
    std::vector<double> s = v;
    for (double& x : s) x = std::abs(x);
    std::sort(s.begin(), s.end(), std::greater<double>());
    double acc = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        acc += s[k];
        if (acc < target_profile[k] - 1e-9) return false;
    }
    return true;
}

std::vector<double> profile_of(const std::vector<double>& v) {
    std::vector<double> s = v;
    for (double& x : s) x = std::abs(x);
    std::sort(s.begin(), s.end(), std::greater<double>());
    for (std::size_t k = 1; k < s.size(); ++k) s[k] += s[k - 1];
    return s;
}

} // namespace

bool oracle_majorizes(const prob_vector& p_in, const prob_vector& q_in, const oracle_config& cfg) {
    const std::size_t n = std::max(p_in.dim(), q_in.dim());
    if (n > cfg.max_dim) throw std::invalid_argument("oracle_majorizes: dimension above max_dim");
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= k;
    if (fact > cfg.max_perms) throw std::invalid_argument("oracle_majorizes: permutation cap exceeded");
    const vec p = p_in.padded(n).entries();
    const vec q = q_in.padded(n).entries();

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<std::vector<double>> columns; // one column per permutation of p
    do {
        std::vector<double> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = p[perm[i]];
        columns.push_back(std::move(col));
    } while (std::next_permutation(perm.begin(), perm.end()));

    const std::size_t nv = columns.size();
    std::vector<std::vector<double>> a(n + 1, std::vector<double>(nv, 0.0));
    std::vector<double> b(n + 1, 0.0);
    for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t i = 0; i < n; ++i) a[i][v] = columns[v][i];
    for (std::size_t i = 0; i < n; ++i) b[i] = q[i];
    for (std::size_t v = 0; v < nv; ++v) a[n][v] = 1.0;
    b[n] = 1.0;
    return equality_system_feasible(a, b);
}

bool oracle_channel_set_containment(const channel& n_in, const channel& m_in,
                                    const oracle_config& cfg) {
    const std::size_t nd = std::max(n_in.output_dim(), m_in.output_dim());
    if (nd > cfg.max_dim)
        throw std::invalid_argument("oracle_channel_set_containment: dimension above max_dim");
    const channel n = n_in.padded_output(nd);
    const channel m = m_in.padded_output(nd);

    std::vector<std::size_t> perm(nd);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<std::vector<double>> points;
    do {
        for (const auto& col : n.columns()) {
            std::vector<double> v(nd);
            for (std::size_t i = 0; i < nd; ++i) v[i] = col[perm[i]];
            points.push_back(std::move(v));
        }
        if (points.size() > cfg.max_perms * n.input_dim())
            throw std::invalid_argument("oracle_channel_set_containment: permutation cap exceeded");
    } while (std::next_permutation(perm.begin(), perm.end()));

    const std::size_t nv = points.size();
    for (std::size_t w = 0; w < m.input_dim(); ++w) {
        std::vector<std::vector<double>> a(nd + 1, std::vector<double>(nv, 0.0));
        std::vector<double> b(nd + 1, 0.0);
        for (std::size_t v = 0; v < nv; ++v)
            for (std::size_t i = 0; i < nd; ++i) a[i][v] = points[v][i];
        for (std::size_t i = 0; i < nd; ++i) b[i] = m.column(w)[i];
        for (std::size_t v = 0; v < nv; ++v) a[nd][v] = 1.0;
        b[nd] = 1.0;
        if (!equality_system_feasible(a, b)) return false;
    }
    return true;
}

grid_verdict oracle_channel_majorizes(const channel& n_in, const channel& m_in,
                                      const oracle_config& cfg) {
    if (n_in.input_dim() > 3 || n_in.output_dim() > cfg.max_dim || m_in.output_dim() > cfg.max_dim)
        throw std::invalid_argument("oracle_channel_majorizes: instance above caps");
    const std::size_t nd = std::max(n_in.output_dim(), m_in.output_dim());
    const channel n = n_in.padded_output(nd);
    const channel m = m_in.padded_output(nd);

    std::vector<vec> sorted_cols;
    for (const auto& c : n.columns()) sorted_cols.push_back(c.sorted());

    const auto steps = static_cast<std::size_t>(std::llround(1.0 / cfg.grid_step));
    auto mixture = [&](const std::vector<double>& w) {
        vec mix(nd, 0.0);
        for (std::size_t x = 0; x < sorted_cols.size(); ++x)
            for (std::size_t i = 0; i < nd; ++i) mix[i] += w[x] * sorted_cols[x][i];
        return mix;
    };

    for (std::size_t w = 0; w < m.input_dim(); ++w) {
        const std::vector<double> target = profile_of(m.column(w).entries());
        bool found = false;
        if (n.input_dim() == 1) {
            found = profile_dominates(mixture({1.0}), target);
        } else if (n.input_dim() == 2) {
            for (std::size_t i = 0; i <= steps && !found; ++i) {
                const double t = static_cast<double>(i) / static_cast<double>(steps);
                found = profile_dominates(mixture({t, 1.0 - t}), target);
            }
        } else {
            for (std::size_t i = 0; i <= steps && !found; ++i) {
                for (std::size_t j = 0; i + j <= steps && !found; ++j) {
                    const double t1 = static_cast<double>(i) / static_cast<double>(steps);
                    const double t2 = static_cast<double>(j) / static_cast<double>(steps);
                    found = profile_dominates(mixture({t1, t2, 1.0 - t1 - t2}), target);
                }
            }
        }
        if (!found) return grid_verdict::unknown;
    }
    return grid_verdict::yes;
}

bool oracle_upper_bound_minimality(const std::vector<prob_vector>& a, const prob_vector& candidate,
                                   std::size_t samples, std::uint64_t seed,
                                   const oracle_config& cfg) {
    (void)cfg;
    if (a.empty()) throw std::invalid_argument("oracle_upper_bound_minimality: empty set");
    std::size_t n = candidate.dim();
    for (const auto& p : a) n = std::max(n, p.dim());

    std::vector<std::vector<double>> member_profiles;
    for (const auto& p : a) member_profiles.push_back(profile_of(p.padded(n).entries()));
    const std::vector<double> cand_profile = profile_of(candidate.padded(n).entries());

    auto majorizes_all = [&](const std::vector<double>& v) {
        for (const auto& prof : member_profiles)
            if (!profile_dominates(v, prof)) return false;
        return true;
    };

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::size_t accepted = 0;
    std::size_t tried = 0;
    bool all_dominate = true;
    while (accepted < samples && tried < 50 * samples) {
        ++tried;
        std::vector<double> q;
        if (tried % 2 == 0) {
            // Peak mixture: slide the candidate toward the point mass.
            const double lam = unit(rng);
            q.assign(n, 0.0);
            const vec base = candidate.padded(n).sorted();
            for (std::size_t i = 0; i < n; ++i) q[i] = (1.0 - lam) * base[i];
            q[0] += lam;
        } else {
            // Dirichlet rejection sample.
            vec cuts(n - 1);
            for (double& c : cuts) c = unit(rng);
            std::sort(cuts.begin(), cuts.end());
            q.assign(n, 0.0);
            double prev = 0.0;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                q[i] = cuts[i] - prev;
                prev = cuts[i];
            }
            q[n - 1] = 1.0 - prev;
        }
        if (!majorizes_all(q)) continue;
        ++accepted;
        if (!profile_dominates(q, cand_profile)) all_dominate = false;
    }
    return all_dominate;
}

} // namespace chanmaj::oracle
