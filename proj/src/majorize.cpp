#include "chanmaj/majorize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chanmaj {

vec t_transform::apply(const vec& v) const {
    vec out = v;
    out[i] = t * v[i] + (1.0 - t) * v[j];
    out[j] = t * v[j] + (1.0 - t) * v[i];
    return out;
}

vec t_chain_witness::apply(const vec& p) const {
    vec cur(perm_p.size());
    for (std::size_t k = 0; k < perm_p.size(); ++k)
        cur[k] = perm_p[k] < p.size() ? p[perm_p[k]] : 0.0;
    for (const auto& step : steps) cur = step.apply(cur);
    vec out(perm_q.size(), 0.0);
    for (std::size_t k = 0; k < perm_q.size(); ++k) out[perm_q[k]] = cur[k];
    return out;
}

namespace {

std::pair<vec, vec> pad_pair(const prob_vector& p, const prob_vector& q) {
    const std::size_t n = std::max(p.dim(), q.dim());
    vec a = p.entries();
    vec b = q.entries();
    a.resize(n, 0.0);
    b.resize(n, 0.0);
    return {std::move(a), std::move(b)};
}

// The constructive rule: x is the largest index with p_x > q_x, y the
// smallest index beyond x with p_y < q_y. For sorted vectors with p majorizing
// q such a y always exists and p_x > p_y strictly, so t is well defined and
// lands in [1/2, 1].
std::vector<t_transform> chain_on_sorted(vec p, const vec& q, const tolerance& tol) {
    std::vector<t_transform> steps;
    const std::size_t n = p.size();
    for (std::size_t guard = 0;; ++guard) {
        if (guard > n) throw std::logic_error("witness_t_chain: chain failed to converge");
        std::size_t x = n;
        for (std::size_t k = n; k-- > 0;) {
            if (tol.gt(p[k], q[k])) { x = k; break; }
        }
        if (x == n) break; // no surplus anywhere: vectors agree within tolerance
        std::size_t y = n;
        for (std::size_t k = x + 1; k < n; ++k) {
            if (tol.lt(p[k], q[k])) { y = k; break; }
        }
        if (y == n) {
            // Sub-tolerance deficits only; take the largest one beyond x.
            double best = 0.0;
            for (std::size_t k = x + 1; k < n; ++k) {
                if (q[k] - p[k] > best) { best = q[k] - p[k]; y = k; }
            }
            if (y == n) throw std::logic_error("witness_t_chain: no deficit index found");
        }
        const double eps = std::min(p[x] - q[x], q[y] - p[y]);
        const double t = 1.0 - eps / (p[x] - p[y]);
        t_transform step{x, y, t};
        p = step.apply(p);
        steps.push_back(step);
    }
    return steps;
}

} // namespace

bool majorizes(const prob_vector& p, const prob_vector& q, const tolerance& tol) {
    return p.profile().dominates(q.profile(), tol);
}

ky_fan_gap_witness witness_ky_fan(const prob_vector& p, const prob_vector& q,
                                  const tolerance& tol) {
    if (!majorizes(p, q, tol)) throw not_comparable("witness_ky_fan: p does not majorize q");
    auto [a, b] = pad_pair(p, q);
    const vec pa = ky_fan(a).values;
    const vec pb = ky_fan(b).values;
    vec gaps(pa.size());
    for (std::size_t k = 0; k < pa.size(); ++k) gaps[k] = pa[k] - pb[k];
    return ky_fan_gap_witness{std::move(gaps)};
}

t_chain_witness witness_t_chain(const prob_vector& p, const prob_vector& q, const tolerance& tol) {
    if (!majorizes(p, q, tol)) throw not_comparable("witness_t_chain: p does not majorize q");
    auto [a, b] = pad_pair(p, q);
    t_chain_witness w;
    w.perm_p = sort_desc_indices(a);
    w.perm_q = sort_desc_indices(b);
    vec ps(a.size()), qs(b.size());
    for (std::size_t k = 0; k < a.size(); ++k) ps[k] = a[w.perm_p[k]];
    for (std::size_t k = 0; k < b.size(); ++k) qs[k] = b[w.perm_q[k]];
    w.steps = chain_on_sorted(std::move(ps), qs, tol);
    return w;
}

doubly_stochastic_witness witness_doubly_stochastic(const prob_vector& p, const prob_vector& q,
                                                    const tolerance& tol) {
    const t_chain_witness chain = witness_t_chain(p, q, tol);
    const std::size_t n = chain.perm_p.size();

    // Feed the chain with basis vectors to materialize its matrix.
    mat d(n, vec(n, 0.0));
    for (std::size_t col = 0; col < n; ++col) {
        vec e(n, 0.0);
        e[col] = 1.0;
        const vec image = chain.apply(e);
        for (std::size_t row = 0; row < n; ++row) d[row][col] = image[row];
    }
    return doubly_stochastic_witness{std::move(d)};
}

bool is_doubly_stochastic(const mat& d, const tolerance& tol) {
    const std::size_t n = d.size();
    if (n == 0) return false;
    const double slack = static_cast<double>(n) * tol.abs_eps;
    vec col_sum(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i].size() != n) return false;
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (d[i][j] < -tol.abs_eps) return false;
            row_sum += d[i][j];
            col_sum[j] += d[i][j];
        }
        if (std::abs(row_sum - 1.0) > slack) return false;
    }
    for (double s : col_sum)
        if (std::abs(s - 1.0) > slack) return false;
    return true;
}

bool check_witness(const majorization_witness& w, const prob_vector& p, const prob_vector& q,
                   const tolerance& tol) {
    const std::size_t n = std::max(p.dim(), q.dim());
    const auto padded_q = q.padded(n);
    const double slack = static_cast<double>(n) * tol.abs_eps * 10.0;

    if (const auto* gap = std::get_if<ky_fan_gap_witness>(&w)) {
        if (gap->gaps.size() != n) return false;
        auto [a, b] = pad_pair(p, q);
        const vec pa = ky_fan(a).values;
        const vec pb = ky_fan(b).values;
        for (std::size_t k = 0; k < n; ++k) {
            if (gap->gaps[k] < -tol.abs_eps) return false;
            if (std::abs(pa[k] - pb[k] - gap->gaps[k]) > slack) return false;
        }
        return std::abs(gap->gaps[n - 1]) <= slack;
    }
    if (const auto* chain = std::get_if<t_chain_witness>(&w)) {
        if (chain->perm_p.size() != n || chain->perm_q.size() != n) return false;
        if (chain->steps.size() + 1 > n) return false; // each step fixes a coordinate
        for (const auto& s : chain->steps) {
            if (s.i == s.j || s.i >= n || s.j >= n) return false;
            if (s.t < 0.5 - tol.abs_eps || s.t > 1.0 + tol.abs_eps) return false;
        }
        const vec image = chain->apply(p.entries());
        for (std::size_t k = 0; k < n; ++k)
            if (std::abs(image[k] - padded_q[k]) > slack) return false;
        return true;
    }
    const auto& ds = std::get<doubly_stochastic_witness>(w);
    if (!is_doubly_stochastic(ds.d, tol)) return false;
    vec pv = p.entries();
    pv.resize(n, 0.0);
    const vec image = mat_vec(ds.d, pv);
    for (std::size_t k = 0; k < n; ++k)
        if (std::abs(image[k] - padded_q[k]) > slack) return false;
    return true;
}

} // namespace chanmaj
