#include "chanmaj/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "chanmaj/majorize.hpp"
#include "chanmaj/relative.hpp"

namespace chanmaj {

double entropy_spec::operator()(const prob_vector& p, const tolerance& tol) const {
    switch (id) {
        case kind::shannon: return shannon_entropy(p);
        case kind::min_entropy: return renyi_entropy(p, kInf, tol);
        case kind::max_entropy: return renyi_entropy(p, 0.0, tol);
        case kind::renyi: return renyi_entropy(p, alpha, tol);
    }
    throw std::logic_error("entropy_spec: unknown kind");
}

namespace {

std::vector<vec> padded_profiles(const std::vector<prob_vector>& a) {
    if (a.empty()) throw std::invalid_argument("optimal bounds: empty set");
    std::size_t n = 0;
    for (const auto& p : a) n = std::max(n, p.dim());
    std::vector<vec> profs;
    profs.reserve(a.size());
    for (const auto& p : a) profs.push_back(prefix_sums(p.padded(n).sorted()));
    return profs;
}

} // namespace

prob_vector optimal_lower_bound(const std::vector<prob_vector>& a, const tolerance& tol) {
    const std::vector<vec> profs = padded_profiles(a);
    const std::size_t n = profs.front().size();
    vec mn = profs.front();
    for (const auto& pr : profs)
        for (std::size_t k = 0; k < n; ++k) mn[k] = std::min(mn[k], pr[k]);
    vec d = diffs_to_vector(mn);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (d[k + 1] > d[k] + n * tol.abs_eps)
            throw std::logic_error("optimal_lower_bound: pointwise-min profile not concave");
    }
    return prob_vector(std::move(d), tol);
}

prob_vector optimal_upper_bound(const std::vector<prob_vector>& a, const tolerance& tol) {
    const std::vector<vec> profs = padded_profiles(a);
    const std::size_t n = profs.front().size();
    vec mx = profs.front();
    for (const auto& pr : profs)
        for (std::size_t k = 0; k < n; ++k) mx[k] = std::max(mx[k], pr[k]);
    const prob_vector bound(diffs_to_vector(least_concave_majorant(mx, tol)), tol);
    for (const auto& p : a) {
        if (!majorizes(bound, p, tol))
            throw std::logic_error("optimal_upper_bound: result fails to majorize a member");
    }
    return bound;
}

double channel_entropy_max_ext(const channel& n, const entropy_spec& h, const tolerance& tol) {
    double best = kInf;
    for (const auto& c : n.columns()) best = std::min(best, h(c, tol));
    return best;
}

double channel_entropy_min_ext_shannon(const channel& n, const tolerance& tol) {
    const double value = shannon_entropy(optimal_upper_bound(n.columns(), tol));
    const double upper = channel_entropy_max_ext(n, entropy_spec::shannon(), tol);
    if (value > upper + 1e-9)
        throw std::logic_error("channel_entropy_min_ext_shannon: exceeds the maximal extension");
    return value;
}

namespace {

// Enumerate multisets of column choices (type classes); column order never
// affects a sorted profile.
void for_each_type_class(std::size_t m, unsigned k,
                         const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> pick(k, 0);
    for (;;) {
        fn(pick);
        // next multiset in nondecreasing-index order
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - 1) --i;
        if (i < 0) return;
        const std::size_t v = pick[static_cast<std::size_t>(i)] + 1;
        for (std::size_t j = static_cast<std::size_t>(i); j < k; ++j) pick[j] = v;
    }
}

} // namespace

double regularized_min_ext_estimate(const channel& n, unsigned k, const tolerance& tol,
                                    std::size_t dim_cap) {
    if (k == 0) throw std::invalid_argument("regularized_min_ext_estimate: k must be positive");
    double dim = 1.0;
    for (unsigned i = 0; i < k; ++i) dim *= static_cast<double>(n.output_dim());
    if (dim > static_cast<double>(dim_cap))
        throw std::invalid_argument("regularized_min_ext_estimate: output dimension cap exceeded");
    const std::size_t nd = static_cast<std::size_t>(dim);

    vec mx(nd, 0.0);
    for_each_type_class(n.input_dim(), k, [&](const std::vector<std::size_t>& pick) {
        vec v{1.0};
        for (std::size_t idx : pick) {
            vec next;
            next.reserve(v.size() * n.output_dim());
            const auto& col = n.column(idx);
            for (double a : v)
                for (std::size_t i = 0; i < col.dim(); ++i) next.push_back(a * col[i]);
            v = std::move(next);
        }
        const vec prof = prefix_sums(sorted_desc(v));
        for (std::size_t i = 0; i < nd; ++i) mx[i] = std::max(mx[i], prof[i]);
    });

    const prob_vector bound(diffs_to_vector(least_concave_majorant(mx, tol)), tolerance{1e-7, 1e-7});
    return shannon_entropy(bound) / static_cast<double>(k);
}

vec regularized_min_ext_trend(const channel& n, unsigned k_max, const tolerance& tol,
                              std::size_t dim_cap) {
    vec out;
    for (unsigned k = 1; k <= k_max; ++k) {
        out.push_back(regularized_min_ext_estimate(n, k, tol, dim_cap));
        if (k > 1 && out[k - 1] < out[k - 2] - 1e-9)
            throw std::logic_error("regularized_min_ext_trend: estimate decreased with k");
    }
    return out;
}

typical_majorizer_result typical_majorizer(const prob_vector& p, double eps, double delta,
                                           unsigned k, const tolerance& tol, std::size_t dim_cap) {
    if (!(eps > 0.0 && eps < 1.0) || !(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("typical_majorizer: eps and delta must lie in (0,1)");
    const double h = shannon_entropy(p);
    const double rate = static_cast<double>(k) * (h - eps);
    if (rate > 40.0) throw std::overflow_error("typical_majorizer: 2^(k(H-eps)) overflows");
    const double cell = std::pow(2.0, -rate);
    const double c_real = std::floor((1.0 - delta) / cell);
    if (c_real + 2.0 > 8.0 * static_cast<double>(dim_cap))
        throw std::overflow_error("typical_majorizer: construction too large to materialize");
    const auto c_k = static_cast<std::size_t>(c_real);
    const double s_k = std::max(0.0, (1.0 - delta) - static_cast<double>(c_k) * cell);

    vec entries;
    entries.reserve(c_k + 2);
    entries.push_back(delta);
    for (std::size_t i = 0; i < c_k; ++i) entries.push_back(cell);
    entries.push_back(s_k);
    typical_majorizer_result res{prob_vector(std::move(entries), tolerance{1e-7, 1e-7}), false, false};

    double dim = 1.0;
    for (unsigned i = 0; i < k; ++i) dim *= static_cast<double>(p.dim());
    if (dim <= static_cast<double>(dim_cap)) {
        prob_vector power = p;
        for (unsigned i = 1; i < k; ++i) power = tensor(power, p);
        res.checked = true;
        res.valid = majorizes(res.r, power, tol);
    }
    return res;
}

double kl_randomizing_entropy(const channel& n, const tolerance& tol) {
    const auto u = prob_vector::uniform(n.output_dim());
    double worst = 0.0;
    for (const auto& c : n.columns()) worst = std::max(worst, kl_divergence(c, u));
    const double value = std::log2(static_cast<double>(n.output_dim())) - worst;
    const double direct = channel_entropy_max_ext(n, entropy_spec::shannon(), tol);
    if (std::abs(value - direct) > 1e-9)
        throw std::logic_error("kl_randomizing_entropy: divergence route disagrees with min output entropy");
    return value;
}

double choi_entropy(const channel& n) {
    vec flat;
    flat.reserve(n.input_dim() * n.output_dim());
    const double m = static_cast<double>(n.input_dim());
    for (const auto& c : n.columns())
        for (std::size_t i = 0; i < c.dim(); ++i) flat.push_back(c[i] / m);
    return shannon_entropy(prob_vector(std::move(flat))) - std::log2(m);
}

prob_vector flat_top_upper_bound(const channel& n, const tolerance& tol) {
    const double top = n.max_entry();
    if (top <= 0.0) throw std::invalid_argument("flat_top_upper_bound: zero channel");
    const auto k0 = static_cast<std::size_t>(std::floor(1.0 / top));
    vec q(k0 + 1, top);
    q[k0] = std::max(0.0, 1.0 - static_cast<double>(k0) * top);
    return prob_vector(std::move(q), tol);
}

prob_vector support_matching_upper_bound(const channel& n, const tolerance& tol) {
    const std::size_t k0 = n.min_support(tol);
    if (k0 <= 1) return prob_vector(vec{1.0});
    double q1 = 0.0;
    for (const auto& c : n.columns()) {
        const vec prof = prefix_sums(c.sorted());
        q1 = std::max(q1, prof[k0 - 2]);
    }
    vec q(k0, (1.0 - q1) / static_cast<double>(k0 - 1));
    q[0] = q1;
    return prob_vector(std::move(q), tol);
}

} // namespace chanmaj
