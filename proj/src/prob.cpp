#include "chanmaj/prob.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace chanmaj {

prob_vector::prob_vector(vec entries, const tolerance& tol) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("prob_vector: empty");
    double sum = 0.0;
    for (double& v : entries_) {
        if (!std::isfinite(v)) throw std::invalid_argument("prob_vector: non-finite entry");
        if (v < 0.0) {
            if (v < -tol.abs_eps) throw std::invalid_argument("prob_vector: negative entry");
            v = 0.0;
        }
        sum += v;
    }
    const double n = static_cast<double>(entries_.size());
    if (std::abs(sum - 1.0) > n * tol.abs_eps)
        throw std::invalid_argument("prob_vector: entries sum to " + std::to_string(sum));
}

prob_vector prob_vector::uniform(std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform: n must be positive");
    return prob_vector(vec(n, 1.0 / static_cast<double>(n)));
}

prob_vector prob_vector::point_mass(std::size_t index, std::size_t n) {
    if (index >= n) throw std::invalid_argument("point_mass: index out of range");
    vec e(n, 0.0);
    e[index] = 1.0;
    return prob_vector(std::move(e));
}

prob_vector prob_vector::padded(std::size_t n) const {
    if (n < dim()) throw std::invalid_argument("padded: cannot shrink");
    vec e = entries_;
    e.resize(n, 0.0);
    return prob_vector(std::move(e));
}

std::size_t prob_vector::support_size(const tolerance& tol) const {
    std::size_t c = 0;
    for (double v : entries_)
        if (v > tol.abs_eps) ++c;
    return c;
}

prob_vector tensor(const prob_vector& a, const prob_vector& b) {
    vec out;
    out.reserve(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) out.push_back(a[i] * b[j]);
    return prob_vector(std::move(out));
}

double shannon_entropy(const prob_vector& p) {
    double h = 0.0;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        const double v = p[i];
        if (v > 0.0) h -= v * std::log2(v);
    }
    return h;
}

double renyi_entropy(const prob_vector& p, double alpha, const tolerance& tol) {
    if (std::isnan(alpha) || alpha < 0.0)
        throw std::invalid_argument("renyi_entropy: alpha must be nonnegative");
    if (alpha == 0.0)
        return std::log2(static_cast<double>(p.support_size(tol)));
    if (alpha == 1.0) return shannon_entropy(p);
    if (std::isinf(alpha)) {
        double mx = 0.0;
        for (std::size_t i = 0; i < p.dim(); ++i) mx = std::max(mx, p[i]);
        return -std::log2(mx) + 0.0; // avoid -0.0
    }
    double s = 0.0;
    for (std::size_t i = 0; i < p.dim(); ++i)
        if (p[i] > 0.0) s += std::pow(p[i], alpha);
    return std::log2(s) / (1.0 - alpha) + 0.0;
}

prob_vector sample_random(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("sample_random: n must be positive");
    if (n == 1) return prob_vector(vec{1.0});
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    vec cuts(n - 1);
    for (double& c : cuts) c = unit(rng);
    std::sort(cuts.begin(), cuts.end());
    vec gaps(n);
    double prev = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        gaps[i] = cuts[i] - prev;
        prev = cuts[i];
    }
    gaps[n - 1] = 1.0 - prev;
    return prob_vector(std::move(gaps));
}

} // namespace chanmaj
