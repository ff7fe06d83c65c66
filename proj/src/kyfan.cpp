#include "chanmaj/kyfan.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace chanmaj {

bool ky_fan_profile::dominates(const ky_fan_profile& other, const tolerance& tol) const {
    const std::size_t n = std::max(dim(), other.dim());
    for (std::size_t k = 1; k <= n; ++k) {
        const double a = k <= dim() ? values[k - 1] : values.back();
        const double b = k <= other.dim() ? other.values[k - 1] : other.values.back();
        if (!tol.geq(a, b)) return false;
    }
    return true;
}

std::vector<std::size_t> sort_desc_indices(const vec& r) {
    std::vector<std::size_t> idx(r.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(r[a]) > std::abs(r[b]);
    });
    return idx;
}

vec sorted_desc(const vec& r) {
    vec s(r.size());
    std::transform(r.begin(), r.end(), s.begin(), [](double x) { return std::abs(x); });
    std::stable_sort(s.begin(), s.end(), std::greater<double>());
    return s;
}

ky_fan_profile ky_fan(const vec& r) {
    if (r.empty()) throw std::domain_error("ky_fan: empty vector");
    for (double x : r) {
        if (!std::isfinite(x)) throw std::domain_error("ky_fan: non-finite entry");
    }
    return ky_fan_profile{prefix_sums(sorted_desc(r))};
}

vec prefix_sums(const vec& v) {
    vec out(v.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        acc += v[i];
        out[i] = acc;
    }
    return out;
}

vec diffs_to_vector(const vec& profile) {
    vec out(profile.size());
    double prev = 0.0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        out[i] = profile[i] - prev;
        prev = profile[i];
    }
    return out;
}

vec least_concave_majorant(const vec& points, const tolerance& tol) {
    const std::size_t n = points.size();
    if (n == 0) throw std::domain_error("least_concave_majorant: empty input");
    for (std::size_t i = 1; i < n; ++i) {
        if (tol.gt(points[i - 1], points[i]))
            throw std::domain_error("least_concave_majorant: input not nondecreasing");
    }

    // Upper hull of (0,0),(1,p1),...,(n,pn). x-coordinates are the integers,
    // so the cross product test simplifies.
    std::vector<std::pair<double, double>> hull;
    hull.reserve(n + 1);
    auto cross = [](const std::pair<double, double>& o, const std::pair<double, double>& a,
                    const std::pair<double, double>& b) {
        return (a.first - o.first) * (b.second - o.second) -
               (a.second - o.second) * (b.first - o.first);
    };
    hull.emplace_back(0.0, 0.0);
    for (std::size_t k = 1; k <= n; ++k) {
        const std::pair<double, double> p{static_cast<double>(k), points[k - 1]};
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) >= 0.0)
            hull.pop_back();
        hull.push_back(p);
    }

    vec out(n);
    std::size_t seg = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        const double x = static_cast<double>(k);
        while (seg + 1 < hull.size() && hull[seg + 1].first < x) ++seg;
        if (seg + 1 == hull.size()) {
            out[k - 1] = hull.back().second;
            continue;
        }
        const auto& [x0, y0] = hull[seg];
        const auto& [x1, y1] = hull[seg + 1];
        out[k - 1] = y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    }
    return out;
}

} // namespace chanmaj
