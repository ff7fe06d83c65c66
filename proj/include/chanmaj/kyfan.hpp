#pragma once

#include <cstddef>
#include <vector>

#include "chanmaj/tolerance.hpp"

namespace chanmaj {

using vec = std::vector<double>;

// Ky Fan profile of a vector: values[k-1] is the sum of the k absolutely
// largest entries. Nondecreasing; for a probability vector it ends at 1.
struct ky_fan_profile {
    vec values;

    std::size_t dim() const { return values.size(); }
    double at(std::size_t k) const { return k == 0 ? 0.0 : values[k - 1]; }

    // Componentwise >= within tolerance; profiles of different lengths are
    // compared after implicit zero-padding of the underlying vectors, which
    // leaves the shorter profile constant at its final value.
    bool dominates(const ky_fan_profile& other, const tolerance& tol = {}) const;
};

// Indices that stably sort |r| in nonincreasing order (ties by original index).
std::vector<std::size_t> sort_desc_indices(const vec& r);

// |r| sorted nonincreasing, stable.
vec sorted_desc(const vec& r);

ky_fan_profile ky_fan(const vec& r);

// Prefix sums of v: (v0, v0+v1, ...).
vec prefix_sums(const vec& v);

// Successive differences of a profile, implicit 0 in front. Inverse of
// prefix_sums.
vec diffs_to_vector(const vec& profile);

// Pointwise-smallest concave nondecreasing curve through (0,0) dominating the
// input at every integer k. Computed as the upper hull (monotone chain) on the
// integer grid {0,...,n}. Input must be nondecreasing.
vec least_concave_majorant(const vec& points, const tolerance& tol = {});

} // namespace chanmaj
