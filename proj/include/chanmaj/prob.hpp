#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "chanmaj/kyfan.hpp"
#include "chanmaj/tolerance.hpp"

namespace chanmaj {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Finite probability distribution. Construction clamps entries in
// (-abs_eps, 0) to zero and rejects anything more negative; the total mass
// must be 1 within n*abs_eps.
class prob_vector {
  public:
    explicit prob_vector(vec entries, const tolerance& tol = {});

    static prob_vector uniform(std::size_t n);
    static prob_vector point_mass(std::size_t index, std::size_t n);

    std::size_t dim() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    const vec& entries() const { return entries_; }

    vec sorted() const { return sorted_desc(entries_); }
    ky_fan_profile profile() const { return ky_fan(entries_); }

    // Zero-padded copy (dim must not shrink).
    prob_vector padded(std::size_t n) const;

    std::size_t support_size(const tolerance& tol = {}) const;

    bool operator==(const prob_vector&) const = default;

  private:
    vec entries_;
};

prob_vector tensor(const prob_vector& a, const prob_vector& b);

double shannon_entropy(const prob_vector& p);

// Renyi entropy H_alpha in bits; alpha in [0, inf]. The alpha = 0, 1, inf
// cases use their limit formulas.
double renyi_entropy(const prob_vector& p, double alpha, const tolerance& tol = {});

// Uniform (Dirichlet(1,...,1)) sample from the simplex via sorted-uniform
// gaps; deterministic per seed.
prob_vector sample_random(std::size_t n, std::uint64_t seed);

} // namespace chanmaj
