#pragma once

#include <vector>

#include "chanmaj/channel.hpp"
#include "chanmaj/prob.hpp"

namespace chanmaj {

// Evaluator of a classical entropy on probability vectors. All supported
// kinds are Renyi entropies, hence Schur-concave, additive and quasiconcave.
struct entropy_spec {
    enum class kind { shannon, min_entropy, max_entropy, renyi };
    kind id = kind::shannon;
    double alpha = 1.0; // used by kind::renyi

    static entropy_spec shannon() { return {kind::shannon, 1.0}; }
    static entropy_spec min_entropy() { return {kind::min_entropy, kInf}; }
    static entropy_spec max_entropy() { return {kind::max_entropy, 0.0}; }
    static entropy_spec renyi(double alpha) { return {kind::renyi, alpha}; }

    double operator()(const prob_vector& p, const tolerance& tol = {}) const;
};

// Greatest lower bound of a finite vector set under majorization: differences
// of the pointwise-minimum Ky Fan profiles. The result is checked to be a
// nonincreasing probability vector.
prob_vector optimal_lower_bound(const std::vector<prob_vector>& a, const tolerance& tol = {});

// Least upper bound: least concave majorant of the pointwise-maximum Ky Fan
// profile, then differences.
prob_vector optimal_upper_bound(const std::vector<prob_vector>& a, const tolerance& tol = {});

// Maximal extension of a quasiconcave entropy to channels: min over columns.
double channel_entropy_max_ext(const channel& n, const entropy_spec& h, const tolerance& tol = {});

// Minimal extension of Shannon entropy at one copy: the Shannon entropy of
// the optimal upper bound of the channel image. Always a lower bound for the
// maximal extension; the gap closes under regularization.
double channel_entropy_min_ext_shannon(const channel& n, const tolerance& tol = {});

// (1/k) times the one-copy minimal extension of the k-fold tensor power,
// with input strings grouped by type class. Total output size n^k is capped.
double regularized_min_ext_estimate(const channel& n, unsigned k, const tolerance& tol = {},
                                    std::size_t dim_cap = 1000000);

// Estimates for k = 1..k_max; nondecreasing by superadditivity, which is
// asserted.
vec regularized_min_ext_trend(const channel& n, unsigned k_max, const tolerance& tol = {},
                              std::size_t dim_cap = 1000000);

struct typical_majorizer_result {
    prob_vector r;
    bool checked = false; // tensor power was materialized and compared
    bool valid = false;   // r majorizes p^(tensor k)
};

// The flat typicality vector (delta, 2^{-k(H-eps)} repeated c_k times, s_k).
// Dominance over p^(tensor k) is verified directly whenever n^k fits the cap.
typical_majorizer_result typical_majorizer(const prob_vector& p, double eps, double delta,
                                           unsigned k, const tolerance& tol = {},
                                           std::size_t dim_cap = 1000000);

// log2(n) minus the largest KL divergence from any output law to uniform;
// coincides with the Shannon maximal extension, asserted.
double kl_randomizing_entropy(const channel& n, const tolerance& tol = {});

// Shannon entropy of the flattened uniform-input joint minus log2(m). Not a
// channel entropy: it separates equivalent channels.
double choi_entropy(const channel& n);

// Explicit upper-bound vectors of the channel image with extremal min-/max-
// entropy: a flat top of the largest transition entry, and the smallest
// support compatible with the image.
prob_vector flat_top_upper_bound(const channel& n, const tolerance& tol = {});
prob_vector support_matching_upper_bound(const channel& n, const tolerance& tol = {});

} // namespace chanmaj
