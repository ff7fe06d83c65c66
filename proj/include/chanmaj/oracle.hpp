#pragma once

#include <cstdint>
#include <vector>

#include "chanmaj/channel.hpp"
#include "chanmaj/prob.hpp"

namespace chanmaj::oracle {

struct oracle_config {
    double grid_step = 1e-2;
    std::size_t max_dim = 4;
    std::size_t max_perms = 24;
};

// Exact convex-hull membership: q in Conv{permutations of p}, decided over
// all dim! permutations with a self-contained tableau (the production simplex
// is deliberately not reused here).
bool oracle_majorizes(const prob_vector& p, const prob_vector& q, const oracle_config& cfg = {});

enum class grid_verdict { yes, unknown };

// Grid search over simplex weights (step cfg.grid_step) for a sorted-column
// mixture majorizing every target column. Grid incompleteness means "no hit"
// only ever reads as unknown.
grid_verdict oracle_channel_majorizes(const channel& n, const channel& m,
                                      const oracle_config& cfg = {});

// Exact set-containment characterization on tiny instances: every column of m
// must lie in the convex hull of all permutations of n's columns (the hull is
// permutation invariant, so checking the raw columns suffices). Inputs are
// expected in standard form.
bool oracle_channel_set_containment(const channel& n, const channel& m,
                                    const oracle_config& cfg = {});

// Samples vectors q majorizing every member of a (rejection sampling plus
// constructed peak mixtures) and reports whether all of them majorize the
// candidate.
bool oracle_upper_bound_minimality(const std::vector<prob_vector>& a, const prob_vector& candidate,
                                   std::size_t samples = 1000, std::uint64_t seed = 12345,
                                   const oracle_config& cfg = {});

} // namespace chanmaj::oracle
