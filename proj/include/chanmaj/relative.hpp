#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "chanmaj/lp.hpp"
#include "chanmaj/prob.hpp"

namespace chanmaj {

// Pair (p, q) of equal dimension (constructor zero-pads the shorter vector).
struct dichotomy_pair {
    prob_vector p;
    prob_vector q;

    dichotomy_pair(prob_vector p_, prob_vector q_);
    std::size_t dim() const { return p.dim(); }
};

// Standard form: joint-zero indices dropped, entries sorted by ratio p/q
// nonincreasing (infinite ratios first, ties by original index).
struct std_pair {
    dichotomy_pair pair;
    vec ratios; // nonincreasing, kInf allowed
};

struct lorenz_point {
    double a = 0.0;
    double b = 0.0;
};

// Lower boundary of the testing region: piecewise-linear through the
// cumulative-sum vertices of the standard form, starting at (0,0).
struct lorenz_curve {
    std::vector<lorenz_point> vertices;

    // Lower-envelope value at abscissa a (vertical runs give the smallest b).
    double value_at(double a) const;
};

std_pair standardize_pair(const dichotomy_pair& pair, const tolerance& tol = {});

// When simplify, interior vertices with a repeated ratio are merged
// pairwise left-to-right; the curve is unchanged as a point set.
lorenz_curve lower_lorenz(const std_pair& sp, bool simplify = false, const tolerance& tol = {});

struct lorenz_violation {
    double a = 0.0;      // abscissa where containment fails
    double lhs_b = 0.0;  // value of the claimed-larger pair's curve
    double rhs_b = 0.0;  // value of the claimed-smaller pair's curve
};

struct relative_decision {
    bool holds = false;
    // On true: stochastic matrix E (rows = y-dim) with E x.p = y.p, E x.q = y.q.
    std::optional<mat> transport;
    std::optional<lorenz_violation> violation;
};

// Lower-Lorenz containment test; certificate via LP feasibility on true.
relative_decision relatively_majorizes(const dichotomy_pair& x, const dichotomy_pair& y,
                                       const tolerance& tol = {});

// Optimal single-shot type-II error at type-I bound eps:
// min t.q s.t. t.p >= 1 - eps, 0 <= t <= 1. Coincides with the lower Lorenz
// curve at a = 1 - eps.
double beta_star(const dichotomy_pair& pair, double eps, const tolerance& tol = {});

// Same value read off the curve; exposed for cross-checks.
double beta_star_from_curve(const dichotomy_pair& pair, double eps, const tolerance& tol = {});

// Scalar convex function handle with f(1) = 0 plus optional analytic limits:
// limit_at_zero = lim_{r->0+} f(r), slope_at_infinity = lim_{s->0+} s f(1/s).
// Missing limits are approximated by evaluating near the boundary.
struct scalar_divergence {
    std::function<double(double)> f;
    std::optional<double> limit_at_zero;
    std::optional<double> slope_at_infinity;
};

scalar_divergence kl_divergence_fn();
scalar_divergence chi_square_fn();

double f_divergence(const prob_vector& p, const prob_vector& q, const scalar_divergence& fn,
                    const tolerance& tol = {});

double kl_divergence(const prob_vector& p, const prob_vector& q);

// Renyi relative entropy D_alpha in bits with the support-condition case
// split; +inf where the definition assigns it.
double renyi_relative(const prob_vector& p, const prob_vector& q, double alpha,
                      const tolerance& tol = {});

// True iff D_max(y) <= D_min(x); sufficient for relatively_majorizes(x, y).
bool dmax_dmin_sufficient(const dichotomy_pair& x, const dichotomy_pair& y,
                          const tolerance& tol = {});

} // namespace chanmaj
