#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chanmaj/conditional.hpp"
#include "chanmaj/lp.hpp"
#include "chanmaj/prob.hpp"

namespace chanmaj {

// Classical channel as a column-stochastic transition matrix; column x is the
// output law on input symbol x.
class channel {
  public:
    explicit channel(std::vector<prob_vector> columns, std::string name = "");

    std::size_t input_dim() const { return columns_.size(); }
    std::size_t output_dim() const { return columns_.front().dim(); }
    const prob_vector& column(std::size_t x) const { return columns_[x]; }
    const std::vector<prob_vector>& columns() const { return columns_; }
    const std::string& name() const { return name_; }

    channel padded_output(std::size_t n) const;
    double max_entry() const;
    std::size_t min_support(const tolerance& tol = {}) const;

  private:
    std::vector<prob_vector> columns_;
    std::string name_;
};

channel tensor(const channel& a, const channel& b);
channel sample_random_channel(std::size_t m, std::size_t n, std::uint64_t seed);

// Canonical representative of the channel's equivalence class: columns sorted
// nonincreasing, columns majorized by convex sums of the others removed
// (lowest index first, re-scan after each removal), then columns arranged in
// lexicographic descending order.
channel standard_form(const channel& n, const tolerance& tol = {});

bool is_standard_form(const channel& n, const tolerance& tol = {});

struct channel_decision {
    bool holds = false;
    // On true: weights[w] lies on the simplex over N's inputs and its sorted
    // mixture majorizes M's column w.
    std::vector<vec> weights;
    // On false: nonincreasing probability vector s with P_N(s) < P_M(s),
    // together with the first target column it refutes.
    std::optional<vec> refuting_s;
    std::size_t failing_column = 0;
};

// N majorizes M: every output law of M is majorized by a convex combination
// of N's sorted columns (one LP per target column). Output dimensions are
// matched by zero padding.
channel_decision channel_majorizes(const channel& n, const channel& m, const tolerance& tol = {},
                                   unsigned jobs = 1);

// Diagnostic: existence of a convex combination of the raw (unsorted) columns
// majorizing every target column. Exact via one LP per candidate sort order;
// output dimension is capped accordingly.
bool unsorted_mixture_covers(const channel& n, const channel& m, const tolerance& tol = {});

// max_x s . p_x_sorted for nonincreasing nonnegative s.
double predictability(const channel& n, const vec& s, const tolerance& tol = {});

// A t-game: joint distribution over (action hint w, number of guesses k).
struct game_spec {
    std::size_t actions = 0;  // ell
    std::size_t guesses = 0;  // n
    prob_vector joint;        // dim ell * n, laid out [w * n + k]

    game_spec(std::size_t ell, std::size_t n_, prob_vector t);
    double weight(std::size_t w, std::size_t k) const { return joint[w * guesses + k]; }
};

// Winning chance of the t-game played on channel n. Evaluated both by the
// defining formula and through the predictability identity; the two paths are
// asserted equal.
double t_game_payoff(const channel& n, const game_spec& g, const tolerance& tol = {});

// Exact decision for two-input channels in standard form via the Ky Fan gap
// intervals (the mu/nu window test).
bool two_input_fast_path(const channel& n, const channel& m, const tolerance& tol = {});

// Channel-level comparison of the replacement channels for p and q; agrees
// with plain vector majorization.
bool replacement_reduction(const prob_vector& p, const prob_vector& q, const tolerance& tol = {});

// Equality of standard forms (after padding outputs to a common dimension).
bool channel_equivalent(const channel& n, const channel& m, const tolerance& tol = {});

// Consistency route through conditional majorization: builds input
// distributions and joint distributions per the witness and delegates to
// conditionally_majorizes. Requires n in standard form.
bool channel_maj_via_conditional(const channel& n, const channel& m, const tolerance& tol = {});

} // namespace chanmaj
