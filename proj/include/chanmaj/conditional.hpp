#pragma once

#include <optional>
#include <vector>

#include "chanmaj/lp.hpp"
#include "chanmaj/prob.hpp"

namespace chanmaj {

// Joint distribution on X x Y with the comparison conditioned on access to Y.
// Stored by Y-columns: cols[y] is the unnormalized conditional on X.
class joint_dist {
  public:
    // weights are row-major n x m (n = |X| rows, m = |Y| columns).
    joint_dist(std::size_t n, std::size_t m, const vec& weights_row_major,
               const tolerance& tol = {});
    static joint_dist from_columns(std::vector<vec> cols, const tolerance& tol = {});

    std::size_t x_dim() const { return n_; }
    std::size_t y_dim() const { return cols_.size(); }
    const vec& column(std::size_t y) const { return cols_[y]; }
    double y_mass(std::size_t y) const { return mass_[y]; }
    bool zero_mass_column(std::size_t y) const { return mass_[y] <= 0.0; }

    // Normalized conditional; zero-mass columns carry the uniform conditional.
    prob_vector conditional(std::size_t y) const;

    joint_dist padded_x(std::size_t n) const;
    vec weights_row_major() const;

  private:
    joint_dist() = default;
    std::size_t n_ = 0;
    std::vector<vec> cols_;
    vec mass_;
};

joint_dist tensor(const joint_dist& a, const joint_dist& b);

struct cond_decision {
    bool holds = false;
    // On true: column-stochastic R (m' x m), column y holds the mixture
    // weights sent to each target y'.
    std::optional<mat> mixing;
    // On false: refuting S (n x m' columns, nonincreasing, in Stoch_<=)
    // violating the s_test inequality.
    std::optional<mat> refuter;
};

// P conditionally majorizes Q on X: some stochastic R mixes P's sorted
// unnormalized conditionals over Q's (one stacked LP).
cond_decision conditionally_majorizes(const joint_dist& p, const joint_dist& q,
                                      const tolerance& tol = {});

// Sub-stochastic game matrix: column w is the distribution of the number of
// guesses after action w; deficient mass means losing outright.
struct cond_game {
    mat t; // n rows, ell columns

    std::size_t guesses_dim() const { return t.size(); }
    std::size_t actions() const { return t.empty() ? 0 : t.front().size(); }
};

cond_game validate_cond_game(mat t, const tolerance& tol = {});

// Winning chance of the game on P: sum_y max_w s_w . p_y_sorted with
// s_{xw} = sum_{k >= x} t_{k|w}.
double cond_game_payoff(const joint_dist& p, const cond_game& game, const tolerance& tol = {});

// sum_y p_y H(X | Y = y) in bits.
double conditional_entropy(const joint_dist& p);

// Evaluates the single-witness inequality
//   sum_y max_w s_w . p_y_sorted >= sum_w s_w . q_w_sorted
// for a given S with nonincreasing columns in [0,1]^n.
bool s_test(const joint_dist& p, const joint_dist& q, const mat& s, const tolerance& tol = {});

} // namespace chanmaj
