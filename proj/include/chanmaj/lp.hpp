#pragma once

#include <vector>

#include "chanmaj/kyfan.hpp"
#include "chanmaj/tolerance.hpp"

namespace chanmaj {

using mat = std::vector<vec>; // row-major, mat[i] is row i

enum class constraint_sense { ge, le, eq };

// A x {>=,<=,=} b with x >= 0 throughout.
struct feasibility_problem {
    mat a;
    vec b;
    constraint_sense sense = constraint_sense::ge;

    std::size_t rows() const { return a.size(); }
    std::size_t cols() const { return a.empty() ? 0 : a.front().size(); }
};

// Outcome of a pure feasibility question. On feasible, x satisfies the
// constraints within 10*abs_eps. On infeasible, farkas holds a separating
// certificate over the original rows:
//   ge:  y >= 0, y^T A <= 0 componentwise, y^T b > 0
//   le:  y >= 0, y^T A >= 0 componentwise, y^T b < 0
//   eq:  y free,  y^T A >= 0 componentwise, y^T b < 0
struct lp_result {
    bool feasible = false;
    vec x;
    vec farkas;
};

struct lp_min_result {
    enum class status { optimal, infeasible, unbounded };
    status st = status::infeasible;
    double value = 0.0;
    vec x;
    vec dual;   // row multipliers, original row order and signs
    vec farkas; // set when infeasible
};

lp_result solve_feasibility(const feasibility_problem& prob, const tolerance& tol = {});

// min c.x subject to prob's constraints and x >= 0. Strong duality is
// asserted at optimality (primal and dual objectives agree within 1e-6
// relative); violation throws.
lp_min_result solve_lp_min(const vec& c, const feasibility_problem& prob,
                           const tolerance& tol = {});

// Pure-arithmetic validation, independent of the solver path.
bool check_feasible_point(const feasibility_problem& prob, const vec& x, const tolerance& tol = {});
bool check_farkas_certificate(const feasibility_problem& prob, const vec& y,
                              const tolerance& tol = {});

double dot(const vec& a, const vec& b);
vec mat_vec(const mat& a, const vec& x);
vec vec_mat(const vec& y, const mat& a);

} // namespace chanmaj
