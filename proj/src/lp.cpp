#include "chanmaj/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace chanmaj {

double dot(const vec& a, const vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

vec mat_vec(const mat& a, const vec& x) {
    vec out(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = dot(a[i], x);
    return out;
}

vec vec_mat(const vec& y, const mat& a) {
    if (a.empty()) return {};
    vec out(a.front().size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (y[i] == 0.0) continue;
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += y[i] * a[i][j];
    }
    return out;
}

namespace {

constexpr double kPivEps = 1e-11;

// Dense simplex tableau over the equality form  A_eq x = b, x >= 0, b >= 0.
// Artificial variables start as the basis; Bland's rule everywhere, so pivot
// sequences are deterministic and cycling-free.
struct simplex_tableau {
    std::size_t nrows = 0;
    std::size_t nvars = 0; // structural + slack columns
    mat t;                 // nrows x (nvars + nrows + 1); artificials then rhs
    std::vector<std::size_t> basis;
    std::vector<bool> allowed; // columns eligible to enter

    std::size_t art(std::size_t i) const { return nvars + i; }
    std::size_t rhs() const { return nvars + nrows; }

    void pivot(std::size_t pr, std::size_t pc) {
        const double pe = t[pr][pc];
        for (double& v : t[pr]) v /= pe;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == pr) continue;
            const double f = t[i][pc];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= rhs(); ++j) t[i][j] -= f * t[pr][j];
        }
        basis[pr] = pc;
    }

    // Minimize obj over the current tableau. Returns false when unbounded.
    // obj is indexed over all columns (artificials included, rhs excluded).
    bool run(vec& obj, double& value, const vec& cost) {
        // obj holds reduced costs; value the current (negated) objective.
        for (;;) {
            std::size_t enter = rhs();
            for (std::size_t j = 0; j < rhs(); ++j) {
                if (allowed[j] && obj[j] < -kPivEps) {
                    enter = j;
                    break; // Bland: first negative reduced cost
                }
            }
            if (enter == rhs()) return true;

            std::size_t leave = nrows;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < nrows; ++i) {
                if (t[i][enter] > kPivEps) {
                    const double ratio = t[i][rhs()] / t[i][enter];
                    if (ratio < best - kPivEps ||
                        (ratio < best + kPivEps && (leave == nrows || basis[i] < basis[leave]))) {
                        best = ratio;
                        leave = i;
                    }
                }
            }
            if (leave == nrows) return false;

            pivot(leave, enter);
            // Refresh reduced costs from scratch for numerical hygiene; the
            // problems handled here are small enough that O(mn) per pivot is
            // irrelevant.
            recompute_obj(obj, value, cost);
        }
    }

    void recompute_obj(vec& obj, double& value, const vec& cost) {
        // y = c_B B^{-1} read off through the artificial columns is not needed
        // here; reduced costs follow from eliminating basic columns.
        obj.assign(rhs(), 0.0);
        for (std::size_t j = 0; j < rhs(); ++j) obj[j] = j < cost.size() ? cost[j] : 0.0;
        value = 0.0;
        for (std::size_t i = 0; i < nrows; ++i) {
            const double cb = basis[i] < cost.size() ? cost[basis[i]] : 0.0;
            if (cb == 0.0) continue;
            for (std::size_t j = 0; j < rhs(); ++j) obj[j] -= cb * t[i][j];
            value += cb * t[i][rhs()];
        }
    }

    // Simplex multipliers y = c_B B^{-1}, via the artificial columns.
    vec multipliers(const vec& cost) const {
        vec y(nrows, 0.0);
        for (std::size_t i = 0; i < nrows; ++i) {
            double acc = 0.0;
            for (std::size_t r = 0; r < nrows; ++r) {
                const double cb = basis[r] < cost.size() ? cost[basis[r]] : 0.0;
                if (cb != 0.0) acc += cb * t[r][art(i)];
            }
            y[i] = acc;
        }
        return y;
    }
};

struct canonical_form {
    simplex_tableau tab;
    vec row_sign;                     // +1 / -1 applied to make b >= 0
    std::vector<std::size_t> row_map; // tableau row -> original row
    std::vector<bool> trivially_infeasible_row;
    std::size_t n_struct = 0;
    bool trivially_infeasible = false;
    std::size_t bad_row = 0;
};

canonical_form build(const feasibility_problem& prob, const tolerance& tol) {
    const std::size_t m = prob.rows();
    const std::size_t n = prob.cols();
    if (prob.b.size() != m) throw std::invalid_argument("lp: b dimension mismatch");
    for (const auto& row : prob.a) {
        if (row.size() != n) throw std::invalid_argument("lp: ragged constraint matrix");
        for (double v : row)
            if (!std::isfinite(v)) throw std::invalid_argument("lp: non-finite coefficient");
    }

    canonical_form cf;
    cf.n_struct = n;
    const bool has_slack = prob.sense != constraint_sense::eq;

    // Degenerate all-zero rows are resolved directly instead of entering the
    // tableau.
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < m; ++i) {
        bool all_zero = true;
        for (double v : prob.a[i])
            if (std::abs(v) > 0.0) { all_zero = false; break; }
        if (!all_zero) {
            live.push_back(i);
            continue;
        }
        const double bi = prob.b[i];
        const bool ok = prob.sense == constraint_sense::ge   ? tol.leq(bi, 0.0)
                        : prob.sense == constraint_sense::le ? tol.geq(bi, 0.0)
                                                             : tol.is_zero(bi);
        if (!ok) {
            cf.trivially_infeasible = true;
            cf.bad_row = i;
            return cf;
        }
    }

    const std::size_t mm = live.size();
    const std::size_t nslack = has_slack ? mm : 0;
    simplex_tableau& tab = cf.tab;
    tab.nrows = mm;
    tab.nvars = n + nslack;
    tab.t.assign(mm, vec(tab.nvars + mm + 1, 0.0));
    tab.basis.resize(mm);
    tab.allowed.assign(tab.nvars + mm, true);
    cf.row_sign.assign(mm, 1.0);
    cf.row_map = live;

    for (std::size_t r = 0; r < mm; ++r) {
        const std::size_t i = live[r];
        const double sgn = prob.b[i] < 0.0 ? -1.0 : 1.0;
        cf.row_sign[r] = sgn;
        for (std::size_t j = 0; j < n; ++j) tab.t[r][j] = sgn * prob.a[i][j];
        if (has_slack) {
            const double s = prob.sense == constraint_sense::ge ? -1.0 : 1.0;
            tab.t[r][n + r] = sgn * s;
        }
        tab.t[r][tab.art(r)] = 1.0;
        tab.t[r][tab.rhs()] = sgn * prob.b[i];
        tab.basis[r] = tab.art(r);
    }
    return cf;
}

// Phase-I. Returns true when a basic feasible solution was found; otherwise
// fills y with the (canonical-row) Farkas multipliers.
bool phase_one(canonical_form& cf, vec& y_can, const tolerance& tol) {
    simplex_tableau& tab = cf.tab;
    vec cost(tab.nvars + tab.nrows, 0.0);
    for (std::size_t i = 0; i < tab.nrows; ++i) cost[tab.art(i)] = 1.0;

    vec obj;
    double value = 0.0;
    tab.recompute_obj(obj, value, cost);
    if (!tab.run(obj, value, cost))
        throw std::logic_error("lp: phase one unbounded"); // cannot happen, objective >= 0

    double w = 0.0;
    for (std::size_t i = 0; i < tab.nrows; ++i)
        if (tab.basis[i] >= tab.nvars) w += tab.t[i][tab.rhs()];

    if (w > 10.0 * tol.abs_eps) {
        y_can = tab.multipliers(cost);
        return false;
    }

    // Drive any residual zero-valued artificials out of the basis.
    for (std::size_t i = 0; i < tab.nrows; ++i) {
        if (tab.basis[i] < tab.nvars) continue;
        std::size_t pc = tab.nvars;
        for (std::size_t j = 0; j < tab.nvars; ++j) {
            if (std::abs(tab.t[i][j]) > kPivEps) { pc = j; break; }
        }
        if (pc < tab.nvars) tab.pivot(i, pc);
        // else: redundant row; the artificial stays basic at value zero,
        // which is harmless as long as it never re-enters.
    }
    for (std::size_t i = 0; i < tab.nrows; ++i) tab.allowed[tab.art(i)] = false;
    return true;
}

vec extract_x(const canonical_form& cf) {
    vec x(cf.n_struct, 0.0);
    const simplex_tableau& tab = cf.tab;
    for (std::size_t i = 0; i < tab.nrows; ++i)
        if (tab.basis[i] < cf.n_struct) x[tab.basis[i]] = tab.t[i][tab.rhs()];
    for (double& v : x)
        if (v < 0.0 && v > -kPivEps) v = 0.0;
    return x;
}

// Map canonical-row multipliers back to the original rows and sign convention
// documented in lp.hpp.
vec map_farkas(const canonical_form& cf, const vec& y_can, const feasibility_problem& prob) {
    vec y(prob.rows(), 0.0);
    for (std::size_t r = 0; r < cf.tab.nrows; ++r)
        y[cf.row_map[r]] = cf.row_sign[r] * y_can[r];
    if (prob.sense != constraint_sense::ge)
        for (double& v : y) v = -v;
    for (double& v : y)
        if (std::abs(v) < kPivEps) v = 0.0;
    return y;
}

vec trivial_farkas(const feasibility_problem& prob, std::size_t bad_row) {
    vec y(prob.rows(), 0.0);
    y[bad_row] = 1.0;
    return y;
}

} // namespace

lp_result solve_feasibility(const feasibility_problem& prob, const tolerance& tol) {
    lp_result res;
    if (prob.rows() == 0 || prob.cols() == 0) {
        // Only the trivial constraints 0 {sense} b remain.
        canonical_form cf = build(prob, tol);
        if (cf.trivially_infeasible) {
            res.feasible = false;
            res.farkas = trivial_farkas(prob, cf.bad_row);
            return res;
        }
        res.feasible = true;
        res.x.assign(prob.cols(), 0.0);
        return res;
    }

    canonical_form cf = build(prob, tol);
    if (cf.trivially_infeasible) {
        res.feasible = false;
        res.farkas = trivial_farkas(prob, cf.bad_row);
        return res;
    }
    vec y_can;
    if (!phase_one(cf, y_can, tol)) {
        res.feasible = false;
        res.farkas = map_farkas(cf, y_can, prob);
        if (!check_farkas_certificate(prob, res.farkas, tol))
            throw std::logic_error("lp: produced Farkas certificate failed verification");
        return res;
    }
    res.feasible = true;
    res.x = extract_x(cf);
    if (!check_feasible_point(prob, res.x, tol))
        throw std::logic_error("lp: produced point failed feasibility verification");
    return res;
}

lp_min_result solve_lp_min(const vec& c, const feasibility_problem& prob, const tolerance& tol) {
    lp_min_result res;
    if (c.size() != prob.cols()) throw std::invalid_argument("solve_lp_min: objective dimension");

    canonical_form cf = build(prob, tol);
    if (cf.trivially_infeasible) {
        res.st = lp_min_result::status::infeasible;
        res.farkas = trivial_farkas(prob, cf.bad_row);
        return res;
    }
    vec y_can;
    if (!phase_one(cf, y_can, tol)) {
        res.st = lp_min_result::status::infeasible;
        res.farkas = map_farkas(cf, y_can, prob);
        return res;
    }

    simplex_tableau& tab = cf.tab;
    vec cost(tab.nvars + tab.nrows, 0.0);
    for (std::size_t j = 0; j < cf.n_struct; ++j) cost[j] = c[j];
    vec obj;
    double value = 0.0;
    tab.recompute_obj(obj, value, cost);
    if (!tab.run(obj, value, cost)) {
        res.st = lp_min_result::status::unbounded;
        return res;
    }

    res.st = lp_min_result::status::optimal;
    res.x = extract_x(cf);
    res.value = dot(c, res.x);

    const vec y_now = tab.multipliers(cost);
    res.dual.assign(prob.rows(), 0.0);
    for (std::size_t r = 0; r < tab.nrows; ++r)
        res.dual[cf.row_map[r]] = cf.row_sign[r] * y_now[r];

    const double dual_value = dot(res.dual, prob.b);
    const double scale = std::max({1.0, std::abs(res.value), std::abs(dual_value)});
    if (std::abs(dual_value - res.value) > 1e-6 * scale)
        throw std::logic_error("lp: strong duality violated at optimum");
    return res;
}

bool check_feasible_point(const feasibility_problem& prob, const vec& x, const tolerance& tol) {
    if (x.size() != prob.cols()) return false;
    const double slack = 10.0 * tol.abs_eps;
    for (double v : x)
        if (v < -slack) return false;
    const vec ax = mat_vec(prob.a, x);
    for (std::size_t i = 0; i < prob.rows(); ++i) {
        const double lhs = ax[i];
        const double rhs = prob.b[i];
        const double m = slack + tol.rel_eps * std::max(std::abs(lhs), std::abs(rhs));
        switch (prob.sense) {
            case constraint_sense::ge:
                if (lhs < rhs - m) return false;
                break;
            case constraint_sense::le:
                if (lhs > rhs + m) return false;
                break;
            case constraint_sense::eq:
                if (std::abs(lhs - rhs) > m) return false;
                break;
        }
    }
    return true;
}

bool check_farkas_certificate(const feasibility_problem& prob, const vec& y, const tolerance& tol) {
    if (y.size() != prob.rows()) return false;
    const double slack = 10.0 * tol.abs_eps;
    double scale = 0.0;
    for (double v : y) scale = std::max(scale, std::abs(v));
    if (scale <= 0.0) return false;
    const double m = slack * std::max(1.0, scale);

    if (prob.sense != constraint_sense::eq) {
        for (double v : y)
            if (v < -m) return false;
    }
    const vec yta = vec_mat(y, prob.a);
    const double ytb = dot(y, prob.b);
    if (prob.sense == constraint_sense::ge) {
        for (double v : yta)
            if (v > m) return false;
        return ytb > m;
    }
    // le and eq share the y^T A >= 0, y^T b < 0 convention.
    for (double v : yta)
        if (v < -m) return false;
    return ytb < -m;
}

} // namespace chanmaj
