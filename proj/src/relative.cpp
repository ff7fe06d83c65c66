#include "chanmaj/relative.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace chanmaj {

namespace {
constexpr double kLimitProbe = 1e-12;
}

dichotomy_pair::dichotomy_pair(prob_vector p_, prob_vector q_)
    : p(p_.padded(std::max(p_.dim(), q_.dim()))), q(q_.padded(std::max(p_.dim(), q_.dim()))) {}

std_pair standardize_pair(const dichotomy_pair& pair, const tolerance& tol) {
    std::vector<std::size_t> keep;
    for (std::size_t x = 0; x < pair.dim(); ++x) {
        if (tol.is_zero(pair.p[x]) && tol.is_zero(pair.q[x])) continue;
        keep.push_back(x);
    }
    if (keep.empty()) throw std::invalid_argument("standardize_pair: pair is all zero");

    vec ratios(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) {
        const double px = pair.p[keep[k]];
        const double qx = pair.q[keep[k]];
        ratios[k] = qx > 0.0 ? px / qx : kInf;
    }
    std::vector<std::size_t> order(keep.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return ratios[a] > ratios[b]; });

    vec p_out, q_out, r_out;
    for (std::size_t k : order) {
        p_out.push_back(pair.p[keep[k]]);
        q_out.push_back(pair.q[keep[k]]);
        r_out.push_back(ratios[k]);
    }
    return std_pair{dichotomy_pair(prob_vector(std::move(p_out), tol), prob_vector(std::move(q_out), tol)),
                    std::move(r_out)};
}

lorenz_curve lower_lorenz(const std_pair& sp, bool simplify, const tolerance& tol) {
    lorenz_curve curve;
    curve.vertices.push_back({0.0, 0.0});
    double a = 0.0, b = 0.0;
    const std::size_t n = sp.pair.dim();
    for (std::size_t x = 0; x < n; ++x) {
        a += sp.pair.p[x];
        b += sp.pair.q[x];
        if (simplify && x + 1 < n) {
            const double r0 = sp.ratios[x];
            const double r1 = sp.ratios[x + 1];
            const bool same = (std::isinf(r0) || std::isinf(r1))
                                  ? std::isinf(r0) && std::isinf(r1)
                                  : tol.eq(r0, r1);
            if (same) continue; // interior vertex on a straight run
        }
        curve.vertices.push_back({a, b});
    }
    return curve;
}

double lorenz_curve::value_at(double a) const {
    a = std::clamp(a, 0.0, vertices.back().a);
    auto it = std::lower_bound(vertices.begin(), vertices.end(), a,
                               [](const lorenz_point& v, double val) { return v.a < val; });
    if (it == vertices.begin()) return it->b;
    if (it == vertices.end()) return vertices.back().b;
    if (it->a - a <= 1e-14) return it->b; // first vertex of a vertical run
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    return lo.b + (hi.b - lo.b) * (a - lo.a) / (hi.a - lo.a);
}

namespace {

// Stochastic E with E p = p', E q = q' posed as one equality-form LP.
std::optional<mat> find_transport(const dichotomy_pair& x, const dichotomy_pair& y,
                                  const tolerance& tol) {
    const std::size_t n = x.dim();
    const std::size_t ny = y.dim();
    const std::size_t nvars = n * ny;
    feasibility_problem prob;
    prob.sense = constraint_sense::eq;
    auto var = [&](std::size_t row, std::size_t col) { return row * n + col; };

    for (std::size_t i = 0; i < ny; ++i) {
        vec rp(nvars, 0.0), rq(nvars, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            rp[var(i, j)] = x.p[j];
            rq[var(i, j)] = x.q[j];
        }
        prob.a.push_back(std::move(rp));
        prob.b.push_back(y.p[i]);
        prob.a.push_back(std::move(rq));
        prob.b.push_back(y.q[i]);
    }
    for (std::size_t j = 0; j < n; ++j) {
        vec rc(nvars, 0.0);
        for (std::size_t i = 0; i < ny; ++i) rc[var(i, j)] = 1.0;
        prob.a.push_back(std::move(rc));
        prob.b.push_back(1.0);
    }

    const lp_result res = solve_feasibility(prob, tol);
    if (!res.feasible) return std::nullopt;
    mat e(ny, vec(n, 0.0));
    for (std::size_t i = 0; i < ny; ++i)
        for (std::size_t j = 0; j < n; ++j) e[i][j] = res.x[var(i, j)];
    return e;
}

} // namespace

relative_decision relatively_majorizes(const dichotomy_pair& x, const dichotomy_pair& y,
                                       const tolerance& tol) {
    const lorenz_curve cx = lower_lorenz(standardize_pair(x, tol), false, tol);
    const lorenz_curve cy = lower_lorenz(standardize_pair(y, tol), false, tol);

    relative_decision decision;
    vec abscissas;
    for (const auto& v : cx.vertices) abscissas.push_back(v.a);
    for (const auto& v : cy.vertices) abscissas.push_back(v.a);
    std::sort(abscissas.begin(), abscissas.end());

    for (double a : abscissas) {
        const double lhs = cx.value_at(a);
        const double rhs = cy.value_at(a);
        if (!tol.leq(lhs, rhs)) {
            decision.holds = false;
            decision.violation = lorenz_violation{a, lhs, rhs};
            return decision;
        }
    }
    decision.holds = true;
    decision.transport = find_transport(x, y, tol);
    if (!decision.transport)
        throw std::logic_error("relatively_majorizes: containment holds but transport LP infeasible");
    return decision;
}

double beta_star(const dichotomy_pair& pair, double eps, const tolerance& tol) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("beta_star: eps outside [0,1]");
    const std::size_t n = pair.dim();
    feasibility_problem prob;
    prob.sense = constraint_sense::ge;
    prob.a.push_back(pair.p.entries());
    prob.b.push_back(1.0 - eps);
    for (std::size_t i = 0; i < n; ++i) {
        vec row(n, 0.0);
        row[i] = -1.0;
        prob.a.push_back(std::move(row));
        prob.b.push_back(-1.0);
    }
    const lp_min_result res = solve_lp_min(pair.q.entries(), prob, tol);
    if (res.st != lp_min_result::status::optimal)
        throw std::logic_error("beta_star: bounded feasible LP did not solve");
    return res.value;
}

double beta_star_from_curve(const dichotomy_pair& pair, double eps, const tolerance& tol) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("beta_star: eps outside [0,1]");
    return lower_lorenz(standardize_pair(pair, tol), false, tol).value_at(1.0 - eps);
}

scalar_divergence kl_divergence_fn() {
    return scalar_divergence{[](double r) { return r <= 0.0 ? 0.0 : r * std::log2(r); }, 0.0, kInf};
}

scalar_divergence chi_square_fn() {
    return scalar_divergence{[](double r) { return (r - 1.0) * (r - 1.0); }, 1.0, kInf};
}

double f_divergence(const prob_vector& p, const prob_vector& q, const scalar_divergence& fn,
                    const tolerance& tol) {
    if (p.dim() != q.dim()) throw std::invalid_argument("f_divergence: dimension mismatch");
    if (std::abs(fn.f(1.0)) > tol.abs_eps)
        throw std::invalid_argument("f_divergence: f(1) must be 0");
    const double f_zero = fn.limit_at_zero ? *fn.limit_at_zero : fn.f(kLimitProbe);
    const double slope_inf =
        fn.slope_at_infinity ? *fn.slope_at_infinity : kLimitProbe * fn.f(1.0 / kLimitProbe);

    double total = 0.0;
    for (std::size_t x = 0; x < p.dim(); ++x) {
        const double px = p[x];
        const double qx = q[x];
        if (qx > 0.0) {
            total += qx * (px > 0.0 ? fn.f(px / qx) : f_zero);
        } else if (px > 0.0) {
            total += px * slope_inf;
        }
        if (std::isinf(total)) return kInf;
    }
    return total;
}

double kl_divergence(const prob_vector& p, const prob_vector& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("kl_divergence: dimension mismatch");
    double total = 0.0;
    for (std::size_t x = 0; x < p.dim(); ++x) {
        if (p[x] <= 0.0) continue;
        if (q[x] <= 0.0) return kInf;
        total += p[x] * (std::log2(p[x]) - std::log2(q[x]));
    }
    return total;
}

double renyi_relative(const prob_vector& p, const prob_vector& q, double alpha,
                      const tolerance& tol) {
    if (std::isnan(alpha) || alpha < 0.0)
        throw std::invalid_argument("renyi_relative: alpha must be nonnegative");
    if (p.dim() != q.dim()) throw std::invalid_argument("renyi_relative: dimension mismatch");
    (void)tol;

    bool abs_cont = true; // supp(p) inside supp(q)
    double overlap = 0.0;
    for (std::size_t x = 0; x < p.dim(); ++x) {
        if (p[x] > 0.0 && q[x] <= 0.0) abs_cont = false;
        overlap += p[x] * q[x];
    }
    const bool finite_branch = abs_cont || (alpha < 1.0 && overlap > 0.0);
    if (!finite_branch) return kInf;

    if (alpha == 0.0) {
        double s = 0.0;
        for (std::size_t x = 0; x < p.dim(); ++x)
            if (p[x] > 0.0) s += q[x];
        return -std::log2(s) + 0.0; // avoid -0.0
    }
    if (alpha == 1.0) return kl_divergence(p, q);
    if (std::isinf(alpha)) {
        double mx = 0.0;
        for (std::size_t x = 0; x < p.dim(); ++x)
            if (p[x] > 0.0) mx = std::max(mx, p[x] / q[x]);
        return std::log2(mx);
    }
    double s = 0.0;
    for (std::size_t x = 0; x < p.dim(); ++x)
        if (p[x] > 0.0 && q[x] > 0.0) s += std::pow(p[x], alpha) * std::pow(q[x], 1.0 - alpha);
    return std::log2(s) / (alpha - 1.0);
}

bool dmax_dmin_sufficient(const dichotomy_pair& x, const dichotomy_pair& y, const tolerance& tol) {
    const double d_min = renyi_relative(x.p, x.q, 0.0, tol);
    const double d_max = renyi_relative(y.p, y.q, kInf, tol);
    if (std::isinf(d_min)) return true; // infinity dominates everything
    if (std::isinf(d_max)) return false;
    return tol.leq(d_max, d_min);
}

} // namespace chanmaj
