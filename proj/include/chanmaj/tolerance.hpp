#pragma once

#include <algorithm>
#include <cmath>

namespace chanmaj {

// Dual absolute/relative tolerance. Every approximate comparison in the
// library routes through this one comparator so that decisions stay
// consistent across modules.
struct tolerance {
    double abs_eps = 1e-9;
    double rel_eps = 1e-9;

    double margin(double scale) const {
        return std::max(abs_eps, rel_eps * std::abs(scale));
    }
    bool leq(double a, double b) const {
        return a <= b + margin(std::max(std::abs(a), std::abs(b)));
    }
    bool geq(double a, double b) const { return leq(b, a); }
    bool eq(double a, double b) const { return leq(a, b) && leq(b, a); }
    bool lt(double a, double b) const { return !geq(a, b); }
    bool gt(double a, double b) const { return !leq(a, b); }
    bool is_zero(double a) const { return std::abs(a) <= abs_eps; }
};

} // namespace chanmaj
