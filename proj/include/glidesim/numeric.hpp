#pragma once

#include <cmath>
#include <stdexcept>

namespace glidesim::numeric {

/// Bisection on a bracket [lo, hi] with f(lo) and f(hi) of opposite sign.
/// Stops when the bracket is narrower than rel_tol * |midpoint| (or abs_tol).
template <typename F>
double bisect(F&& f, double lo, double hi, double rel_tol, double abs_tol = 0.0,
              int max_iter = 400) {
    double f_lo = f(lo);
    const double f_hi = f(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo < 0.0) == (f_hi < 0.0)) {
        throw std::invalid_argument("bisect: root not bracketed");
    }
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= std::max(rel_tol * std::fabs(mid), abs_tol)) return mid;
        const double f_mid = f(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace glidesim::numeric
