#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "bose/errors.hpp"

namespace bose::roots {

struct Options {
    double initial_upper = 1.0;  ///< first guess for the upper bracket end
    double max_upper = 1e3;      ///< bracket growth stops here
    double x_tol = 1e-14;        ///< relative bracket width / step size at exit
    double residual_tol = 1e-10; ///< accepted relative residual if the iteration budget runs out
    /// Below this abscissa the derivative is not trusted and the step is a
    /// bisection. Zero disables the guard.
    double newton_floor = 0.0;
    int max_iterations = 500;
};

struct Result {
    double x = 0.0;
    double residual = 0.0;  ///< (f(x) - target) / target
    int iterations = 0;
    int bisections = 0;
};

/// Solves f(x) = target for x > 0 when f is strictly decreasing on [0, inf)
/// with f(0) > target (f(0) may be +inf) and f(inf) = 0 < target.
///
/// The bracket [0, hi] grows geometrically until f(hi) < target; after that
/// each step is a Newton step using `df` when it lands strictly inside the
/// current bracket and a bisection otherwise.
inline Result solve_decreasing(const std::function<double(double)>& f,
                               const std::function<double(double)>& df, double target,
                               const Options& opt = {}) {
    if (!(target > 0.0) || !std::isfinite(target)) {
        throw DomainError("solve_decreasing: target must be positive and finite");
    }
    double lo = 0.0;
    double hi = opt.initial_upper;
    double f_hi = f(hi);
    while (f_hi >= target) {
        lo = hi;
        hi *= 2.0;
        if (hi > opt.max_upper) {
            throw ConvergenceError("solve_decreasing: no sign change below " + std::to_string(opt.max_upper));
        }
        f_hi = f(hi);
    }

    Result res;
    double x = 0.5 * (lo + hi);
    for (int it = 1; it <= opt.max_iterations; ++it) {
        res.iterations = it;
        const double fx = f(x);
        const double g = fx - target;
        res.x = x;
        res.residual = g / target;
        if (g == 0.0) return res;
        if (g > 0.0) {
            lo = x;
        } else {
            hi = x;
        }
        if (hi - lo <= opt.x_tol * hi) return res;

        double next = std::numeric_limits<double>::quiet_NaN();
        if (x >= opt.newton_floor) {
            const double slope = df(x);
            if (std::isfinite(slope) && slope < 0.0) next = x - g / slope;
        }
        if (std::isfinite(next) && next > lo && next < hi) {
            if (std::abs(next - x) <= opt.x_tol * x) {
                res.x = next;
                res.residual = (f(next) - target) / target;
                return res;
            }
        } else {
            next = 0.5 * (lo + hi);
            ++res.bisections;
        }
        x = next;
    }
    if (std::abs(res.residual) <= opt.residual_tol) return res;
    throw ConvergenceError("solve_decreasing: iteration budget exhausted");
}

}  // namespace bose::roots
