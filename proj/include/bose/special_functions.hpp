#pragma once

#include <cstddef>

namespace bose::special {

/// Value with an absolute error estimate and the number of series terms used.
struct EvalResult {
    double value = 0.0;
    double est_error = 0.0;
    std::size_t terms_used = 0;
};

/// Bose function g_nu(y) = sum_{n>=1} exp(-n y) / n^nu, for nu > 0 and y >= 0.
///
/// Small arguments (y < 1e-3) use the expansion around y = 0 for non-integer
/// orders and an Euler-Maclaurin tail for integer orders; everything else is
/// summed directly until the tail bound drops below 1e-15. The absolute error
/// target is 1e-12.
///
/// Throws DomainError for y < 0 or nu <= 0 and DivergentValue for y = 0 with
/// nu <= 1.
EvalResult bose_g(double nu, double y);

/// Truncated small-argument expansion
///   g_nu(y) = Gamma(1-nu) y^(nu-1) + sum_{k=0}^{k_max} (-1)^k zeta(nu-k) y^k / k!
/// for non-integer nu. The error estimate is the first omitted term plus
/// round-off. Integer orders are rejected with DomainError.
EvalResult bose_g_small_y(double nu, double y, int k_max);

/// d g_nu / dy = -g_{nu-1}(y). Throws DivergentValue when g_{nu-1}(y) diverges.
EvalResult bose_g_derivative(double nu, double y);

/// Riemann zeta for real s != 1. Negative arguments go through the
/// functional equation. Throws PoleError at s = 1.
double zeta(double s);

/// Gamma function. Throws PoleError at non-positive integers.
double gamma(double x);

/// True when x is within `tol` of an integer.
bool is_integer(double x, double tol = 1e-12);

}  // namespace bose::special
