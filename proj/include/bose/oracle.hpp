#pragma once

#include <functional>

#include "bose/gas_model.hpp"

// Verification engines that share no evaluation code with the production
// special functions and solvers.
namespace bose::oracle {

/// Cubic periodic box with modes k_j = 2 pi n_j / L, |n_j| <= n_max.
struct BoxSpec {
    double L = 16.0;
    int d = 3;      ///< 1, 2 or 3
    int n_max = 0;  ///< 0 picks the cutoff automatically
};

/// Mode cutoff per axis such that omitted modes have (eps - mu)/T > 40.
int auto_cutoff(const GasSpec& spec, const BoxSpec& box, double T);

/// (1/V) sum_k 1 / (exp((eps(k) - mu)/T) - 1), including k = 0, for mu < 0.
/// The result does not depend on `threads`: slabs are reduced in fixed order.
double finite_density(const GasSpec& spec, const BoxSpec& box, double T, double mu, unsigned threads = 1);

/// g_nu(y) by plain extended-precision summation with Kahan compensation.
/// At y = 0 the Dirichlet series is summed to N terms and closed with its
/// Euler-Maclaurin tail.
double series_sum_highprec(double nu, double y, double tol = 1e-17);

enum class Stencil { central, forward, backward };

struct Derivative {
    double value = 0.0;
    double error = 0.0;
};

/// Finite-difference derivative with one Richardson step (h and h/2).
Derivative finite_difference(const std::function<double(double)>& fn, double x, double h,
                             Stencil stencil = Stencil::central);

}  // namespace bose::oracle
