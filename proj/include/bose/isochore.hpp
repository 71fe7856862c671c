#pragma once

#include <string_view>

#include "bose/gas_model.hpp"

namespace bose {

enum class Regime { normal, condensed, critical, zero_T_BEC, condensed_boundary };

std::string_view to_string(Regime r);

/// One equilibrium state. All quantities in natural units; mu = -r.
struct ThermoPoint {
    double T = 0.0;
    double t = 0.0;     ///< (T - T_c) / T_c
    double r = 0.0;     ///< gap, -mu >= 0
    double psi2 = 0.0;  ///< condensate fraction
    double rho = 0.0;
    double P = 0.0;
    Regime regime = Regime::normal;

    double mu() const { return -r; }
};

namespace isochore {

/// |t| below which the solver reports the critical point instead of a root.
inline constexpr double kCriticalWindow = 1e-8;

/// T_c(rho) = (2 pi hbar^2 / m k_B) [rho / (A zeta(d/sigma))]^(sigma/d).
/// Throws ZeroTemperatureBEC when d <= sigma.
double critical_temperature_density(const GasSpec& spec, double rho);

/// Normal-phase density lambda_T^-d A g_{d/sigma}(r / T).
double density_at(const GasSpec& spec, double T, double r);

/// Solves the density equation at (T, rho). Above T_c the gap r > 0 is found
/// with a bracketed Newton iteration; at and below T_c, r = 0 and the
/// condensate fraction is 1 - (T/T_c)^(d/sigma).
ThermoPoint solve_gap_isochore(const GasSpec& spec, double T, double rho);

/// P = k_B T lambda_T^-d A g_{d/sigma+1}(r / T).
double pressure_at(const GasSpec& spec, double T, double r);

/// Omega(T, r, h) = -T V lambda_T^-d A g_{d/sigma+1}(r/T) - h^2 / (N r) for a
/// real fictitious field h. Throws PoleError for h != 0 at r = 0.
double grand_potential(const GasSpec& spec, double T, double r, double h, double N, double V);

/// Entropy at fixed r = -mu and h = 0:
/// S = V lambda_T^-d A [(d/sigma + 1) g_{d/sigma+1}(y) + y g_{d/sigma}(y)], y = r/T.
double entropy(const GasSpec& spec, double T, double r, double V);

/// Order parameter h / (N r) induced by a real field h.
double order_parameter(double r, double h, double N);

/// chi_T = dPsi/dh = 1 / (N r).
double susceptibility(double r, double N);

}  // namespace isochore
}  // namespace bose
