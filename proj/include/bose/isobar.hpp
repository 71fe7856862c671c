#pragma once

#include "bose/gas_model.hpp"
#include "bose/isochore.hpp"

namespace bose {

/// State along an isobar; regime is normal or condensed_boundary.
struct IsobarPoint {
    double T = 0.0;
    double P = 0.0;
    double r = 0.0;
    double rho = 0.0;  ///< +inf on the boundary when d <= sigma
    double v = 0.0;    ///< 1 / rho
    double t_P = 0.0;  ///< (T - T_c(P)) / T_c(P)
    Regime regime = Regime::normal;
};

namespace isobar {

/// T_c(P) = [lambda_0^d P / (zeta(1 + d/sigma) A k_B)]^(sigma/(d+sigma)); finite for every d > 0.
double critical_temperature_pressure(const GasSpec& spec, double P);

/// Solves k_B T lambda_T^-d A g_{d/sigma+1}(r/T) = P for r at T >= T_c(P).
/// Below T_c(P) the state is not modelled and CondensedRegion is thrown.
IsobarPoint solve_gap_isobar(const GasSpec& spec, double T, double P);

/// |T_c(P_c) / T_c(rho) - 1| where P_c is the pressure on the r = 0 line at
/// T_c(rho). Propagates ZeroTemperatureBEC for d <= sigma.
double coexistence_consistency(const GasSpec& spec, double rho);

}  // namespace isobar
}  // namespace bose
