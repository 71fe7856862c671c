#include "bose/isobar.hpp"

#include <cmath>
#include <limits>

#include "bose/errors.hpp"
#include "bose/root_finding.hpp"
#include "bose/special_functions.hpp"

namespace bose::isobar {

double critical_temperature_pressure(const GasSpec& spec, double P) {
    spec.validate();
    if (!(P > 0.0)) throw DomainError("critical_temperature_pressure: pressure must be positive");
    const double lambda0 = gas::thermal_wavelength_scale(spec);
    const double a = gas::prefactor_A(spec.d, spec.sigma);
    const double z = special::zeta(1.0 + spec.order());
    return std::pow(std::pow(lambda0, spec.d) * P / (z * a), spec.sigma / (spec.d + spec.sigma));
}

IsobarPoint solve_gap_isobar(const GasSpec& spec, double T, double P) {
    spec.validate();
    if (!(T > 0.0)) throw DomainError("solve_gap_isobar: temperature must be positive");
    const double tc = critical_temperature_pressure(spec, P);
    IsobarPoint pt;
    pt.T = T;
    pt.P = P;
    pt.t_P = (T - tc) / tc;

    const double nu = spec.order();
    if (std::abs(pt.t_P) < isochore::kCriticalWindow) {
        pt.regime = Regime::condensed_boundary;
        if (nu > 1.0) {
            pt.rho = isochore::density_at(spec, T, 0.0);
            pt.v = 1.0 / pt.rho;
        } else {
            pt.rho = std::numeric_limits<double>::infinity();
            pt.v = 0.0;
        }
        return pt;
    }
    if (T < tc) {
        throw CondensedRegion("solve_gap_isobar: T is below T_c(P); the condensed state at fixed pressure is not modelled");
    }

    // g_{nu+1}(y) = P / (T lambda_T^-d A), derivative -g_nu(y).
    const double target = P / (T * gas::density_scale(spec, T));
    roots::Options opt;
    opt.newton_floor = nu <= 1.0 ? 1e-6 : 0.0;
    const auto res = roots::solve_decreasing(
        [nu](double y) { return special::bose_g(nu + 1.0, y).value; },
        [nu](double y) { return special::bose_g_derivative(nu + 1.0, y).value; }, target, opt);

    pt.regime = Regime::normal;
    pt.r = res.x * T;
    pt.rho = isochore::density_at(spec, T, pt.r);
    pt.v = 1.0 / pt.rho;
    return pt;
}

double coexistence_consistency(const GasSpec& spec, double rho) {
    const double t1 = isochore::critical_temperature_density(spec, rho);
    const double pc = isochore::pressure_at(spec, t1, 0.0);
    const double t2 = critical_temperature_pressure(spec, pc);
    return std::abs(t2 / t1 - 1.0);
}

}  // namespace bose::isobar
