#include "bose/isochore.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bose/errors.hpp"
#include "bose/root_finding.hpp"
#include "bose/special_functions.hpp"

namespace bose {

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::normal: return "normal";
        case Regime::condensed: return "condensed";
        case Regime::critical: return "critical";
        case Regime::zero_T_BEC: return "zero_temperature_BEC";
        case Regime::condensed_boundary: return "condensed_boundary";
    }
    return "unknown";
}

namespace isochore {
namespace {

void require_finite_tc(const GasSpec& spec) {
    if (spec.d <= spec.sigma) {
        throw ZeroTemperatureBEC("d <= sigma: Bose-Einstein condensation only at T = 0 (d=" +
                                 std::to_string(spec.d) + ", sigma=" + std::to_string(spec.sigma) + ")");
    }
}

}  // namespace

double critical_temperature_density(const GasSpec& spec, double rho) {
    spec.validate();
    if (!(rho > 0.0)) throw DomainError("critical_temperature_density: density must be positive");
    require_finite_tc(spec);
    const double a = gas::prefactor_A(spec.d, spec.sigma);
    const double z = special::zeta(spec.order());
    return 2.0 * std::numbers::pi / spec.natural_mass() * std::pow(rho / (a * z), spec.sigma / spec.d);
}

double density_at(const GasSpec& spec, double T, double r) {
    if (!(r >= 0.0)) throw DomainError("density_at: gap must be non-negative");
    return gas::density_scale(spec, T) * special::bose_g(spec.order(), r / T).value;
}

double pressure_at(const GasSpec& spec, double T, double r) {
    spec.validate();
    if (!(T > 0.0)) throw DomainError("pressure_at: temperature must be positive");
    if (!(r >= 0.0)) throw DomainError("pressure_at: gap must be non-negative");
    return T * gas::density_scale(spec, T) * special::bose_g(spec.order() + 1.0, r / T).value;
}

ThermoPoint solve_gap_isochore(const GasSpec& spec, double T, double rho) {
    spec.validate();
    if (!(T > 0.0)) throw DomainError("solve_gap_isochore: temperature must be positive");
    if (!(rho > 0.0)) throw DomainError("solve_gap_isochore: density must be positive");
    require_finite_tc(spec);

    const double tc = critical_temperature_density(spec, rho);
    ThermoPoint pt;
    pt.T = T;
    pt.t = (T - tc) / tc;
    pt.rho = rho;

    if (std::abs(pt.t) < kCriticalWindow) {
        pt.regime = Regime::critical;
        pt.P = pressure_at(spec, T, 0.0);
        return pt;
    }
    if (T < tc) {
        pt.regime = Regime::condensed;
        pt.psi2 = 1.0 - std::pow(T / tc, spec.order());
        pt.P = pressure_at(spec, T, 0.0);
        return pt;
    }

    // Normal phase: g_{d/sigma}(y) = rho / (lambda_T^-d A), y = r / T.
    const double nu = spec.order();
    const double target = rho / gas::density_scale(spec, T);
    roots::Options opt;
    // g_{nu-1} diverges at y -> 0 when nu <= 2.
    opt.newton_floor = nu - 1.0 <= 1.0 ? 1e-6 : 0.0;
    const auto res = roots::solve_decreasing(
        [nu](double y) { return special::bose_g(nu, y).value; },
        [nu](double y) { return special::bose_g_derivative(nu, y).value; }, target, opt);

    pt.regime = Regime::normal;
    pt.r = res.x * T;
    pt.P = pressure_at(spec, T, pt.r);
    return pt;
}

double grand_potential(const GasSpec& spec, double T, double r, double h, double N, double V) {
    spec.validate();
    if (!(T > 0.0)) throw DomainError("grand_potential: temperature must be positive");
    if (!(r >= 0.0)) throw DomainError("grand_potential: gap must be non-negative");
    if (!(N > 0.0) || !(V > 0.0)) throw DomainError("grand_potential: N and V must be positive");
    const double bulk = -pressure_at(spec, T, r) * V;
    if (h == 0.0) return bulk;
    if (r == 0.0) throw PoleError("grand_potential: field term h^2 / (N r) has a pole at r = 0");
    return bulk - h * h / (N * r);
}

double entropy(const GasSpec& spec, double T, double r, double V) {
    spec.validate();
    if (!(T > 0.0)) throw DomainError("entropy: temperature must be positive");
    if (!(r >= 0.0)) throw DomainError("entropy: gap must be non-negative");
    const double nu = spec.order();
    const double y = r / T;
    const double occupation = y > 0.0 ? y * special::bose_g(nu, y).value : 0.0;
    return V * gas::density_scale(spec, T) * ((nu + 1.0) * special::bose_g(nu + 1.0, y).value + occupation);
}

double order_parameter(double r, double h, double N) {
    if (r == 0.0) throw PoleError("order_parameter: pole at r = 0");
    return h / (N * r);
}

double susceptibility(double r, double N) {
    if (r == 0.0) throw PoleError("susceptibility: pole at r = 0");
    return 1.0 / (N * r);
}

}  // namespace isochore
}  // namespace bose
