#include "bose/criticality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bose/errors.hpp"
#include "bose/isobar.hpp"
#include "bose/isochore.hpp"
#include "bose/special_functions.hpp"

namespace bose::critical {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Psi^2 + (d/sigma) t, with round-off at the branch point snapped to zero.
double checked_bracket(const LandauModel& m, double psi) {
    const double psi2 = psi * psi;
    const double shift = m.d_over_sigma * m.t;
    const double b = psi2 + shift;
    if (b >= 0.0) return b;
    if (b > -64.0 * kEps * std::max(psi2, std::abs(shift))) return 0.0;
    throw BranchError("Landau bracket Psi^2 + (d/sigma) t = " + std::to_string(b) +
                      " is negative (mu > 0 is forbidden)");
}

}  // namespace

bool LandauModel::in_asymptotic_window() const { return std::abs(t) <= valid_window; }

double landau_amplitude(double d_over_sigma) {
    return std::pow(special::zeta(d_over_sigma) / std::abs(special::gamma(1.0 - d_over_sigma)),
                    1.0 / (d_over_sigma - 1.0));
}

LandauModel make_landau_model(const GasSpec& spec, double rho, double t) {
    spec.validate();
    if (!(spec.sigma < spec.d && spec.d < 2.0 * spec.sigma)) {
        throw UnsupportedRegime("Landau form needs sigma < d < 2 sigma (d=" + std::to_string(spec.d) +
                                ", sigma=" + std::to_string(spec.sigma) + ")");
    }
    if (!std::isfinite(t) || t <= -1.0) throw DomainError("make_landau_model: reduced temperature must exceed -1");
    LandauModel m;
    m.d_over_sigma = spec.order();
    m.t = t;
    m.rho = rho;
    m.T_c = isochore::critical_temperature_density(spec, rho);
    m.C_f = (m.d_over_sigma - 1.0) * landau_amplitude(m.d_over_sigma) * m.T_c * rho;
    return m;
}

double landau_free_energy(const LandauModel& model, double psi) {
    return model.C_f * std::pow(checked_bracket(model, psi), model.free_energy_power());
}

double landau_gradient(const LandauModel& model, double psi) {
    const double b = checked_bracket(model, psi);
    return 2.0 * psi * model.C_f * model.free_energy_power() * std::pow(b, model.gap_power());
}

double equation_of_state(const LandauModel& model, double psi) {
    if (psi == 0.0) return 0.0;  // disordered root for every t
    return psi * std::pow(checked_bracket(model, psi), model.gap_power());
}

double ordered_root_psi2(const LandauModel& model) {
    return model.t < 0.0 ? -model.d_over_sigma * model.t : 0.0;
}

double chemical_potential_asymptotic(const LandauModel& model, double psi) {
    const double b = checked_bracket(model, psi);
    const double T = model.T_c * (1.0 + model.t);
    const double power = model.gap_power();
    return -T * landau_amplitude(model.d_over_sigma) * std::pow(b, power);
}

LandauCoefficients landau_expansion_coefficients(const LandauModel& model) {
    const double base = model.d_over_sigma * model.t;
    if (!(base > 0.0)) throw BranchError("Taylor coefficients at Psi = 0 need t > 0");
    const double p = model.free_energy_power();
    return {model.C_f * p * std::pow(base, p - 1.0), model.C_f * 0.5 * p * (p - 1.0) * std::pow(base, p - 2.0)};
}

double Susceptibility::operator()(double k) const {
    if (!(k >= 0.0)) throw DomainError("chi(k): wavenumber must be non-negative");
    const double denom = c_ * std::pow(k, sigma_) + r_;
    if (denom == 0.0) throw DivergentValue("chi(k) diverges at k = 0 on the critical point");
    return 1.0 / denom;
}

bool CorrelationQuantities::critical() const { return std::isinf(xi); }

CorrelationQuantities correlation_quantities(const GasSpec& spec, double r) {
    spec.validate();
    if (!(r >= 0.0)) throw DomainError("correlation_quantities: gap must be non-negative");
    const double c = spec.dispersion_coefficient();
    const double xi = r > 0.0 ? std::pow(c / r, 1.0 / spec.sigma) : std::numeric_limits<double>::infinity();
    return {xi, Susceptibility(c, spec.sigma, r)};
}

double correlation_length(const GasSpec& spec, double r) {
    const auto q = correlation_quantities(spec, r);
    if (q.critical()) throw DivergentValue("correlation length diverges at r = 0");
    return q.xi;
}

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> curve) {
    if (curve.size() < 3) throw FitError("power-law fit needs at least 3 points");
    double mx = 0.0;
    double my = 0.0;
    for (const auto& [x, y] : curve) {
        if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
            throw FitError("power-law fit needs positive finite data");
        }
        mx += std::log(x);
        my += std::log(y);
    }
    const double n = static_cast<double>(curve.size());
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& [x, y] : curve) {
        const double dx = std::log(x) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(y) - my);
    }
    if (sxx == 0.0) throw FitError("power-law fit: all abscissae coincide");
    PowerLawFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.points = curve.size();
    double ss = 0.0;
    for (const auto& [x, y] : curve) {
        const double res = std::log(y) - (fit.intercept + fit.slope * std::log(x));
        ss += res * res;
    }
    fit.slope_error = std::sqrt(ss / (n - 2.0) / sxx);
    return fit;
}

FittedExponent fit_exponent(std::span<const std::pair<double, double>> curve, ExponentKind kind) {
    if (curve.size() < 8) throw FitError("exponent fit needs at least 8 points");
    double t_lo = std::numeric_limits<double>::infinity();
    double t_hi = 0.0;
    for (const auto& [t, v] : curve) {
        if (!(t > 0.0) || t > 1e-2) throw FitError("exponent fit: reduced temperatures must lie in (0, 1e-2]");
        if (!(v > 0.0)) throw FitError("exponent fit: values must be positive");
        t_lo = std::min(t_lo, t);
        t_hi = std::max(t_hi, t);
    }
    if (t_hi / t_lo < 100.0 * (1.0 - 1e-12)) throw FitError("exponent fit: t must span at least two decades");
    const auto fit = fit_power_law(curve);
    const double sign = kind == ExponentKind::gamma_from_r ? 1.0 : -1.0;
    return {sign * fit.slope, fit.slope_error};
}

std::vector<double> FitWindow::grid() const {
    if (!(t_min > 0.0 && t_max > t_min) || points < 2) throw DomainError("invalid fit window");
    std::vector<double> ts(static_cast<std::size_t>(points));
    const double step = std::log(t_max / t_min) / (points - 1);
    for (int i = 0; i < points; ++i) ts[static_cast<std::size_t>(i)] = t_min * std::exp(step * i);
    ts.back() = t_max;
    return ts;
}

namespace {

ExponentSet fit_gap_curve(const GasSpec& spec, const FitWindow& window, const std::vector<double>& ts,
                          const std::vector<double>& gaps) {
    ExponentSet set;
    set.eta = 2.0 - spec.sigma;
    set.fit_window = window;
    std::vector<std::pair<double, double>> r_curve;
    std::vector<std::pair<double, double>> xi_curve;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        r_curve.emplace_back(ts[i], gaps[i]);
        xi_curve.emplace_back(ts[i], correlation_length(spec, gaps[i]));
    }
    set.fitted_gamma = fit_exponent(r_curve, ExponentKind::gamma_from_r);
    set.fitted_nu = fit_exponent(xi_curve, ExponentKind::nu_from_xi);
    return set;
}

}  // namespace

ExponentSet isochore_exponents(const GasSpec& spec, double rho, const FitWindow& window) {
    const double tc = isochore::critical_temperature_density(spec, rho);
    const auto ts = window.grid();
    std::vector<double> gaps;
    for (double t : ts) gaps.push_back(isochore::solve_gap_isochore(spec, tc * (1.0 + t), rho).r);
    auto set = fit_gap_curve(spec, window, ts, gaps);
    if (spec.sigma < spec.d && spec.d < 2.0 * spec.sigma) {
        set.gamma = spec.sigma / (spec.d - spec.sigma);
        set.nu = 1.0 / (spec.d - spec.sigma);
    }
    return set;
}

ExponentSet isobar_exponents(const GasSpec& spec, double P, const FitWindow& window) {
    const double tc = isobar::critical_temperature_pressure(spec, P);
    const auto ts = window.grid();
    std::vector<double> gaps;
    for (double t : ts) gaps.push_back(isobar::solve_gap_isobar(spec, tc * (1.0 + t), P).r);
    return fit_gap_curve(spec, window, ts, gaps);
}

double fisher_eta_from_slope(const GasSpec& spec, double k_min, double k_max, int points) {
    const auto q = correlation_quantities(spec, 0.0);
    std::vector<std::pair<double, double>> curve;
    const double step = std::log(k_max / k_min) / (points - 1);
    for (int i = 0; i < points; ++i) {
        const double k = k_min * std::exp(step * i);
        curve.emplace_back(k, q.chi(k));
    }
    // chi(k) ~ k^(-2 + eta)
    return 2.0 + fit_power_law(curve).slope;
}

}  // namespace bose::critical
