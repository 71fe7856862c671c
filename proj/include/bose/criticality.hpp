#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bose/gas_model.hpp"

namespace bose::critical {

/// Effective Landau-Ginzburg free energy f = C_f (Psi^2 + (d/sigma) t)^(d/(d-sigma))
/// at constant density, valid for sigma < d < 2 sigma and |t| << 1.
struct LandauModel {
    double C_f = 0.0;
    double d_over_sigma = 0.0;
    double t = 0.0;
    double valid_window = 1e-2;  ///< |t| below which the asymptotic form is trusted
    double T_c = 0.0;
    double rho = 0.0;

    /// Psi^2 + (d/sigma) t
    double bracket(double psi) const { return psi * psi + d_over_sigma * t; }
    /// d / (d - sigma)
    double free_energy_power() const { return d_over_sigma / (d_over_sigma - 1.0); }
    /// sigma / (d - sigma)
    double gap_power() const { return 1.0 / (d_over_sigma - 1.0); }
    bool in_asymptotic_window() const;
};

/// Builds the model at (rho, t). C_f = (d/sigma - 1) [zeta(d/sigma) / |Gamma(1 - d/sigma)|]^(sigma/(d-sigma)) k_B T_c rho.
/// Throws UnsupportedRegime unless sigma < d < 2 sigma.
LandauModel make_landau_model(const GasSpec& spec, double rho, double t);

/// [zeta(d/sigma) / |Gamma(1 - d/sigma)|]^(sigma/(d-sigma))
double landau_amplitude(double d_over_sigma);

/// Throws BranchError when Psi^2 + (d/sigma) t < 0.
double landau_free_energy(const LandauModel& model, double psi);

/// Analytic df/dPsi = 2 Psi C_f (d/(d-sigma)) bracket^(sigma/(d-sigma)).
double landau_gradient(const LandauModel& model, double psi);

/// Psi (Psi^2 + (d/sigma) t)^(sigma/(d-sigma)); this is df/dPsi divided by
/// the positive constant 2 C_f d/(d-sigma). Zero at Psi = 0 for every t and,
/// for t < 0, at Psi^2 = -(d/sigma) t.
double equation_of_state(const LandauModel& model, double psi);

/// Ordered root Psi^2 = -(d/sigma) t for t < 0, zero otherwise.
double ordered_root_psi2(const LandauModel& model);

/// mu = -k_B T [zeta / |Gamma(1 - d/sigma)|]^(sigma/(d-sigma)) bracket^(sigma/(d-sigma)), T = T_c (1 + t).
double chemical_potential_asymptotic(const LandauModel& model, double psi);

/// Taylor coefficients of f in powers of Psi at Psi = 0 (t > 0).
struct LandauCoefficients {
    double psi2 = 0.0;
    double psi4 = 0.0;
};
LandauCoefficients landau_expansion_coefficients(const LandauModel& model);

/// Static correlation function chi(k) = 1 / (c k^sigma + r), c = hbar^2 / 2m.
class Susceptibility {
public:
    Susceptibility(double c, double sigma, double r) : c_(c), sigma_(sigma), r_(r) {}
    /// Throws DivergentValue at k = 0 when r = 0.
    double operator()(double k) const;

private:
    double c_;
    double sigma_;
    double r_;
};

struct CorrelationQuantities {
    double xi = 0.0;  ///< (c / r)^(1/sigma); +inf at the critical point r = 0
    Susceptibility chi;
    bool critical() const;
};

CorrelationQuantities correlation_quantities(const GasSpec& spec, double r);

/// Correlation length; throws DivergentValue at r = 0.
double correlation_length(const GasSpec& spec, double r);

/// Least-squares line through (log x, log y).
struct PowerLawFit {
    double slope = 0.0;
    double slope_error = 0.0;
    double intercept = 0.0;
    std::size_t points = 0;
};

/// Throws FitError for fewer than 3 points or non-positive data.
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> curve);

enum class ExponentKind { gamma_from_r, nu_from_xi };

struct FittedExponent {
    double value = 0.0;
    double std_error = 0.0;
};

/// Critical exponent from a curve of (t, value) pairs: gamma from r ~ t^gamma,
/// nu from xi ~ t^-nu. Needs at least 8 points spanning two decades inside
/// (0, 1e-2] with positive values.
FittedExponent fit_exponent(std::span<const std::pair<double, double>> curve, ExponentKind kind);

/// log-uniform reduced temperatures used for exponent fits.
struct FitWindow {
    double t_min = 1e-5;
    double t_max = 1e-2;
    int points = 16;

    std::vector<double> grid() const;
};

struct ExponentSet {
    double eta = 0.0;               ///< 2 - sigma
    std::optional<double> gamma;    ///< analytic, only where known
    std::optional<double> nu;
    FittedExponent fitted_gamma;
    FittedExponent fitted_nu;
    FitWindow fit_window;
};

/// Constant density exponents: analytic gamma = sigma/(d-sigma), nu = 1/(d-sigma)
/// for sigma < d < 2 sigma, fitted values from the exact gap solver.
ExponentSet isochore_exponents(const GasSpec& spec, double rho, const FitWindow& window = {});

/// Constant pressure exponents from the isobar solver; no analytic targets.
ExponentSet isobar_exponents(const GasSpec& spec, double P, const FitWindow& window = {});

/// eta from the log-log slope of chi(k) at r = 0 over k in [k_min, k_max].
double fisher_eta_from_slope(const GasSpec& spec, double k_min = 1e-3, double k_max = 1e-1, int points = 12);

}  // namespace bose::critical
