#pragma once

#include <map>
#include <string>
#include <string_view>

namespace bose {

enum class UnitSystem { natural, si };

std::string_view to_string(UnitSystem u);
UnitSystem parse_unit_system(std::string_view text);

/// Ideal Bose gas with dispersion eps(k) = hbar^2 k^sigma / 2m in d dimensions.
///
/// `mass` is expressed in the unit system named by `units` (kg for SI, the
/// natural mass unit otherwise). Every thermodynamic argument taken by the
/// library (temperature, density, pressure, energies) is in natural units
/// with hbar = k_B = 1; see units.hpp for the boundary conversion.
struct GasSpec {
    double d = 3.0;
    double sigma = 2.0;
    double mass = 1.0;
    UnitSystem units = UnitSystem::natural;

    /// Throws DomainError unless d > 0, 0 < sigma <= 2 and mass > 0.
    void validate() const;

    /// Mass in natural units.
    double natural_mass() const;

    /// d / sigma, the order of the Bose function in the density equation.
    double order() const { return d / sigma; }

    /// Dispersion coefficient c = hbar^2 / 2m (natural units).
    double dispersion_coefficient() const { return 0.5 / natural_mass(); }
};

/// Flat key/value form: keys d, sigma, mass, units.
std::map<std::string, std::string> to_key_values(const GasSpec& spec);
GasSpec gas_spec_from_key_values(const std::map<std::string, std::string>& kv);

namespace gas {

/// Thermal length scales at temperature T.
struct ThermoScales {
    double lambda_T = 0.0;  ///< (2 pi hbar^2 / m k_B T)^(1/sigma)
    double lambda_0 = 0.0;  ///< lambda_T * T^(1/sigma)
    double A = 0.0;         ///< prefactor_A(d, sigma)
};

double thermal_wavelength(const GasSpec& spec, double T);

/// lambda_T T^(1/sigma), temperature independent.
double thermal_wavelength_scale(const GasSpec& spec);

/// A(d, sigma) = 2^(1 - d + 2d/sigma) Gamma(d/sigma) / (sigma pi^(d(1/2 - 1/sigma)) Gamma(d/2)).
/// Equals 1 for sigma = 2.
double prefactor_A(double d, double sigma);

ThermoScales thermo_scales(const GasSpec& spec, double T);

double dispersion(const GasSpec& spec, double k);

/// lambda_T^-d A, the density scale multiplying g_{d/sigma}.
double density_scale(const GasSpec& spec, double T);

}  // namespace gas
}  // namespace bose
