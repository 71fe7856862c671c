#include "bose/gas_model.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "bose/errors.hpp"
#include "bose/special_functions.hpp"
#include "bose/units.hpp"

namespace bose {

std::string_view to_string(UnitSystem u) { return u == UnitSystem::si ? "si" : "natural"; }

UnitSystem parse_unit_system(std::string_view text) {
    if (text == "natural") return UnitSystem::natural;
    if (text == "si" || text == "SI") return UnitSystem::si;
    throw DomainError("unknown unit system '" + std::string(text) + "'");
}

void GasSpec::validate() const {
    if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("dimension d must be positive");
    if (!(sigma > 0.0 && sigma <= 2.0)) throw DomainError("sigma must lie in (0, 2]");
    if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("mass must be positive");
}

double GasSpec::natural_mass() const {
    return units == UnitSystem::si ? units::mass_to_natural(mass) : mass;
}

namespace {

std::string format_exact(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_number(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': '" + text + "' is not a number");
    }
    if (used != text.size()) throw ConfigError("key '" + key + "': trailing characters in '" + text + "'");
    return v;
}

}  // namespace

std::map<std::string, std::string> to_key_values(const GasSpec& spec) {
    return {{"d", format_exact(spec.d)},
            {"sigma", format_exact(spec.sigma)},
            {"mass", format_exact(spec.mass)},
            {"units", std::string(to_string(spec.units))}};
}

GasSpec gas_spec_from_key_values(const std::map<std::string, std::string>& kv) {
    GasSpec spec;
    for (const auto& [key, value] : kv) {
        if (key == "d") {
            spec.d = parse_number(key, value);
        } else if (key == "sigma") {
            spec.sigma = parse_number(key, value);
        } else if (key == "mass") {
            spec.mass = parse_number(key, value);
        } else if (key == "units") {
            try {
                spec.units = parse_unit_system(value);
            } catch (const DomainError& e) {
                throw ConfigError(e.what());
            }
        } else {
            throw ConfigError("unknown gas key '" + key + "'");
        }
    }
    return spec;
}

namespace gas {

double thermal_wavelength(const GasSpec& spec, double T) {
    if (!(T > 0.0)) throw DomainError("thermal_wavelength: temperature must be positive");
    return std::pow(2.0 * std::numbers::pi / (spec.natural_mass() * T), 1.0 / spec.sigma);
}

double thermal_wavelength_scale(const GasSpec& spec) {
    return std::pow(2.0 * std::numbers::pi / spec.natural_mass(), 1.0 / spec.sigma);
}

double prefactor_A(double d, double sigma) {
    if (!(d > 0.0)) throw DomainError("prefactor_A: d must be positive");
    if (!(sigma > 0.0 && sigma <= 2.0)) throw DomainError("prefactor_A: sigma must lie in (0, 2]");
    const double log_a = (1.0 - d + 2.0 * d / sigma) * std::log(2.0) + std::lgamma(d / sigma) -
                         std::log(sigma) - d * (0.5 - 1.0 / sigma) * std::log(std::numbers::pi) -
                         std::lgamma(0.5 * d);
    return std::exp(log_a);
}

ThermoScales thermo_scales(const GasSpec& spec, double T) {
    return {thermal_wavelength(spec, T), thermal_wavelength_scale(spec), prefactor_A(spec.d, spec.sigma)};
}

double dispersion(const GasSpec& spec, double k) {
    if (!(k >= 0.0)) throw DomainError("dispersion: wavenumber must be non-negative");
    return spec.dispersion_coefficient() * std::pow(k, spec.sigma);
}

double density_scale(const GasSpec& spec, double T) {
    return std::pow(thermal_wavelength(spec, T), -spec.d) * prefactor_A(spec.d, spec.sigma);
}

}  // namespace gas
}  // namespace bose
