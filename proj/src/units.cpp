#include "bose/units.hpp"

#include <cmath>

namespace bose::units {

double energy_unit() { return kHbar * kHbar / (kMassUnit * kLengthUnit * kLengthUnit); }
double temperature_unit() { return energy_unit() / kBoltzmann; }

double mass_to_natural(double kg) { return kg / kMassUnit; }
double mass_to_si(double natural) { return natural * kMassUnit; }
double temperature_to_natural(double kelvin) { return kelvin / temperature_unit(); }
double temperature_to_si(double natural) { return natural * temperature_unit(); }
double energy_to_natural(double joule) { return joule / energy_unit(); }
double energy_to_si(double natural) { return natural * energy_unit(); }
double density_to_natural(double per_m_d, double d) { return per_m_d * std::pow(kLengthUnit, d); }
double density_to_si(double natural, double d) { return natural / std::pow(kLengthUnit, d); }
double pressure_to_natural(double si, double d) { return si * std::pow(kLengthUnit, d) / energy_unit(); }
double pressure_to_si(double natural, double d) { return natural * energy_unit() / std::pow(kLengthUnit, d); }
double length_to_si(double natural) { return natural * kLengthUnit; }

}  // namespace bose::units
