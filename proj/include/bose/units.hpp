#pragma once

#include "bose/gas_model.hpp"

namespace bose::units {

// Natural units: hbar = k_B = 1 with 1 nm as the length unit and 1 Da as the
// mass unit. Energies are then measured in hbar^2 / (Da nm^2) and
// temperatures in that energy divided by k_B.
inline constexpr double kHbar = 1.054571817e-34;      // J s
inline constexpr double kBoltzmann = 1.380649e-23;    // J / K
inline constexpr double kLengthUnit = 1e-9;           // m
inline constexpr double kMassUnit = 1.66053906660e-27;  // kg

double energy_unit();       // J
double temperature_unit();  // K

double mass_to_natural(double kg);
double mass_to_si(double natural);
double temperature_to_natural(double kelvin);
double temperature_to_si(double natural);
double energy_to_natural(double joule);
double energy_to_si(double natural);
/// Number density in m^-d.
double density_to_natural(double per_m_d, double d);
double density_to_si(double natural, double d);
/// Pressure (energy per d-volume) in J m^-d; Pa for d = 3.
double pressure_to_natural(double si, double d);
double pressure_to_si(double natural, double d);
double length_to_si(double natural);

}  // namespace bose::units
