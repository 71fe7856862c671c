#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "bose/errors.hpp"
#include "bose/gas_model.hpp"
#include "bose/units.hpp"

using namespace bose;

namespace {
constexpr double kPi = std::numbers::pi;

// Term-by-term evaluation of A(d, sigma) with Boost's Gamma.
double prefactor_oracle(double d, double sigma) {
    return std::pow(2.0, 1.0 - d + 2.0 * d / sigma) * boost::math::tgamma(d / sigma) /
           (sigma * std::pow(kPi, d * (0.5 - 1.0 / sigma)) * boost::math::tgamma(0.5 * d));
}
}  // namespace

TEST_CASE("thermal wavelength") {
    const GasSpec quadratic{3.0, 2.0, 1.0};
    CHECK(gas::thermal_wavelength(quadratic, 2.0 * kPi) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(gas::thermal_wavelength(quadratic, 4.0) / gas::thermal_wavelength(quadratic, 1.0) ==
          doctest::Approx(0.5).epsilon(1e-15));
    const GasSpec linear{3.0, 1.0, 1.0};
    CHECK(gas::thermal_wavelength(linear, 1.0) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
    CHECK_THROWS_AS(gas::thermal_wavelength(quadratic, 0.0), DomainError);
    CHECK_THROWS_AS(gas::thermal_wavelength(quadratic, -1.0), DomainError);

    const auto scales = gas::thermo_scales(linear, 3.0);
    CHECK(scales.lambda_0 == doctest::Approx(scales.lambda_T * 3.0).epsilon(1e-15));
}

TEST_CASE("thermal wavelength power law slope is -1/sigma") {
    for (double sigma : {0.5, 1.0, 1.5, 2.0}) {
        const GasSpec spec{2.0, sigma, 0.7};
        const double slope = (std::log(gas::thermal_wavelength(spec, 30.0)) - std::log(gas::thermal_wavelength(spec, 0.2))) /
                             (std::log(30.0) - std::log(0.2));
        CHECK(slope == doctest::Approx(-1.0 / sigma).epsilon(1e-12));
    }
}

TEST_CASE("prefactor A") {
    CHECK(std::abs(gas::prefactor_A(3.0, 2.0) - 1.0) <= 1e-14);
    CHECK(std::abs(gas::prefactor_A(1.7, 2.0) - 1.0) <= 1e-14);
    CHECK(gas::prefactor_A(3.0, 1.0) == doctest::Approx(64.0 * kPi).epsilon(1e-13));
    CHECK(gas::prefactor_A(3.0, 1.0) == doctest::Approx(prefactor_oracle(3.0, 1.0)).epsilon(1e-13));
    CHECK_THROWS_AS(gas::prefactor_A(0.0, 2.0), DomainError);
    CHECK_THROWS_AS(gas::prefactor_A(3.0, 2.5), DomainError);
    CHECK_THROWS_AS(gas::prefactor_A(3.0, 0.0), DomainError);
}

TEST_CASE("property: A(d, 2) = 1 and A matches the term-by-term oracle") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> d_dist(0.3, 6.0);
    std::uniform_real_distribution<double> s_dist(0.3, 2.0);
    for (int i = 0; i < 200; ++i) {
        const double d = d_dist(rng);
        const double sigma = s_dist(rng);
        CAPTURE(d);
        CAPTURE(sigma);
        CHECK(std::abs(gas::prefactor_A(d, 2.0) - 1.0) <= 1e-14);
        CHECK(gas::prefactor_A(d, sigma) == doctest::Approx(prefactor_oracle(d, sigma)).epsilon(1e-12));
        CHECK(gas::prefactor_A(d, sigma) > 0.0);
    }
}

TEST_CASE("dispersion") {
    const GasSpec quadratic{3.0, 2.0, 1.0};
    const GasSpec linear{3.0, 1.0, 1.0};
    CHECK(gas::dispersion(quadratic, 1.0) == doctest::Approx(0.5));
    CHECK(gas::dispersion(quadratic, 0.0) == 0.0);
    CHECK(gas::dispersion(linear, 2.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(gas::dispersion(linear, -1.0), DomainError);
    double previous = -1.0;
    for (double k = 0.0; k < 10.0; k += 0.37) {
        const double e = gas::dispersion(GasSpec{2.0, 1.3, 2.0}, k);
        CHECK(e > previous);
        previous = e;
    }
}

TEST_CASE("GasSpec validation") {
    CHECK_NOTHROW(GasSpec{2.5, 1.3, 4.0}.validate());
    CHECK_THROWS_AS(GasSpec({0.0, 2.0, 1.0}).validate(), DomainError);
    CHECK_THROWS_AS(GasSpec({3.0, 2.1, 1.0}).validate(), DomainError);
    CHECK_THROWS_AS(GasSpec({3.0, 0.0, 1.0}).validate(), DomainError);
    CHECK_THROWS_AS(GasSpec({3.0, 2.0, -1.0}).validate(), DomainError);
}

TEST_CASE("GasSpec key-value document") {
    const GasSpec spec{2.75, 1.25, 6.6e-27, UnitSystem::si};
    const auto kv = to_key_values(spec);
    CHECK(kv.at("units") == "si");
    const auto back = gas_spec_from_key_values(kv);
    CHECK(back.d == spec.d);
    CHECK(back.sigma == spec.sigma);
    CHECK(back.mass == spec.mass);
    CHECK(back.units == spec.units);
    CHECK_THROWS_AS(gas_spec_from_key_values({{"dim", "3"}}), ConfigError);
    CHECK_THROWS_AS(gas_spec_from_key_values({{"d", "3x"}}), ConfigError);
    CHECK_THROWS_AS(gas_spec_from_key_values({{"units", "cgs"}}), ConfigError);
}

TEST_CASE("property: SI <-> natural round trip") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> exponent(-30.0, 30.0);
    for (int i = 0; i < 100; ++i) {
        const double d = 1.0 + 3.0 * (i % 4) / 3.0;
        const double m = 1e-27 * std::pow(10.0, exponent(rng) / 10.0);
        const double T = std::pow(10.0, exponent(rng) / 5.0);
        const double rho = std::pow(10.0, 20.0 + exponent(rng) / 3.0);
        const double P = std::pow(10.0, exponent(rng) / 3.0);
        CHECK(units::mass_to_si(units::mass_to_natural(m)) == doctest::Approx(m).epsilon(1e-12));
        CHECK(units::temperature_to_si(units::temperature_to_natural(T)) == doctest::Approx(T).epsilon(1e-12));
        CHECK(units::density_to_si(units::density_to_natural(rho, d), d) == doctest::Approx(rho).epsilon(1e-12));
        CHECK(units::pressure_to_si(units::pressure_to_natural(P, d), d) == doctest::Approx(P).epsilon(1e-12));
    }
}

TEST_CASE("SI mass is converted to natural units") {
    const GasSpec si{3.0, 2.0, units::kMassUnit * 4.0, UnitSystem::si};
    CHECK(si.natural_mass() == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(si.dispersion_coefficient() == doctest::Approx(0.125).epsilon(1e-15));
}
