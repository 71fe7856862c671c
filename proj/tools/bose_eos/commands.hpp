#pragma once

#include <exception>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bose/gas_model.hpp"
#include "bose/verification.hpp"

namespace bose::cli {

inline constexpr std::string_view kSchemaTag = "# bose-eos v1";

enum class ConstraintKind { density, pressure };

/// Density or pressure, in the unit system of the gas spec.
struct Constraint {
    ConstraintKind kind = ConstraintKind::density;
    double value = 0.0;
};

enum class Spacing { linear, log };

struct SweepRequest {
    GasSpec spec;
    Constraint constraint;
    double t_min = 0.5;  ///< first temperature of the sweep
    double t_max = 2.0;  ///< last temperature; may be below t_min
    int points = 16;
    Spacing spacing = Spacing::linear;
    bool relative = false;  ///< temperatures given in units of T_c
    std::vector<std::string> columns;  ///< empty selects every column

    /// Throws ConfigError or DomainError for invalid requests.
    void validate() const;
    std::vector<double> temperatures(double tc) const;
};

/// Every sweep column in output order.
const std::vector<std::string>& sweep_columns();
const std::vector<std::string>& landau_columns();

/// 17 significant digits, '.' decimal point, independent of locale.
std::string format_number(double x);

void cmd_tc(const GasSpec& spec, const Constraint& constraint, std::ostream& out);
void cmd_sweep(const SweepRequest& request, unsigned threads, std::ostream& out);
void cmd_landau(const GasSpec& spec, double rho, const std::vector<double>& ts, std::ostream& out);
/// Prints one line per check; returns 0 when all pass, 1 otherwise.
int cmd_verify(verify::Level level, unsigned threads, std::ostream& out);

/// 2 domain-type errors, 3 convergence, 4 configuration, 1 anything else.
int exit_code_for(const std::exception& e);

}  // namespace bose::cli
