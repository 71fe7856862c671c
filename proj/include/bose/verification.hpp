#pragma once

#include <string>
#include <vector>

// Cross-module checks shared by `bose-eos verify` and the acceptance suite.
// Each check measures one quantity against a pinned threshold.
namespace bose::verify {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double measured = 0.0;   ///< worst observed value of the checked quantity
    double threshold = 0.0;  ///< pass limit for `measured`
    std::string detail;
    double seconds = 0.0;
};

enum class Level { quick, full };

CheckResult special_function_fidelity();
CheckResult prefactor_identity();
CheckResult isochore_round_trip();
CheckResult condensate_fraction_law();
CheckResult coexistence_closure();
CheckResult equation_of_state_stationarity();
CheckResult asymptotic_chemical_potential();
CheckResult exponent_recovery();
/// Full level adds the beta r = 0.1 and 1.0 sweeps and extends L to 32.
CheckResult finite_size_convergence(Level level, unsigned threads = 1);
CheckResult tricritical_coefficients();

/// Every check above, in id order.
std::vector<CheckResult> run_all(Level level, unsigned threads = 1);

/// Box length at which the d=3, sigma=2, beta r=0.5 discrete density first
/// reaches 1e-3 relative error (T = m = 1).
inline constexpr double kFiniteSizeLStar = 8.0;

}  // namespace bose::verify
