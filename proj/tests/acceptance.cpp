// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "bose/verification.hpp"
#include "commands.hpp"

using namespace bose;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int id;
    double time_limit;  // seconds; 0 means no limit
    std::function<verify::CheckResult()> run;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

verify::CheckResult cli_determinism() {
    verify::CheckResult res;
    res.id = 11;
    res.name = "CLI determinism";

    cli::SweepRequest req;
    req.spec = GasSpec{3.0, 1.8, 1.0};
    req.constraint = {cli::ConstraintKind::density, 0.5};
    req.t_min = 0.25;
    req.t_max = 4.0;
    req.points = 64;
    req.relative = true;
    std::ostringstream first, second;
    cli::cmd_sweep(req, std::max(1u, std::thread::hardware_concurrency()), first);
    cli::cmd_sweep(req, std::max(1u, std::thread::hardware_concurrency()), second);
    const bool identical = first.str() == second.str() && !first.str().empty();

    const auto start = Clock::now();
    const std::string cmd = std::string(BOSE_EOS_BINARY) + " verify --quick > /dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    const double verify_seconds = seconds_since(start);
    const bool verify_ok = WIFEXITED(raw) && WEXITSTATUS(raw) == 0;

    res.passed = identical && verify_ok && verify_seconds < 10.0;
    res.measured = verify_seconds;
    res.threshold = 10.0;
    res.detail = std::string("sweeps ") + (identical ? "byte-identical" : "differ") + ", verify --quick exit " +
                 (verify_ok ? "0" : "nonzero") + " in " + std::to_string(verify_seconds) + " s";
    return res;
}

}  // namespace

int main() {
    const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    const Criterion criteria[] = {
        {1, 1.0, verify::special_function_fidelity},
        {2, 0.0, verify::prefactor_identity},
        {3, 5.0, verify::isochore_round_trip},
        {4, 0.0, verify::condensate_fraction_law},
        {5, 1.0, verify::coexistence_closure},
        {6, 0.0, verify::equation_of_state_stationarity},
        {7, 0.0, verify::asymptotic_chemical_potential},
        {8, 30.0, verify::exponent_recovery},
        {9, 120.0, [threads] { return verify::finite_size_convergence(verify::Level::full, threads); }},
        {10, 0.0, verify::tricritical_coefficients},
        {11, 0.0, cli_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        verify::CheckResult res;
        try {
            res = c.run();
        } catch (const std::exception& e) {
            res.id = c.id;
            res.name = "exception";
            res.detail = e.what();
            res.passed = false;
        }
        const double elapsed = seconds_since(start);
        const bool in_time = c.time_limit == 0.0 || elapsed < c.time_limit;
        const bool passed = res.passed && in_time;
        if (!passed) ++failures;
        std::printf("[%s] AC%-2d %-36s measured=%.3e limit=%.3e time=%.2fs%s  %s\n", passed ? "PASS" : "FAIL", c.id,
                    res.name.c_str(), res.measured, res.threshold, elapsed,
                    in_time ? "" : " (over time limit)", res.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
