#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <future>
#include <ostream>
#include <sstream>

#include "bose/criticality.hpp"
#include "bose/errors.hpp"
#include "bose/isobar.hpp"
#include "bose/isochore.hpp"
#include "bose/units.hpp"

namespace bose::cli {
namespace {

bool si(const GasSpec& spec) { return spec.units == UnitSystem::si; }

double to_natural(const GasSpec& spec, const Constraint& c) {
    if (!si(spec)) return c.value;
    return c.kind == ConstraintKind::density ? units::density_to_natural(c.value, spec.d)
                                             : units::pressure_to_natural(c.value, spec.d);
}

double temperature_out(const GasSpec& spec, double T) { return si(spec) ? units::temperature_to_si(T) : T; }
double energy_out(const GasSpec& spec, double e) { return si(spec) ? units::energy_to_si(e) : e; }
double density_out(const GasSpec& spec, double rho) { return si(spec) ? units::density_to_si(rho, spec.d) : rho; }
double pressure_out(const GasSpec& spec, double p) { return si(spec) ? units::pressure_to_si(p, spec.d) : p; }

double critical_temperature(const GasSpec& spec, const Constraint& c) {
    const double value = to_natural(spec, c);
    return c.kind == ConstraintKind::density ? isochore::critical_temperature_density(spec, value)
                                             : isobar::critical_temperature_pressure(spec, value);
}

std::string json_string(std::string_view s) { return "\"" + std::string(s) + "\""; }

// Fields of one sweep row keyed like sweep_columns(); empty means "no value".
using Row = std::vector<std::string>;

Row isochore_row(const GasSpec& spec, double T, double rho) {
    const auto pt = isochore::solve_gap_isochore(spec, T, rho);
    return {format_number(temperature_out(spec, pt.T)), format_number(pt.t),
            format_number(energy_out(spec, pt.r)),      format_number(energy_out(spec, pt.mu())),
            format_number(pt.psi2),                     format_number(density_out(spec, pt.rho)),
            format_number(pressure_out(spec, pt.P)),    std::string(to_string(pt.regime))};
}

Row isobar_row(const GasSpec& spec, double T, double P) {
    try {
        const auto pt = isobar::solve_gap_isobar(spec, T, P);
        return {format_number(temperature_out(spec, pt.T)), format_number(pt.t_P),
                format_number(energy_out(spec, pt.r)),      format_number(energy_out(spec, -pt.r)),
                format_number(0.0),                         format_number(density_out(spec, pt.rho)),
                format_number(pressure_out(spec, pt.P)),    std::string(to_string(pt.regime))};
    } catch (const CondensedRegion&) {
        return {format_number(temperature_out(spec, T)), "", "", "", "", "", "",
                std::string(to_string(Regime::condensed_boundary))};
    }
}

void write_joined(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out << ',';
        out << fields[i];
    }
    out << '\n';
}

}  // namespace

const std::vector<std::string>& sweep_columns() {
    static const std::vector<std::string> cols = {"T", "t", "r", "mu", "psi2", "rho", "P", "regime"};
    return cols;
}

const std::vector<std::string>& landau_columns() {
    static const std::vector<std::string> cols = {"t", "C_f", "psi2_ordered", "f_disordered", "f_ordered", "mu_asym"};
    return cols;
}

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) x = 0.0;  // drop the sign of negative zero
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void SweepRequest::validate() const {
    spec.validate();
    if (!(constraint.value > 0.0)) throw DomainError("sweep: constraint value must be positive");
    // t_max < t_min gives a descending sweep.
    if (!(t_min > 0.0) || !(t_max > 0.0)) throw DomainError("sweep: temperatures must be positive");
    if (points < 2) throw ConfigError("sweep: at least 2 points are required");
    const auto& all = sweep_columns();
    for (const auto& c : columns) {
        if (std::find(all.begin(), all.end(), c) == all.end()) throw ConfigError("sweep: unknown column '" + c + "'");
    }
}

std::vector<double> SweepRequest::temperatures(double tc) const {
    const double scale = relative ? tc : 1.0;
    std::vector<double> ts(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double f = static_cast<double>(i) / (points - 1);
        const double v = spacing == Spacing::linear ? t_min + (t_max - t_min) * f
                                                    : t_min * std::pow(t_max / t_min, f);
        ts[static_cast<std::size_t>(i)] = v;
    }
    ts.front() = t_min;
    ts.back() = t_max;
    for (double& v : ts) v *= scale;
    return ts;
}

void cmd_tc(const GasSpec& spec, const Constraint& constraint, std::ostream& out) {
    spec.validate();
    const bool density = constraint.kind == ConstraintKind::density;
    double tc = 0.0;
    std::string regime = "finite_temperature_BEC";
    try {
        tc = critical_temperature(spec, constraint);
    } catch (const ZeroTemperatureBEC&) {
        regime = std::string(to_string(Regime::zero_T_BEC));
    }
    out << "{\"command\":\"tc\",\"constraint\":" << json_string(density ? "density" : "pressure")
        << ",\"value\":" << format_number(constraint.value) << ",\"d\":" << format_number(spec.d)
        << ",\"sigma\":" << format_number(spec.sigma) << ",\"mass\":" << format_number(spec.mass)
        << ",\"units\":" << json_string(to_string(spec.units))
        << ",\"T_c\":" << format_number(temperature_out(spec, tc)) << ",\"regime\":" << json_string(regime)
        << "}\n";
}

void cmd_sweep(const SweepRequest& request, unsigned threads, std::ostream& out) {
    request.validate();
    const GasSpec& spec = request.spec;
    const double value = to_natural(spec, request.constraint);
    const bool density = request.constraint.kind == ConstraintKind::density;
    const double tc = critical_temperature(spec, request.constraint);
    std::vector<double> temps = request.temperatures(tc);
    if (!request.relative && si(spec)) {
        for (double& T : temps) T = units::temperature_to_natural(T);
    }

    std::vector<Row> rows(temps.size());
    auto compute = [&](std::size_t i) {
        rows[i] = density ? isochore_row(spec, temps[i], value) : isobar_row(spec, temps[i], value);
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(temps.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < temps.size(); ++i) compute(i);
    } else {
        std::vector<std::future<void>> jobs;
        for (unsigned w = 0; w < workers; ++w) {
            jobs.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t i = w; i < temps.size(); i += workers) compute(i);
            }));
        }
        for (auto& j : jobs) j.get();
    }

    const auto& all = sweep_columns();
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (request.columns.empty() ||
            std::find(request.columns.begin(), request.columns.end(), all[i]) != request.columns.end()) {
            picked.push_back(i);
        }
    }
    std::vector<std::string> header;
    for (std::size_t i : picked) header.push_back(all[i]);
    out << kSchemaTag << " columns: ";
    write_joined(out, header);
    write_joined(out, header);
    for (const auto& row : rows) {
        std::vector<std::string> fields;
        for (std::size_t i : picked) fields.push_back(row[i]);
        write_joined(out, fields);
    }
}

void cmd_landau(const GasSpec& spec, double rho, const std::vector<double>& ts, std::ostream& out) {
    spec.validate();
    if (!(rho > 0.0)) throw DomainError("landau: density must be positive");
    if (ts.empty()) throw DomainError("landau: at least one reduced temperature is required");
    const double rho_nat = to_natural(spec, {ConstraintKind::density, rho});

    // Build every model first so an unsupported regime aborts before output.
    std::vector<critical::LandauModel> models;
    for (double t : ts) models.push_back(critical::make_landau_model(spec, rho_nat, t));

    out << kSchemaTag << " landau columns: ";
    write_joined(out, landau_columns());
    write_joined(out, landau_columns());
    for (const auto& m : models) {
        const double psi2 = critical::ordered_root_psi2(m);
        const double psi = std::sqrt(psi2);
        Row row;
        row.push_back(format_number(m.t));
        row.push_back(format_number(pressure_out(spec, m.C_f)));
        row.push_back(format_number(psi2));
        row.push_back(m.t >= 0.0 ? format_number(pressure_out(spec, critical::landau_free_energy(m, 0.0))) : "");
        row.push_back(m.t <= 0.0 ? format_number(pressure_out(spec, critical::landau_free_energy(m, psi))) : "");
        row.push_back(format_number(energy_out(spec, critical::chemical_potential_asymptotic(m, psi))));
        write_joined(out, row);
    }
}

int cmd_verify(verify::Level level, unsigned threads, std::ostream& out) {
    const auto results = verify::run_all(level, threads);
    std::size_t failed = 0;
    for (const auto& r : results) {
        if (!r.passed) ++failed;
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << ": " << r.detail
            << " (measured " << format_number(r.measured) << ", limit " << format_number(r.threshold) << ")\n";
    }
    out << (failed == 0 ? "verify: all " : "verify: ") << (results.size() - failed) << '/' << results.size()
        << " checks passed\n";
    return failed == 0 ? 0 : 1;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ConfigError*>(&e) != nullptr) return 4;
    if (dynamic_cast<const ConvergenceError*>(&e) != nullptr) return 3;
    if (dynamic_cast<const Error*>(&e) != nullptr) return 2;
    return 1;
}

}  // namespace bose::cli
