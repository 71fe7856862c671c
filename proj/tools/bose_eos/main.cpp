// bose-eos: critical temperatures, equation-of-state sweeps, Landau tables
// and the oracle verification suite for the ideal Bose gas with dispersion
// eps(k) = hbar^2 k^sigma / 2m.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "bose/errors.hpp"
#include "commands.hpp"
#include "config.hpp"

namespace {

using bose::ConfigError;
using bose::cli::KeyValues;

// A flag value wins over the config file, which wins over the default.
class Resolver {
public:
    explicit Resolver(KeyValues config) : config_(std::move(config)) {}

    template <typename T>
    T get(const CLI::Option* opt, const T& flag_value, const std::string& key, const T& fallback) {
        used_.insert(key);
        if (opt->count() > 0) return flag_value;
        const auto it = config_.find(key);
        if (it == config_.end()) return fallback;
        return parse<T>(key, it->second);
    }

    bool has(const CLI::Option* opt, const std::string& key) {
        used_.insert(key);
        return opt->count() > 0 || config_.count(key) > 0;
    }

    void reject_unknown() const {
        for (const auto& [key, value] : config_) {
            if (used_.count(key) == 0) throw ConfigError("config: key '" + key + "' is not valid for this command");
        }
    }

private:
    template <typename T>
    static T parse(const std::string& key, const std::string& text) {
        if constexpr (std::is_same_v<T, std::string>) {
            return text;
        } else if constexpr (std::is_same_v<T, bool>) {
            if (text == "true" || text == "1") return true;
            if (text == "false" || text == "0") return false;
            throw ConfigError("config: key '" + key + "' expects true/false");
        } else if constexpr (std::is_same_v<T, std::vector<std::string>> || std::is_same_v<T, std::vector<double>>) {
            T out;
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) out.push_back(parse<typename T::value_type>(key, item));
            return out;
        } else {
            T v{};
            std::istringstream in(text);
            in.imbue(std::locale::classic());
            in >> v;
            if (in.fail() || !(in >> std::ws).eof()) {
                throw ConfigError("config: key '" + key + "' has invalid value '" + text + "'");
            }
            return v;
        }
    }

    KeyValues config_;
    std::set<std::string> used_;
};

struct GasFlags {
    double d = 3.0;
    double sigma = 2.0;
    double mass = 1.0;
    std::string units = "natural";
    CLI::Option* d_opt = nullptr;
    CLI::Option* sigma_opt = nullptr;
    CLI::Option* mass_opt = nullptr;
    CLI::Option* units_opt = nullptr;

    void attach(CLI::App* app) {
        d_opt = app->add_option("--d", d, "spatial dimension (real, > 0)");
        sigma_opt = app->add_option("--sigma", sigma, "dispersion exponent in (0, 2]");
        mass_opt = app->add_option("--mass", mass, "particle mass (natural units, or kg with --units si)");
        units_opt = app->add_option("--units", units, "natural | si");
    }

    bose::GasSpec resolve(Resolver& r) const {
        bose::GasSpec spec;
        spec.d = r.get(d_opt, d, "d", 3.0);
        spec.sigma = r.get(sigma_opt, sigma, "sigma", 2.0);
        spec.mass = r.get(mass_opt, mass, "mass", 1.0);
        try {
            spec.units = bose::parse_unit_system(r.get(units_opt, units, "units", std::string("natural")));
        } catch (const bose::DomainError& e) {
            throw ConfigError(e.what());
        }
        return spec;
    }
};

struct ConstraintFlags {
    double density = 0.0;
    double pressure = 0.0;
    CLI::Option* density_opt = nullptr;
    CLI::Option* pressure_opt = nullptr;

    void attach(CLI::App* app) {
        density_opt = app->add_option("--density", density, "number density (constant-density constraint)");
        pressure_opt = app->add_option("--pressure", pressure, "pressure (constant-pressure constraint)");
    }

    bose::cli::Constraint resolve(Resolver& r) const {
        const bool has_density = r.has(density_opt, "density");
        const bool has_pressure = r.has(pressure_opt, "pressure");
        if (has_density == has_pressure) throw ConfigError("exactly one of --density / --pressure is required");
        if (has_density) return {bose::cli::ConstraintKind::density, r.get(density_opt, density, "density", 0.0)};
        return {bose::cli::ConstraintKind::pressure, r.get(pressure_opt, pressure, "pressure", 0.0)};
    }
};

unsigned default_threads() {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    return bose::cli::thread_cap(std::getenv("BOSE_EOS_THREADS"), hw);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ideal Bose gas thermodynamics with generalized dispersion"};
    app.name("bose-eos");
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "flat 'key = value' file mirroring the flags (flags win)");

    GasFlags gas;
    ConstraintFlags constraint;

    auto* tc = app.add_subcommand("tc", "critical temperature at fixed density or pressure (JSON)");
    gas.attach(tc);
    constraint.attach(tc);

    auto* sweep = app.add_subcommand("sweep", "isochore/isobar temperature sweep (CSV)");
    GasFlags sweep_gas;
    ConstraintFlags sweep_constraint;
    sweep_gas.attach(sweep);
    sweep_constraint.attach(sweep);
    double tmin = 0.5;
    double tmax = 2.0;
    int points = 16;
    std::string spacing = "linear";
    bool relative = false;
    std::vector<std::string> columns;
    auto* tmin_opt = sweep->add_option("--tmin", tmin, "lowest temperature");
    auto* tmax_opt = sweep->add_option("--tmax", tmax, "highest temperature");
    auto* points_opt = sweep->add_option("--points", points, "number of temperatures (>= 2)");
    auto* spacing_opt = sweep->add_option("--spacing", spacing, "linear | log");
    auto* relative_opt = sweep->add_flag("--relative", relative, "temperatures in units of T_c");
    auto* columns_opt = sweep->add_option("--columns", columns, "comma-separated column subset")->delimiter(',');

    auto* landau = app.add_subcommand("landau", "Landau free-energy table at constant density (CSV)");
    GasFlags landau_gas;
    landau_gas.attach(landau);
    double landau_rho = 1.0;
    std::vector<double> t_list;
    auto* landau_rho_opt = landau->add_option("--density", landau_rho, "number density");
    auto* t_opt = landau->add_option("--t", t_list, "comma-separated reduced temperatures")->delimiter(',');

    auto* verify = app.add_subcommand("verify", "run the cross-module oracle checks");
    bool quick = false;
    bool full = false;
    auto* quick_opt = verify->add_flag("--quick", quick, "fast subset (default)");
    auto* full_opt = verify->add_flag("--full", full, "include the long finite-size sweeps");
    quick_opt->excludes(full_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 4;
    }

    try {
        Resolver resolver(config_path.empty() ? KeyValues{} : bose::cli::load_config(config_path));
        const unsigned threads = default_threads();

        if (tc->parsed()) {
            const auto spec = gas.resolve(resolver);
            const auto c = constraint.resolve(resolver);
            resolver.reject_unknown();
            bose::cli::cmd_tc(spec, c, std::cout);
        } else if (sweep->parsed()) {
            bose::cli::SweepRequest req;
            req.spec = sweep_gas.resolve(resolver);
            req.constraint = sweep_constraint.resolve(resolver);
            req.t_min = resolver.get(tmin_opt, tmin, "tmin", 0.5);
            req.t_max = resolver.get(tmax_opt, tmax, "tmax", 2.0);
            req.points = resolver.get(points_opt, points, "points", 16);
            const auto sp = resolver.get(spacing_opt, spacing, "spacing", std::string("linear"));
            if (sp != "linear" && sp != "log") throw ConfigError("--spacing must be linear or log");
            req.spacing = sp == "log" ? bose::cli::Spacing::log : bose::cli::Spacing::linear;
            req.relative = resolver.get(relative_opt, relative, "relative", false);
            req.columns = resolver.get(columns_opt, columns, "columns", std::vector<std::string>{});
            resolver.reject_unknown();
            std::ostringstream buf;
            bose::cli::cmd_sweep(req, threads, buf);
            std::cout << buf.str();
        } else if (landau->parsed()) {
            const auto spec = landau_gas.resolve(resolver);
            const double rho = resolver.get(landau_rho_opt, landau_rho, "density", 1.0);
            const auto ts = resolver.get(t_opt, t_list, "t", std::vector<double>{});
            resolver.reject_unknown();
            std::ostringstream buf;
            bose::cli::cmd_landau(spec, rho, ts, buf);
            std::cout << buf.str();
        } else if (verify->parsed()) {
            std::string level = full ? "full" : "quick";
            if (quick_opt->count() == 0 && full_opt->count() == 0) {
                level = resolver.get(quick_opt, std::string("quick"), "level", std::string("quick"));
            }
            if (level != "quick" && level != "full") throw ConfigError("verify level must be quick or full");
            resolver.reject_unknown();
            return bose::cli::cmd_verify(level == "full" ? bose::verify::Level::full : bose::verify::Level::quick,
                                         threads, std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "bose-eos: " << e.what() << '\n';
        return bose::cli::exit_code_for(e);
    }
    return 0;
}
