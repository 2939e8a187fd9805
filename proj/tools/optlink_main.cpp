#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "optlink/config.hpp"
#include "optlink/fiber.hpp"
#include "optlink/fso.hpp"
#include "optlink/presets.hpp"
#include "optlink/sweep.hpp"

// optlink: wireless (free-space) and wire (fiber) optical link calculator.
//
// Exit codes: 0 success, 1 model/config domain error (message on stderr,
// nothing on stdout), 2 usage error.

namespace {

using namespace optlink;
using nlohmann::ordered_json;

struct GlobalOpts {
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
};

presets::PresetInputs resolve_inputs(const GlobalOpts& g) {
    if (g.config_path.empty()) {
        return config::default_config();
    }
    return config::load_config(g.config_path);
}

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.out_path, std::ios::binary);
    if (!out) {
        throw std::domain_error("cannot open output file '" + g.out_path + "'");
    }
    out << text;
}

std::string render(const GlobalOpts& g, const ordered_json& record) {
    if (g.format == "json") {
        return record.dump(2) + "\n";
    }
    std::string header;
    std::string row;
    bool first = true;
    for (const auto& [key, value] : record.items()) {
        if (!first) {
            header += ',';
            row += ',';
        }
        first = false;
        header += key;
        if (value.is_number_float()) {
            row += sweep::format_double(value.get<double>());
        } else if (value.is_boolean()) {
            row += value.get<bool>() ? "true" : "false";
        } else {
            row += value.get<std::string>();
        }
    }
    return header + "\n" + row + "\n";
}

int run_fso_budget(const GlobalOpts& g, double length_km) {
    detail::check_positive(length_km, "link length in km");
    const auto in = resolve_inputs(g);
    const auto loss =
        atmosphere::total_path_loss(in.weather, in.fso.lambda, in.lambda0, length_km);
    const double geometric = fso::capped_geometric_factor(in.fso, length_km);
    // budget composed in dB so deep fades cannot underflow
    const double received_dbm = in.fso.tx_power.dbm() +
                                10.0 * std::log10(in.fso.optics_efficiency * geometric) -
                                loss.total_db;
    const double margin_db = received_dbm - in.fso.rx_sensitivity.dbm();

    ordered_json rec;
    rec["length_km"] = length_km;
    rec["fog_db"] = loss.fog_db;
    rec["rain_db"] = loss.rain_db;
    rec["snow_db"] = loss.snow_db;
    rec["scintillation_db"] = loss.scintillation_db;
    rec["total_loss_db"] = loss.total_db;
    rec["geometric_factor"] = geometric;
    rec["received_dbm"] = received_dbm;
    rec["received_w"] = power_watts_from_dbm(received_dbm);
    rec["sensitivity_dbm"] = in.fso.rx_sensitivity.dbm();
    rec["margin_db"] = margin_db;
    emit(g, render(g, rec));
    return 0;
}

int run_fso_max_distance(const GlobalOpts& g) {
    const auto in = resolve_inputs(g);
    const double km = fso::max_fso_distance_km(in.fso, in.weather, in.lambda0);
    ordered_json rec;
    rec["max_distance_km"] = km;
    rec["status"] = km == 0.0 ? "never_closes" : (km == 100.0 ? "cap_reached" : "ok");
    emit(g, render(g, rec));
    return 0;
}

int run_fso_capacity(const GlobalOpts& g, double freq_ghz, double length_km, bool amplified) {
    resolve_inputs(g);  // validates any provided config
    double osnr_db = fso::osnr_from_distance_db(length_km);
    if (amplified) {
        osnr_db += fso::rf_transmission_db(freq_ghz, true) -
                   fso::rf_transmission_db(freq_ghz, false);
    }
    ordered_json rec;
    rec["freq_ghz"] = freq_ghz;
    rec["length_km"] = length_km;
    rec["amplified"] = amplified;
    rec["osnr_db"] = osnr_db;
    rec["capacity_bps"] = fso::capacity_vs_rf_bps(freq_ghz, length_km, amplified);
    emit(g, render(g, rec));
    return 0;
}

int run_fiber_limits(const GlobalOpts& g) {
    const auto in = resolve_inputs(g);
    const auto report = fiber::fiber_link_limits(in.fiber);
    ordered_json rec;
    rec["attenuation_limited_km"] = report.attenuation_limited_km;
    rec["pmd_limited_km"] = report.pmd_limited_km;
    rec["rise_time_limited_km"] = report.rise_time_limited_km;
    rec["overall_km"] = report.overall_km;
    rec["limiting_factor"] = fiber::to_string(report.limiting_factor);
    rec["attenuation_closes"] = report.attenuation_closes;
    rec["rise_time_unbounded"] = report.rise_time_unbounded;
    emit(g, render(g, rec));
    return 0;
}

int run_fiber_rise_time(const GlobalOpts& g, double length_km) {
    const auto in = resolve_inputs(g);
    const auto c = fiber::rise_time_components(in.fiber, length_km);
    const auto b = fiber::system_rise_time(c, in.fiber.bit_rate_bps, in.fiber.coding);
    ordered_json rec;
    rec["length_km"] = length_km;
    rec["t_tx_ns"] = b.t_tx_ns;
    rec["t_rx_ns"] = b.t_rx_ns;
    rec["t_mod_ns"] = b.t_mod_ns;
    rec["t_gvd_ns"] = b.t_gvd_ns;
    rec["t_sys_ns"] = b.t_sys_ns;
    rec["budget_ns"] = b.budget_ns;
    rec["passes"] = b.passes;
    rec["dispersion_factor"] =
        fiber::chromatic_dispersion_factor(in.fiber.lambda, in.fiber.bit_rate_bps, length_km,
                                           in.fiber.dispersion_ns_per_nm_km * 1e3);
    emit(g, render(g, rec));
    return 0;
}

int run_sweep_cmd(const GlobalOpts& g, const std::string& figure) {
    const auto id = presets::parse_figure_id(figure);
    if (!id) {
        throw std::domain_error("unknown figure '" + figure + "' (expected fig5..fig14)");
    }
    const auto in = resolve_inputs(g);
    const auto spec = presets::figure_preset(*id, in);
    const auto table = sweep::run_sweep(spec);
    emit(g, sweep::to_csv(table));
    const auto report = sweep::check_trends(table, spec.expectations);
    std::cerr << sweep::format_trend_report(table, report);
    return 0;
}

int run_defaults(const GlobalOpts& g) {
    emit(g, config::to_json(config::default_config()));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Digital wireless (FSO) and wire (fiber) optical link calculator"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    GlobalOpts g;
    app.add_option("--config", g.config_path, "JSON config file merged over built-in defaults");
    app.add_option("--out", g.out_path, "write output to a file instead of stdout");
    app.add_option("--format", g.format, "output format for single-point results")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* fso_cmd = app.add_subcommand("fso", "wireless optical link computations");
    fso_cmd->require_subcommand(1);

    double budget_length_km = 1.0;
    auto* budget_cmd = fso_cmd->add_subcommand("budget", "path-loss breakdown and link margin");
    budget_cmd->add_option("--length", budget_length_km, "link length in km")->required();

    auto* maxd_cmd =
        fso_cmd->add_subcommand("max-distance", "longest distance at which the link closes");

    double cap_freq_ghz = 1.0;
    double cap_length_km = 1.0;
    bool cap_amplified = false;
    auto* cap_cmd = fso_cmd->add_subcommand("capacity", "Shannon capacity of the RF-over-FSO link");
    cap_cmd->add_option("--freq", cap_freq_ghz, "carrier frequency in GHz")->required();
    cap_cmd->add_option("--length", cap_length_km, "link length in km")->required();
    cap_cmd->add_flag("--amplified", cap_amplified, "apply the amplified transmission response");

    auto* fiber_cmd = app.add_subcommand("fiber", "wire optical link computations");
    fiber_cmd->require_subcommand(1);

    auto* limits_cmd = fiber_cmd->add_subcommand("limits", "attenuation/PMD/rise-time span limits");

    double rt_length_km = 1.0;
    auto* rt_cmd = fiber_cmd->add_subcommand("rise-time", "rise-time budget at a given span");
    rt_cmd->add_option("--length", rt_length_km, "span length in km")->required();

    std::string sweep_figure;
    auto* sweep_cmd = app.add_subcommand("sweep", "run a preset parameter sweep (CSV to stdout, "
                                                  "trend report to stderr)");
    sweep_cmd->add_option("--figure", sweep_figure, "preset id, fig5..fig14")->required();

    bool defaults_show = false;
    auto* defaults_cmd = app.add_subcommand("defaults", "built-in configuration");
    defaults_cmd->add_flag("--show", defaults_show, "print the default config document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (budget_cmd->parsed()) {
            return run_fso_budget(g, budget_length_km);
        }
        if (maxd_cmd->parsed()) {
            return run_fso_max_distance(g);
        }
        if (cap_cmd->parsed()) {
            return run_fso_capacity(g, cap_freq_ghz, cap_length_km, cap_amplified);
        }
        if (limits_cmd->parsed()) {
            return run_fiber_limits(g);
        }
        if (rt_cmd->parsed()) {
            return run_fiber_rise_time(g, rt_length_km);
        }
        if (sweep_cmd->parsed()) {
            return run_sweep_cmd(g, sweep_figure);
        }
        if (defaults_cmd->parsed()) {
            return run_defaults(g);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
