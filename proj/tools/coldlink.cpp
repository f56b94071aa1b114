#include "coldlink/constants.hpp"
#include "coldlink/errors.hpp"
#include "coldlink/io_format.hpp"
#include "coldlink/netlist.hpp"
#include "coldlink/quantizer.hpp"
#include "coldlink/scenario.hpp"
#include "coldlink/units.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace coldlink;

struct CommonFlags {
    std::string mode;
    int points = 0;
    double span_bw = 0.0;
    std::string output;
    std::string format;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--mode", flags.mode, "Solver mode: full or single-pass")
        ->check(CLI::IsMember({"full", "single-pass"}));
    cmd->add_option("--points", flags.points, "Frequency grid point count (odd)");
    cmd->add_option("--span-bw", flags.span_bw, "Grid half-span in pulse bandwidths");
    cmd->add_option("--output", flags.output, "Output path (default from config, else stdout)");
    cmd->add_option("--format", flags.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

ScenarioConfig load_config(const std::string& path, const CommonFlags& flags) {
    ScenarioConfig config = ScenarioConfig::parse_file(path);
    if (!flags.mode.empty())
        config.mode = flags.mode == "full" ? SolverMode::Full : SolverMode::SinglePass;
    if (flags.points > 0) config.points = flags.points;
    if (flags.span_bw > 0.0) config.span_bw = flags.span_bw;
    if (!flags.output.empty()) config.output_path = flags.output;
    if (!flags.format.empty())
        config.format = flags.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    return config;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot open output file '" + path + "'");
    out << text;
    std::cerr << "wrote " << path << "\n";
}

void print_warnings(const LinkReport& report) {
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
}

int cmd_run(const std::string& config_path, const CommonFlags& flags,
            const std::string& dump_response_path) {
    ScenarioConfig config = load_config(config_path, flags);
    if (config.axis != SweepAxis::None) {
        std::cerr << "config has a sweep axis; running sweep\n";
        const LinkReport report = run_sweep(config);
        print_warnings(report);
        emit(report.serialize(), config.output_path);
        return 0;
    }
    const LinkReport report = run_point(config);
    print_warnings(report);
    if (!dump_response_path.empty()) {
        const auto resolved = config.resolve();
        const NetworkResponse resp = assemble_link(resolved.transducer, resolved.cable,
                                                   resolved.transducer, resolved.grid,
                                                   config.mode);
        std::ofstream out(dump_response_path, std::ios::binary);
        if (!out) throw error("cannot open '" + dump_response_path + "'");
        dump_response_csv(resp, out);
        std::cerr << "wrote " << dump_response_path << "\n";
    }
    emit(report.serialize(), config.output_path);
    return 0;
}

int cmd_sweep(const std::string& config_path, const CommonFlags& flags) {
    ScenarioConfig config = load_config(config_path, flags);
    const LinkReport report = run_sweep(config);
    print_warnings(report);
    emit(report.serialize(), config.output_path);
    return 0;
}

int cmd_check(const std::string& config_path, const CommonFlags& flags) {
    const ScenarioConfig config = load_config(config_path, flags);
    const CheckReport report = check(config);
    std::cout << report.to_text();
    return report.ok() ? 0 : 2;
}

int cmd_quantize(const std::string& netlist_path, bool as_json) {
    using namespace coldlink::constants;
    const Netlist netlist = Netlist::parse_file(netlist_path);
    const ModeSolution solution = quantize_netlist(netlist);
    for (const auto& w : solution.warnings) std::cerr << "warning: " << w << "\n";

    // Optional [pump] section in the netlist file drives a coupling-rate
    // estimate between the two lowest modes (or explicit indices).
    std::optional<PumpSpec> pump;
    int a_idx = 0, b_idx = 1;
    {
        std::ifstream in(netlist_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        std::istringstream lines(buffer.str());
        std::string line;
        bool in_pump = false;
        while (std::getline(lines, line)) {
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            const std::string s = units::trim(line);
            if (s.empty()) continue;
            if (s.front() == '[') {
                in_pump = s == "[pump]";
                continue;
            }
            if (!in_pump) continue;
            const auto eq = s.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = units::trim(s.substr(0, eq));
            const std::string value = units::trim(s.substr(eq + 1));
            if (!pump) pump = PumpSpec{};
            if (key == "epsilon_over_pi")
                pump->epsilon_p =
                    pi * units::parse_value(value, units::Dimension::Dimensionless);
            else if (key == "beta")
                pump->beta = units::parse_value(value, units::Dimension::Dimensionless);
            else if (key == "a_mode_index")
                a_idx = static_cast<int>(
                    units::parse_value(value, units::Dimension::Dimensionless));
            else if (key == "b_mode_index")
                b_idx = static_cast<int>(
                    units::parse_value(value, units::Dimension::Dimensionless));
            else
                throw config_error("[pump] unknown key '" + key + "'");
        }
    }

    if (as_json) {
        std::ostringstream out;
        out << "{\"modes\":[";
        for (std::size_t k = 0; k < solution.modes.size(); ++k) {
            const auto& m = solution.modes[k];
            if (k) out << ',';
            out << "{\"f_hz\":" << io::format_double(m.omega / two_pi)
                << ",\"phi_zpf\":" << io::format_double(m.phi_zpf)
                << ",\"impedance_ohm\":" << io::format_double(m.impedance) << "}";
        }
        out << "],\"dropped_zero_modes\":" << solution.dropped_zero_modes;
        if (pump && static_cast<int>(solution.modes.size()) > std::max(a_idx, b_idx)) {
            const double g = coupling_rate(netlist.junction_branch().value, *pump,
                                           solution.modes[a_idx].phi_zpf,
                                           solution.modes[b_idx].phi_zpf);
            out << ",\"g_hz\":" << io::format_double(g / two_pi);
        }
        out << "}";
        std::cout << out.str() << "\n";
        return 0;
    }

    std::cout << "mode  f [GHz]         phi_zpf        Z [ohm]\n";
    for (std::size_t k = 0; k < solution.modes.size(); ++k) {
        const auto& m = solution.modes[k];
        std::cout << k << "     " << io::format_double(m.omega / two_pi / 1e9) << "  "
                  << io::format_double(m.phi_zpf) << "  " << io::format_double(m.impedance)
                  << "\n";
    }
    if (solution.dropped_zero_modes > 0)
        std::cout << "(" << solution.dropped_zero_modes << " zero-frequency mode(s) excluded)\n";
    if (pump && static_cast<int>(solution.modes.size()) > std::max(a_idx, b_idx)) {
        const double g = coupling_rate(netlist.junction_branch().value, *pump,
                                       solution.modes[a_idx].phi_zpf,
                                       solution.modes[b_idx].phi_zpf);
        std::cout << "g/2pi = " << io::format_double(g / two_pi / 1e6) << " MHz (modes "
                  << a_idx << " -> " << b_idx << ")\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coldlink: frequency-domain link budget for a transducer-coax-transducer "
                 "quantum channel"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string config_path;
    std::string netlist_path;
    std::string dump_response_path;
    bool quantize_json = false;

    auto* run = app.add_subcommand("run", "Evaluate a single scenario point");
    run->add_option("config", config_path, "Scenario config file")->required();
    run->add_option("--dump-response", dump_response_path,
                    "Also write the per-frequency network response CSV");
    add_common_flags(run, flags);

    auto* sweep = app.add_subcommand("sweep", "Evaluate a scenario sweep");
    sweep->add_option("config", config_path, "Scenario config file")->required();
    add_common_flags(sweep, flags);

    auto* chk = app.add_subcommand("check", "Self-validate a scenario config");
    chk->add_option("config", config_path, "Scenario config file")->required();
    add_common_flags(chk, flags);

    auto* quant = app.add_subcommand("quantize", "Quantize a netlist into normal modes");
    quant->add_option("netlist", netlist_path, "Netlist file")->required();
    quant->add_flag("--json", quantize_json, "Emit JSON instead of a table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path, flags, dump_response_path);
        if (sweep->parsed()) return cmd_sweep(config_path, flags);
        if (chk->parsed()) return cmd_check(config_path, flags);
        if (quant->parsed()) return cmd_quantize(netlist_path, quantize_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
