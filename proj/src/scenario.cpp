#include "coldlink/scenario.hpp"

#include "coldlink/constants.hpp"
#include "coldlink/errors.hpp"
#include "coldlink/io_format.hpp"
#include "coldlink/units.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace coldlink {

using namespace constants;
namespace fs = std::filesystem;

namespace {

struct IniFile {
    // section -> key -> (value, consumed flag)
    std::map<std::string, std::map<std::string, std::pair<std::string, bool>>> sections;

    static IniFile parse(const std::string& text) {
        IniFile ini;
        std::istringstream in(text);
        std::string line, section;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            if (auto semi = line.find(';'); semi != std::string::npos) line.erase(semi);
            const std::string s = units::trim(line);
            if (s.empty()) continue;
            if (s.front() == '[') {
                if (s.back() != ']')
                    throw config_error("line " + std::to_string(line_no) +
                                       ": unterminated section header");
                section = units::trim(s.substr(1, s.size() - 2));
                ini.sections[section];
                continue;
            }
            const auto eq = s.find('=');
            if (eq == std::string::npos)
                throw config_error("line " + std::to_string(line_no) + ": expected key = value");
            const std::string key = units::trim(s.substr(0, eq));
            const std::string value = units::trim(s.substr(eq + 1));
            if (section.empty())
                throw config_error("line " + std::to_string(line_no) + ": key '" + key +
                                   "' outside any [section]");
            ini.sections[section][key] = {value, false};
        }
        return ini;
    }

    std::optional<std::string> take(const std::string& section, const std::string& key) {
        auto sit = sections.find(section);
        if (sit == sections.end()) return std::nullopt;
        auto kit = sit->second.find(key);
        if (kit == sit->second.end()) return std::nullopt;
        kit->second.second = true;
        return kit->second.first;
    }

    std::vector<std::string> unconsumed() const {
        std::vector<std::string> out;
        for (const auto& [section, keys] : sections)
            for (const auto& [key, entry] : keys)
                if (!entry.second) out.push_back("[" + section + "] " + key);
        return out;
    }
};

double take_value(IniFile& ini, const std::string& section, const std::string& key,
                  units::Dimension dim, double fallback) {
    const auto raw = ini.take(section, key);
    if (!raw) return fallback;
    try {
        return units::parse_value(*raw, dim);
    } catch (const config_error& e) {
        throw config_error("[" + section + "] " + key + ": " + e.what());
    }
}

std::optional<double> take_optional(IniFile& ini, const std::string& section,
                                    const std::string& key, units::Dimension dim) {
    const auto raw = ini.take(section, key);
    if (!raw) return std::nullopt;
    try {
        return units::parse_value(*raw, dim);
    } catch (const config_error& e) {
        throw config_error("[" + section + "] " + key + ": " + e.what());
    }
}

bool take_bool(IniFile& ini, const std::string& section, const std::string& key,
               bool fallback) {
    const auto raw = ini.take(section, key);
    if (!raw) return fallback;
    if (*raw == "true" || *raw == "1" || *raw == "yes") return true;
    if (*raw == "false" || *raw == "0" || *raw == "no") return false;
    throw config_error("[" + section + "] " + key + ": expected true/false, got '" + *raw + "'");
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::string t = units::trim(item);
        if (!t.empty()) out.push_back(t);
    }
    return out;
}

} // namespace

ScenarioConfig ScenarioConfig::parse(const std::string& text, const std::string& source_path) {
    IniFile ini = IniFile::parse(text);
    ScenarioConfig cfg;
    cfg.source_path = source_path;
    std::vector<std::string> errors;

    // [cable]
    if (auto table = ini.take("cable", "Qi_table")) {
        if (ini.take("cable", "Qi"))
            errors.push_back("[cable] Qi and Qi_table are mutually exclusive");
        std::vector<std::pair<double, double>> entries;
        for (const auto& item : split_list(*table)) {
            const auto colon = item.find(':');
            if (colon == std::string::npos) {
                errors.push_back("[cable] Qi_table: expected 'freq: Qi' pairs");
                break;
            }
            try {
                entries.emplace_back(
                    units::parse_value(item.substr(0, colon), units::Dimension::Frequency),
                    units::parse_value(item.substr(colon + 1), units::Dimension::Dimensionless));
            } catch (const config_error& e) {
                errors.push_back(std::string("[cable] Qi_table: ") + e.what());
            }
        }
        if (!entries.empty()) cfg.cable.qi = QiModel(std::move(entries));
    } else {
        cfg.cable.qi =
            QiModel(take_value(ini, "cable", "Qi", units::Dimension::Dimensionless, 1e5));
    }
    cfg.cable.length_m = take_value(ini, "cable", "length", units::Dimension::Length, 100.0);
    cfg.cable.eps_r = take_value(ini, "cable", "eps_r", units::Dimension::Dimensionless, 1.7);
    cfg.cable.temperature_k =
        take_value(ini, "cable", "temperature", units::Dimension::Temperature, 0.01);

    // [transducer]
    if (auto netlist = ini.take("transducer", "netlist")) {
        cfg.netlist_path = *netlist;
        if (!cfg.netlist_path.empty() && !fs::path(cfg.netlist_path).is_absolute() &&
            !source_path.empty())
            cfg.netlist_path = (fs::path(source_path).parent_path() / cfg.netlist_path).string();
        cfg.pump.epsilon_p = pi * take_value(ini, "transducer", "pump_epsilon_over_pi",
                                             units::Dimension::Dimensionless, 0.03);
        cfg.pump.beta =
            take_value(ini, "transducer", "pump_beta", units::Dimension::Dimensionless, 6.0);
        cfg.pump.detuning = two_pi * take_value(ini, "transducer", "pump_detuning",
                                                units::Dimension::Frequency, 0.0);
        cfg.a_mode_index = static_cast<int>(take_value(
            ini, "transducer", "a_mode_index", units::Dimension::Dimensionless, 0.0));
        cfg.b_mode_index = static_cast<int>(take_value(
            ini, "transducer", "b_mode_index", units::Dimension::Dimensionless, 1.0));
    }
    cfg.f_a_hz = take_value(ini, "transducer", "f_a", units::Dimension::Frequency, cfg.f_a_hz);
    cfg.f_b_hz = take_value(ini, "transducer", "f_b", units::Dimension::Frequency, cfg.f_b_hz);
    cfg.g_hz = take_value(ini, "transducer", "g", units::Dimension::Frequency, cfg.g_hz);
    cfg.kappa_a_ext_hz =
        take_value(ini, "transducer", "kappa_a_ext", units::Dimension::Frequency, 0.0);
    cfg.kappa_b_ext_hz =
        take_value(ini, "transducer", "kappa_b_ext", units::Dimension::Frequency, 0.0);
    cfg.qi_a = take_optional(ini, "transducer", "Qi_a", units::Dimension::Dimensionless);
    cfg.kappa_a_int_hz =
        take_optional(ini, "transducer", "kappa_a_int", units::Dimension::Frequency);
    cfg.kappa_b_int_hz =
        take_value(ini, "transducer", "kappa_b_int", units::Dimension::Frequency, 50e3);
    cfg.transducer_temperature_k =
        take_value(ini, "transducer", "temperature", units::Dimension::Temperature, 0.01);
    cfg.b_bath_vacuum = take_bool(ini, "transducer", "b_bath_vacuum", true);

    // [pulse]
    cfg.bandwidth_hz = take_optional(ini, "pulse", "bandwidth", units::Dimension::Frequency);
    cfg.bw_over_g =
        take_value(ini, "pulse", "bw_over_g", units::Dimension::Dimensionless, cfg.bw_over_g);
    cfg.center_hz = take_value(ini, "pulse", "center", units::Dimension::Frequency, 0.0);
    cfg.points = static_cast<int>(
        take_value(ini, "pulse", "points", units::Dimension::Dimensionless, 4097.0));
    cfg.span_bw =
        take_value(ini, "pulse", "span_bw", units::Dimension::Dimensionless, 8.0);

    // [solver]
    if (auto mode = ini.take("solver", "mode")) {
        if (*mode == "full") cfg.mode = SolverMode::Full;
        else if (*mode == "single-pass") cfg.mode = SolverMode::SinglePass;
        else errors.push_back("[solver] mode: expected 'full' or 'single-pass', got '" + *mode +
                              "'");
    }

    // [sweep]
    if (auto axis = ini.take("sweep", "axis")) {
        units::Dimension dim = units::Dimension::Dimensionless;
        if (*axis == "f_a") {
            cfg.axis = SweepAxis::ModeFrequencyA;
            dim = units::Dimension::Frequency;
        } else if (*axis == "T_cable") {
            cfg.axis = SweepAxis::CableTemperature;
            dim = units::Dimension::Temperature;
        } else if (*axis == "L_over_Qi") {
            cfg.axis = SweepAxis::LengthOverQi;
            dim = units::Dimension::Length;
        } else {
            errors.push_back("[sweep] axis: expected f_a, T_cable, or L_over_Qi, got '" + *axis +
                             "'");
        }
        if (auto values = ini.take("sweep", "values")) {
            for (const auto& item : split_list(*values)) {
                try {
                    cfg.sweep_values.push_back(units::parse_value(item, dim));
                } catch (const config_error& e) {
                    errors.push_back(std::string("[sweep] values: ") + e.what());
                }
            }
            if (cfg.sweep_values.empty()) errors.push_back("[sweep] values: empty list");
        } else {
            errors.push_back("[sweep] values: required when axis is set");
        }
    } else if (ini.take("sweep", "values")) {
        errors.push_back("[sweep] axis: required when values are set");
    }

    // [output]
    if (auto path = ini.take("output", "path")) cfg.output_path = *path;
    if (auto format = ini.take("output", "format")) {
        if (*format == "csv") cfg.format = OutputFormat::Csv;
        else if (*format == "json") cfg.format = OutputFormat::Json;
        else errors.push_back("[output] format: expected csv or json, got '" + *format + "'");
    }

    for (const auto& leftover : ini.unconsumed())
        errors.push_back(leftover + ": unknown key");

    // structural validation
    if (cfg.points < 3 || cfg.points % 2 == 0)
        errors.push_back("[pulse] points: must be odd and >= 3");
    if (cfg.span_bw <= 0.0) errors.push_back("[pulse] span_bw: must be positive");
    if (cfg.qi_a && cfg.kappa_a_int_hz)
        errors.push_back("[transducer] Qi_a and kappa_a_int are mutually exclusive");

    if (!errors.empty()) {
        std::string joined = "invalid scenario configuration:";
        for (const auto& e : errors) joined += "\n  - " + e;
        throw config_error(joined);
    }
    return cfg;
}

ScenarioConfig ScenarioConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path);
}

ScenarioConfig::Resolved ScenarioConfig::resolve(std::optional<double> axis_value) const {
    Resolved r;
    r.cable = cable;

    double f_a = f_a_hz;
    double f_b = f_b_hz;
    double g = two_pi * g_hz;

    if (!netlist_path.empty()) {
        const Netlist netlist = Netlist::parse_file(netlist_path);
        const ModeSolution solution = quantize_netlist(netlist);
        const int n_modes = static_cast<int>(solution.modes.size());
        if (a_mode_index >= n_modes || b_mode_index >= n_modes || a_mode_index < 0 ||
            b_mode_index < 0 || a_mode_index == b_mode_index)
            throw config_error("[transducer] a_mode_index/b_mode_index out of range for " +
                               std::to_string(n_modes) + " quantized modes");
        const Mode& mode_a = solution.modes[a_mode_index];
        const Mode& mode_b = solution.modes[b_mode_index];
        f_a = mode_a.omega / two_pi;
        f_b = mode_b.omega / two_pi;
        g = coupling_rate(netlist.junction_branch().value, pump, mode_a.phi_zpf,
                          mode_b.phi_zpf);
    }

    if (axis_value) {
        r.axis_value = *axis_value;
        switch (axis) {
        case SweepAxis::ModeFrequencyA: f_a = *axis_value; break;
        case SweepAxis::CableTemperature: r.cable.temperature_k = *axis_value; break;
        case SweepAxis::LengthOverQi:
            if (*axis_value <= 0.0) throw config_error("L_over_Qi values must be positive");
            r.cable.qi = QiModel(r.cable.length_m / *axis_value); // Qi swept at fixed L
            break;
        case SweepAxis::None: break;
        }
    }

    TransducerSpec& t = r.transducer;
    t.omega_a = two_pi * f_a;
    t.omega_b = two_pi * f_b;
    t.g = g;
    t.kappa_a_ext = kappa_a_ext_hz > 0.0 ? two_pi * kappa_a_ext_hz : 2.0 * g;
    t.kappa_b_ext = kappa_b_ext_hz > 0.0 ? two_pi * kappa_b_ext_hz : 2.0 * g;
    if (kappa_a_int_hz) t.kappa_a_int = two_pi * *kappa_a_int_hz;
    else t.kappa_a_int = t.omega_a / qi_a.value_or(20e3); // recomputed per sweep point
    t.kappa_b_int = two_pi * kappa_b_int_hz;
    t.temperature_k = transducer_temperature_k;
    t.b_bath_vacuum = b_bath_vacuum;

    r.bandwidth = bandwidth_hz ? two_pi * *bandwidth_hz : bw_over_g * g;
    if (r.bandwidth <= 0.0) throw config_error("[pulse] resolved bandwidth must be positive");
    r.grid = FrequencyGrid::symmetric(span_bw * r.bandwidth, points, t.omega_a, t.omega_b);
    return r;
}

namespace {

ReportRow evaluate_point(const ScenarioConfig& config, std::optional<double> axis_value) {
    const ScenarioConfig::Resolved r = config.resolve(axis_value);
    ReportRow row;
    row.axis_value = r.axis_value;
    row.f_a_hz = r.transducer.omega_a / two_pi;
    row.cable_temperature_k = r.cable.temperature_k;
    row.qi = r.cable.qi.at(row.f_a_hz);
    row.length_m = r.cable.length_m;
    const NetworkResponse resp =
        assemble_link(r.transducer, r.cable, r.transducer, r.grid, config.mode);
    const PulseSpec pulse = gaussian_pulse(r.grid, r.bandwidth, two_pi * config.center_hz);
    row.summary = summarize_channel(resp, pulse, r.transducer.g);
    return row;
}

struct PointDiagnostics {
    double passivity_max = 0.0;
    double convergence_rel = 0.0;
    std::vector<std::string> warnings;
};

PointDiagnostics point_diagnostics(const ScenarioConfig& config,
                                   std::optional<double> axis_value) {
    PointDiagnostics diag;
    const ScenarioConfig::Resolved r = config.resolve(axis_value);
    const NetworkResponse resp =
        assemble_link(r.transducer, r.cable, r.transducer, r.grid, config.mode);
    diag.warnings = resp.warnings;
    diag.passivity_max = verify_passivity(resp).max_row_sum;

    const PulseSpec pulse = gaussian_pulse(r.grid, r.bandwidth, two_pi * config.center_hz);
    const ChannelSummary coarse = summarize_channel(resp, pulse, r.transducer.g);

    const FrequencyGrid fine = FrequencyGrid::symmetric(r.grid.half_span(), 2 * r.grid.n - 1,
                                                        r.grid.omega_a, r.grid.omega_b);
    const NetworkResponse resp2 =
        assemble_link(r.transducer, r.cable, r.transducer, fine, config.mode);
    const PulseSpec pulse2 = gaussian_pulse(fine, r.bandwidth, two_pi * config.center_hz);
    const ChannelSummary refined = summarize_channel(resp2, pulse2, r.transducer.g);

    auto rel = [](double a, double b) {
        const double scale = std::max(std::abs(a), std::abs(b));
        return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
    };
    diag.convergence_rel = std::max({rel(coarse.eta, refined.eta),
                                     rel(coarse.fidelity, refined.fidelity),
                                     rel(coarse.capacity.lower_qubits_per_s,
                                         refined.capacity.lower_qubits_per_s)});
    return diag;
}

} // namespace

LinkReport run_point(const ScenarioConfig& config) {
    if (config.axis != SweepAxis::None)
        throw config_error("run_point: config has a sweep axis; use run_sweep");
    LinkReport report;
    report.config = config;
    report.rows.push_back(evaluate_point(config, std::nullopt));
    const PointDiagnostics diag = point_diagnostics(config, std::nullopt);
    report.passivity_max_row_sum = diag.passivity_max;
    report.grid_convergence_rel = diag.convergence_rel;
    report.warnings = diag.warnings;
    return report;
}

LinkReport run_sweep(const ScenarioConfig& config) {
    if (config.axis == SweepAxis::None)
        throw config_error("run_sweep: config has no sweep axis; use run_point");
    LinkReport report;
    report.config = config;
    const int n = static_cast<int>(config.sweep_values.size());
    report.rows.resize(n);

    // Bounded worker pool; each point is independent and rows are stored
    // by index, so output is identical for any degree of parallelism.
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                           std::min<unsigned>(8, static_cast<unsigned>(n)));
    std::atomic<int> next{0};
    auto work = [&] {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
            try {
                report.rows[i] = evaluate_point(config, config.sweep_values[i]);
            } catch (const std::exception& e) {
                report.rows[i].axis_value = config.sweep_values[i];
                report.rows[i].error = e.what();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    // Diagnostics from the first healthy point.
    for (int i = 0; i < n; ++i) {
        if (!report.rows[i].error.empty()) continue;
        const PointDiagnostics diag = point_diagnostics(config, config.sweep_values[i]);
        report.passivity_max_row_sum = diag.passivity_max;
        report.grid_convergence_rel = diag.convergence_rel;
        report.warnings = diag.warnings;
        break;
    }
    return report;
}

namespace {

const char* axis_name(SweepAxis axis) {
    switch (axis) {
    case SweepAxis::None: return "none";
    case SweepAxis::ModeFrequencyA: return "f_a";
    case SweepAxis::CableTemperature: return "T_cable";
    case SweepAxis::LengthOverQi: return "L_over_Qi";
    }
    return "?";
}

const char* mode_name(SolverMode mode) {
    return mode == SolverMode::Full ? "full" : "single-pass";
}

} // namespace

std::string LinkReport::to_csv() const {
    std::ostringstream out;
    out << "# " << version << "\n";
    out << "# mode = " << mode_name(config.mode) << ", axis = " << axis_name(config.axis)
        << "\n";
    out << "# f_b_hz = " << io::format_double(config.f_b_hz)
        << ", eps_r = " << io::format_double(config.cable.eps_r)
        << ", points = " << config.points
        << ", span_bw = " << io::format_double(config.span_bw) << "\n";
    out << "# passivity_max_row_sum = " << io::format_double(passivity_max_row_sum)
        << ", grid_convergence_rel = " << io::format_double(grid_convergence_rel) << "\n";
    out << "axis_value,f_a_hz,T_cable_k,Qi,L_m,eta,n_added_total,n_th,fidelity,"
           "qcap_lower_per_g,qcap_upper_per_g\n";
    for (const auto& row : rows) {
        if (!row.error.empty()) {
            out << "# error at axis_value = " << io::format_double(row.axis_value) << ": "
                << row.error << "\n";
            continue;
        }
        out << io::format_double(row.axis_value) << ',' << io::format_double(row.f_a_hz) << ','
            << io::format_double(row.cable_temperature_k) << ',' << io::format_double(row.qi)
            << ',' << io::format_double(row.length_m) << ','
            << io::format_double(row.summary.eta) << ','
            << io::format_double(row.summary.n_added_total) << ','
            << io::format_double(row.summary.n_th) << ','
            << io::format_double(row.summary.fidelity) << ','
            << io::format_double(row.summary.capacity.lower_per_g) << ','
            << io::format_double(row.summary.capacity.upper_per_g) << '\n';
    }
    return out.str();
}

std::string LinkReport::to_json() const {
    std::ostringstream out;
    out << "{\"version\":\"" << version << "\"";
    out << ",\"config\":{"
        << "\"mode\":\"" << mode_name(config.mode) << "\""
        << ",\"axis\":\"" << axis_name(config.axis) << "\""
        << ",\"f_a_hz\":" << io::format_double(config.f_a_hz)
        << ",\"f_b_hz\":" << io::format_double(config.f_b_hz)
        << ",\"g_hz\":" << io::format_double(config.g_hz)
        << ",\"cable_length_m\":" << io::format_double(config.cable.length_m)
        << ",\"cable_eps_r\":" << io::format_double(config.cable.eps_r)
        << ",\"cable_temperature_k\":" << io::format_double(config.cable.temperature_k)
        << ",\"transducer_temperature_k\":"
        << io::format_double(config.transducer_temperature_k)
        << ",\"points\":" << config.points
        << ",\"span_bw\":" << io::format_double(config.span_bw) << "}";
    out << ",\"diagnostics\":{\"passivity_max_row_sum\":"
        << io::format_double(passivity_max_row_sum)
        << ",\"grid_convergence_rel\":" << io::format_double(grid_convergence_rel) << "}";
    out << ",\"rows\":[";
    bool first = true;
    for (const auto& row : rows) {
        if (!first) out << ',';
        first = false;
        out << "{\"axis_value\":" << io::format_double(row.axis_value);
        if (!row.error.empty()) {
            std::string escaped;
            for (char c : row.error) {
                if (c == '"' || c == '\\') escaped += '\\';
                if (c == '\n') { escaped += "\\n"; continue; }
                escaped += c;
            }
            out << ",\"error\":\"" << escaped << "\"}";
            continue;
        }
        out << ",\"f_a_hz\":" << io::format_double(row.f_a_hz)
            << ",\"T_cable_k\":" << io::format_double(row.cable_temperature_k)
            << ",\"Qi\":" << io::format_double(row.qi)
            << ",\"L_m\":" << io::format_double(row.length_m) << ",\"summary\":"
            << row.summary.to_json() << "}";
    }
    out << "]}";
    return out.str();
}

std::string LinkReport::serialize() const {
    return config.format == OutputFormat::Json ? to_json() : to_csv();
}

bool CheckReport::ok() const {
    return std::all_of(diagnostics.begin(), diagnostics.end(),
                       [](const CheckDiagnostic& d) { return d.ok; });
}

std::string CheckReport::to_text() const {
    std::ostringstream out;
    for (const auto& d : diagnostics)
        out << (d.ok ? "ok   " : "FAIL ") << d.name << ": " << d.detail << "\n";
    return out.str();
}

bool pulse_normalization_ok(const PulseSpec& pulse, double tol) {
    return std::abs(pulse.norm_sq() - 1.0) <= tol;
}

CheckReport check(const ScenarioConfig& config) {
    CheckReport report;
    auto add = [&report](const std::string& name, bool ok, const std::string& detail) {
        report.diagnostics.push_back({name, ok, detail});
    };

    std::optional<double> first_axis_value;
    if (config.axis != SweepAxis::None && !config.sweep_values.empty())
        first_axis_value = config.sweep_values.front();

    ScenarioConfig::Resolved resolved;
    try {
        resolved = config.resolve(first_axis_value);
        add("config", true, "resolves to valid physics inputs");
    } catch (const std::exception& e) {
        add("config", false, e.what());
        return report;
    }

    // pulse span and normalization
    try {
        const PulseSpec pulse =
            gaussian_pulse(resolved.grid, resolved.bandwidth, two_pi * config.center_hz);
        const bool ok = pulse_normalization_ok(pulse);
        add("pulse_normalization", ok,
            "sum |psi|^2 - 1 = " + io::format_double(pulse.norm_sq() - 1.0));
    } catch (const std::exception& e) {
        add("pulse_span", false, e.what());
        return report;
    }

    try {
        const NetworkResponse resp = assemble_link(resolved.transducer, resolved.cable,
                                                   resolved.transducer, resolved.grid,
                                                   config.mode);
        const PassivityReport passivity = verify_passivity(resp);
        add("passivity", passivity.ok(),
            "max row sum = " + io::format_double(passivity.max_row_sum) + " over " +
                std::to_string(resp.grid.n) + " points");
        for (const auto& w : resp.warnings) add("warning", true, w);

        const PointDiagnostics diag = point_diagnostics(config, first_axis_value);
        add("grid_convergence", diag.convergence_rel <= 1e-4,
            "doubling N changes eta/F/Q_L by " + io::format_double(diag.convergence_rel) +
                " relative");
    } catch (const std::exception& e) {
        add("assembly", false, e.what());
    }
    return report;
}

} // namespace coldlink
