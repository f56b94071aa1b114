#pragma once

#include "coldlink/channel_metrics.hpp"
#include "coldlink/link_physics.hpp"
#include "coldlink/network.hpp"
#include "coldlink/quantizer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coldlink {

inline constexpr const char* tool_version = "coldlink 0.1.0";

enum class SweepAxis { None, ModeFrequencyA, CableTemperature, LengthOverQi };
enum class OutputFormat { Csv, Json };

/// Fully resolved scenario: all values SI, defaults applied. Produced by
/// ScenarioConfig::parse_file and consumed by run_point/run_sweep/check.
struct ScenarioConfig {
    // [cable]
    CableSpec cable;

    // [transducer]
    double f_a_hz = 200e6;
    double f_b_hz = 5.3e9;
    double kappa_a_ext_hz = 0.0; // 0 -> default 2*g
    double kappa_b_ext_hz = 0.0;
    std::optional<double> qi_a;            // kappa_a_int = omega_a/Qi_a
    std::optional<double> kappa_a_int_hz;  // explicit override
    double kappa_b_int_hz = 50e3;
    double g_hz = 25e6;
    double transducer_temperature_k = 0.01;
    bool b_bath_vacuum = true;

    // optional netlist-derived transducer
    std::string netlist_path;
    PumpSpec pump;
    int a_mode_index = 0;
    int b_mode_index = 1;

    // [pulse]
    std::optional<double> bandwidth_hz; // std dev of |psi|^2; default bw_over_g * g
    double bw_over_g = 0.35355339059327373; // 1/(2 sqrt(2)): amplitude std dev g/2
    double center_hz = 0.0;
    int points = 4097;
    double span_bw = 8.0;

    // [solver]
    SolverMode mode = SolverMode::Full;

    // [sweep]
    SweepAxis axis = SweepAxis::None;
    std::vector<double> sweep_values; // SI units of the axis

    // [output]
    std::string output_path;
    OutputFormat format = OutputFormat::Csv;

    std::string source_path;

    static ScenarioConfig parse_file(const std::string& path);
    static ScenarioConfig parse(const std::string& text, const std::string& source_path = "");

    /// Resolved per-point physics inputs. `axis_value` overrides the sweep
    /// axis for this point (ignored when axis == None).
    struct Resolved {
        TransducerSpec transducer;
        CableSpec cable;
        FrequencyGrid grid;
        double bandwidth = 0.0; // rad/s
        double axis_value = 0.0;
    };
    Resolved resolve(std::optional<double> axis_value = std::nullopt) const;
};

struct ReportRow {
    double axis_value = 0.0;
    double f_a_hz = 0.0;
    double cable_temperature_k = 0.0;
    double qi = 0.0;
    double length_m = 0.0;
    ChannelSummary summary;
    std::string error; // per-point failure; row carries no summary then
};

struct LinkReport {
    ScenarioConfig config;
    std::vector<ReportRow> rows;
    double passivity_max_row_sum = 0.0;
    double grid_convergence_rel = 0.0; // max relative change of eta/F/Q_L on doubling
    std::vector<std::string> warnings;
    std::string version = tool_version;

    std::string to_csv() const;
    std::string to_json() const;
    std::string serialize() const; // per config.format
};

/// Point evaluation (no sweep axis).
LinkReport run_point(const ScenarioConfig& config);

/// Axis sweep; points evaluated concurrently, rows emitted in axis order.
/// Per-point failures become error rows and the run continues.
LinkReport run_sweep(const ScenarioConfig& config);

struct CheckDiagnostic {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckDiagnostic> diagnostics;
    bool ok() const;
    std::string to_text() const;
};

/// Self-validation: passivity, pulse normalization, grid-convergence
/// doubling, span sufficiency. Reports structured diagnostics; never throws.
CheckReport check(const ScenarioConfig& config);

/// Pulse-normalization audit used by `check` (and fault-injection tests).
bool pulse_normalization_ok(const PulseSpec& pulse, double tol = 1e-12);

} // namespace coldlink
