#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coldlink/constants.hpp"
#include "coldlink/errors.hpp"
#include "coldlink/scenario.hpp"
#include "coldlink/units.hpp"

#include <cmath>
#include <string>

using namespace coldlink;
using namespace coldlink::constants;
using doctest::Approx;

namespace {

const std::string point_config = R"(
[cable]
Qi = 1e5
length = 100 m
eps_r = 1.7
temperature = 10 mK

[transducer]
f_a = 200 MHz
f_b = 5.3 GHz
g = 25 MHz
Qi_a = 20e3
kappa_b_int = 50 kHz
temperature = 10 mK

[pulse]
bw_over_g = 0.35355339059327373
points = 1025
span_bw = 8

[solver]
mode = single-pass
)";

} // namespace

TEST_CASE("unit parsing") {
    using units::Dimension;
    CHECK(units::parse_value("200 MHz", Dimension::Frequency) == Approx(2e8));
    CHECK(units::parse_value("200MHz", Dimension::Frequency) == Approx(2e8));
    CHECK(units::parse_value("10 mK", Dimension::Temperature) == Approx(0.01));
    CHECK(units::parse_value("16.3 pF", Dimension::Capacitance) == Approx(16.3e-12));
    CHECK(units::parse_value("45.7 nH", Dimension::Inductance) == Approx(45.7e-9));
    CHECK(units::parse_value("3.51 GHz", Dimension::Energy) ==
          Approx(planck * 3.51e9).epsilon(1e-12));
    CHECK(units::parse_value("1e5", Dimension::Dimensionless) == Approx(1e5));
    CHECK(units::parse_value("1 km", Dimension::Length) == Approx(1000.0));
    CHECK_THROWS_AS(units::parse_value("10 bogus", Dimension::Frequency), config_error);
    CHECK_THROWS_AS(units::parse_value("10 mK", Dimension::Frequency), config_error);
    CHECK_THROWS_AS(units::parse_value("", Dimension::Frequency), config_error);
}

TEST_CASE("scenario parsing and resolution") {
    const ScenarioConfig cfg = ScenarioConfig::parse(point_config);
    CHECK(cfg.f_a_hz == Approx(2e8));
    CHECK(cfg.mode == SolverMode::SinglePass);
    CHECK(cfg.points == 1025);

    const ScenarioConfig::Resolved r = cfg.resolve();
    CHECK(r.transducer.omega_a == Approx(two_pi * 2e8));
    CHECK(r.transducer.g == Approx(two_pi * 25e6));
    CHECK(r.transducer.kappa_a_ext == Approx(two_pi * 50e6)); // default 2g
    CHECK(r.transducer.kappa_a_int == Approx(two_pi * 2e8 / 20e3));
    CHECK(r.transducer.kappa_b_int == Approx(two_pi * 50e3));
    CHECK(r.bandwidth == Approx(two_pi * 25e6 / (2.0 * std::sqrt(2.0))).epsilon(1e-12));
    CHECK(r.grid.n == 1025);
    CHECK(r.grid.half_span() == Approx(8.0 * r.bandwidth).epsilon(1e-12));
    CHECK(r.cable.qi.at(2e8) == Approx(1e5));
}

TEST_CASE("config validation errors are itemized with section/key names") {
    SUBCASE("unknown key") {
        CHECK_THROWS_WITH_AS(ScenarioConfig::parse("[cable]\nbogus_key = 1\n"),
                             doctest::Contains("[cable] bogus_key"), config_error);
    }
    SUBCASE("bad unit names the key") {
        CHECK_THROWS_WITH_AS(ScenarioConfig::parse("[cable]\nlength = 10 GHz\n"),
                             doctest::Contains("[cable] length"), config_error);
    }
    SUBCASE("even grid point count") {
        CHECK_THROWS_WITH_AS(ScenarioConfig::parse("[pulse]\npoints = 4096\n"),
                             doctest::Contains("[pulse] points"), config_error);
    }
    SUBCASE("sweep axis without values and vice versa") {
        CHECK_THROWS_AS(ScenarioConfig::parse("[sweep]\naxis = f_a\n"), config_error);
        CHECK_THROWS_AS(ScenarioConfig::parse("[sweep]\nvalues = 1 GHz\n"), config_error);
        CHECK_THROWS_AS(ScenarioConfig::parse("[sweep]\naxis = bogus\nvalues = 1\n"),
                        config_error);
    }
    SUBCASE("mutually exclusive a-mode loss keys") {
        CHECK_THROWS_WITH_AS(
            ScenarioConfig::parse("[transducer]\nQi_a = 2e4\nkappa_a_int = 10 kHz\n"),
            doctest::Contains("mutually exclusive"), config_error);
    }
    SUBCASE("mutually exclusive cable Qi keys") {
        CHECK_THROWS_WITH_AS(
            ScenarioConfig::parse("[cable]\nQi = 1e5\nQi_table = 1 GHz: 1e6\n"),
            doctest::Contains("mutually exclusive"), config_error);
    }
}

TEST_CASE("run_point evaluates the reference link") {
    ScenarioConfig cfg = ScenarioConfig::parse(point_config);
    cfg.points = 4097;
    const LinkReport report = run_point(cfg);
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].summary.fidelity == Approx(0.9618551612).epsilon(1e-6));
    CHECK(report.rows[0].f_a_hz == Approx(2e8));
    CHECK(report.passivity_max_row_sum <= 1.0 + 1e-9);
    CHECK(report.grid_convergence_rel < 1e-4);
    CHECK_THROWS_AS(run_sweep(cfg), config_error);
}

TEST_CASE("sweep of length 1 matches run_point row for same parameters") {
    ScenarioConfig point_cfg = ScenarioConfig::parse(point_config);
    ScenarioConfig sweep_cfg = ScenarioConfig::parse(
        point_config + "\n[sweep]\naxis = f_a\nvalues = 200 MHz\n");
    CHECK_THROWS_AS(run_point(sweep_cfg), config_error);

    const LinkReport a = run_point(point_cfg);
    const LinkReport b = run_sweep(sweep_cfg);
    REQUIRE(b.rows.size() == 1);
    CHECK(a.rows[0].summary.csv_row() == b.rows[0].summary.csv_row());
}

TEST_CASE("sweep axes resolve per point") {
    SUBCASE("f_a recomputes kappa_a_int and baths") {
        ScenarioConfig cfg = ScenarioConfig::parse(
            point_config + "\n[sweep]\naxis = f_a\nvalues = 200 MHz, 8 GHz\n");
        const ScenarioConfig::Resolved hi = cfg.resolve(8e9);
        CHECK(hi.transducer.omega_a == Approx(two_pi * 8e9));
        CHECK(hi.transducer.kappa_a_int == Approx(two_pi * 8e9 / 20e3)); // 400 kHz
    }
    SUBCASE("L_over_Qi sweeps Qi at fixed length") {
        ScenarioConfig cfg = ScenarioConfig::parse(
            point_config + "\n[sweep]\naxis = L_over_Qi\nvalues = 1e-3 m, 1e-2 m\n");
        const ScenarioConfig::Resolved r = cfg.resolve(1e-2);
        CHECK(r.cable.length_m == Approx(100.0));
        CHECK(r.cable.qi.at(2e8) == Approx(1e4));
    }
    SUBCASE("T_cable leaves the transducer bath untouched") {
        ScenarioConfig cfg = ScenarioConfig::parse(
            point_config + "\n[sweep]\naxis = T_cable\nvalues = 10 mK, 1 K\n");
        const ScenarioConfig::Resolved r = cfg.resolve(1.0);
        CHECK(r.cable.temperature_k == Approx(1.0));
        CHECK(r.transducer.temperature_k == Approx(0.01));
    }
}

TEST_CASE("deterministic serialization") {
    ScenarioConfig cfg = ScenarioConfig::parse(
        point_config + "\n[sweep]\naxis = f_a\nvalues = 200 MHz, 700 MHz, 8 GHz\n");
    const LinkReport a = run_sweep(cfg);
    const LinkReport b = run_sweep(cfg);
    CHECK(a.to_csv() == b.to_csv());
    CHECK(a.to_json() == b.to_json());
    cfg.format = OutputFormat::Json;
    CHECK(run_sweep(cfg).serialize() == b.to_json());

    SUBCASE("every emitted eta, F lies in [0,1]; noise non-negative") {
        for (const auto& row : a.rows) {
            REQUIRE(row.error.empty());
            CHECK(row.summary.eta >= 0.0);
            CHECK(row.summary.eta <= 1.0);
            CHECK(row.summary.fidelity >= 0.0);
            CHECK(row.summary.fidelity <= 1.0);
            CHECK(row.summary.n_added_total >= 0.0);
        }
    }
}

TEST_CASE("per-point sweep failures become error rows and the run continues") {
    // 10 kHz a-mode: the +-8 BW grid reaches negative absolute frequencies
    ScenarioConfig cfg = ScenarioConfig::parse(
        point_config + "\n[sweep]\naxis = f_a\nvalues = 10 kHz, 200 MHz\n");
    const LinkReport report = run_sweep(cfg);
    REQUIRE(report.rows.size() == 2);
    CHECK_FALSE(report.rows[0].error.empty());
    CHECK(report.rows[1].error.empty());
    CHECK(report.rows[1].summary.fidelity > 0.9);
    const std::string csv = report.to_csv();
    CHECK(csv.find("# error at axis_value") != std::string::npos);
    const std::string json = report.to_json();
    CHECK(json.find("\"error\":") != std::string::npos);
}

TEST_CASE("check diagnostics") {
    SUBCASE("healthy config passes") {
        const CheckReport report = check(ScenarioConfig::parse(point_config));
        CHECK(report.ok());
    }
    SUBCASE("span of 2 BW trips the insufficient-span diagnostic") {
        ScenarioConfig cfg = ScenarioConfig::parse(point_config);
        cfg.span_bw = 2.0;
        const CheckReport report = check(cfg);
        CHECK_FALSE(report.ok());
        bool found = false;
        for (const auto& d : report.diagnostics)
            found |= !d.ok && d.detail.find("insufficient span") != std::string::npos;
        CHECK(found);
    }
    SUBCASE("perturbed pulse normalization is caught by the audit") {
        const ScenarioConfig cfg = ScenarioConfig::parse(point_config);
        const ScenarioConfig::Resolved r = cfg.resolve();
        PulseSpec pulse = gaussian_pulse(r.grid, r.bandwidth);
        CHECK(pulse_normalization_ok(pulse));
        pulse.amplitude[r.grid.n / 2] *= 1.001;
        CHECK_FALSE(pulse_normalization_ok(pulse));
    }
}

TEST_CASE("netlist-driven transducer resolution") {
    const std::string cfg_text = R"(
[cable]
Qi = 1e5
length = 100 m

[transducer]
netlist = )" SCENARIO_DIR R"(/design_a.netlist
pump_epsilon_over_pi = 0.03
pump_beta = 6
kappa_a_ext = 50 MHz
kappa_b_ext = 50 MHz
Qi_a = 20e3
kappa_b_int = 50 kHz

[solver]
mode = single-pass
)";
    const ScenarioConfig cfg = ScenarioConfig::parse(cfg_text);
    const ScenarioConfig::Resolved r = cfg.resolve();
    CHECK(r.transducer.omega_a / two_pi == Approx(210.04e6).epsilon(1e-3));
    CHECK(r.transducer.omega_b / two_pi == Approx(5.298e9).epsilon(1e-3));
    CHECK(r.transducer.g / two_pi == Approx(25.20e6).epsilon(0.01));
    const LinkReport report = run_point(cfg);
    CHECK(report.rows[0].summary.fidelity > 0.95);
}

TEST_CASE("shipped scenario files parse and self-validate") {
    for (const char* name :
         {"fig1d.cfg", "fig2a_fidelity.cfg", "fig2b_noise.cfg", "fig2c_LoverQ.cfg",
          "fig3a_capacity.cfg", "fig3b_capacity_LoverQ.cfg", "tableA_designs.cfg"}) {
        CAPTURE(name);
        ScenarioConfig cfg = ScenarioConfig::parse_file(std::string(SCENARIO_DIR "/") + name);
        cfg.points = 513; // keep the self-check fast; full N is covered elsewhere
        const CheckReport report = check(cfg);
        CAPTURE(report.to_text());
        CHECK(report.ok());
    }
}
