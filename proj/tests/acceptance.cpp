// Acceptance suite: reference-value regressions in single-pass mode with
// eps_r = 1.7, N = 4097, span +-8 BW, plus the gating property batteries.
// Prints one pass/fail line per criterion; exit code is the failure count.

#include "coldlink/channel_metrics.hpp"
#include "coldlink/constants.hpp"
#include "coldlink/link_physics.hpp"
#include "coldlink/netlist.hpp"
#include "coldlink/network.hpp"
#include "coldlink/quantizer.hpp"
#include "coldlink/scenario.hpp"

#include "oracle_fock.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace coldlink;
using namespace coldlink::constants;

namespace {

struct Harness {
    int failures = 0;

    void criterion(int number, const std::string& label, bool ok,
                   const std::string& detail) {
        std::printf("%s  criterion %d: %s  [%s]\n", ok ? "PASS" : "FAIL", number,
                    label.c_str(), detail.c_str());
        if (!ok) ++failures;
    }

    static void info(const std::string& text) { std::printf("      %s\n", text.c_str()); }
};

bool within(double value, double target, double tol) {
    return std::abs(value - target) <= tol;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct LinkSettings {
    double f_a_hz = 200e6;
    double qi = 1e5;
    double length_m = 100.0;
    double cable_t = 0.01;
    bool lossless_transducer = false;
};

ChannelSummary evaluate(const LinkSettings& s, int n_points = 4097) {
    TransducerSpec t;
    t.omega_a = two_pi * s.f_a_hz;
    t.omega_b = two_pi * 5.3e9;
    t.g = two_pi * 25e6;
    t.kappa_a_ext = two_pi * 50e6;
    t.kappa_b_ext = two_pi * 50e6;
    t.kappa_a_int = s.lossless_transducer ? 0.0 : t.omega_a / 20e3;
    t.kappa_b_int = s.lossless_transducer ? 0.0 : two_pi * 50e3;
    t.temperature_k = 0.01;

    CableSpec cable;
    cable.qi = QiModel(s.qi);
    cable.length_m = s.length_m;
    cable.eps_r = 1.7;
    cable.temperature_k = s.cable_t;

    const double bw = t.g / (2.0 * std::sqrt(2.0)); // photon amplitude std dev g/2
    const FrequencyGrid grid =
        FrequencyGrid::symmetric(8.0 * bw, n_points, t.omega_a, t.omega_b);
    const NetworkResponse resp = assemble_link(t, cable, t, grid, SolverMode::SinglePass);
    return summarize_channel(resp, gaussian_pulse(grid, bw), t.g);
}

void criterion_1(Harness& h) {
    const double f200 = evaluate({200e6}).fidelity;
    const double f700 = evaluate({700e6}).fidelity;
    const double f8g = evaluate({8e9}).fidelity;
    const bool ok = within(f200, 0.962, 0.01) && within(f700, 0.956, 0.01) &&
                    within(f8g, 0.772, 0.015);
    h.criterion(1, "fidelity triple at Qi = 1e5, L = 100 m, 10 mK", ok,
                "F = {" + num(f200) + ", " + num(f700) + ", " + num(f8g) +
                    "} vs {0.962, 0.956, 0.772} +-{0.01, 0.01, 0.015}");
}

void criterion_2(Harness& h) {
    const double n_cold = evaluate({200e6, 1e5, 100.0, 0.01}).n_added_total;
    const double n_warm = evaluate({200e6, 1e5, 100.0, 1.0}).n_added_total;
    const bool ok = std::abs(n_cold - 0.0036) / 0.0036 <= 0.25 &&
                    std::abs(n_warm - 0.56) / 0.56 <= 0.10;
    h.criterion(2, "added noise at 200 MHz", ok,
                "n_added = " + num(n_cold) + " (0.0036 +-25%), " + num(n_warm) +
                    " (0.56 +-10%)");
}

void criterion_3(Harness& h) {
    const double f200 = evaluate({200e6, 1e5, 100.0, 0.01, true}).fidelity;
    const double f8g = evaluate({8e9, 1e5, 100.0, 0.01, true}).fidelity;
    const bool ok = within(f200, 0.966, 0.01) && within(f8g, 0.787, 0.01);
    h.criterion(3, "lossless-transducer variants", ok,
                "F = {" + num(f200) + ", " + num(f8g) + "} vs {0.966, 0.787} +-0.01");
}

void criterion_4(Harness& h) {
    const double f200 = evaluate({200e6, 1e6}).fidelity;
    const double f700 = evaluate({700e6, 1e6}).fidelity;
    const double f8g = evaluate({8e9, 1e6}).fidelity;
    const double f_km = evaluate({200e6, 1e6, 1000.0}).fidelity;
    const bool ok = within(f200, 0.976, 0.01) && within(f700, 0.975, 0.01) &&
                    within(f8g, 0.941, 0.01) && f_km >= 0.95;
    h.criterion(4, "Qi = 1e6 triple and the 1 km link", ok,
                "F = {" + num(f200) + ", " + num(f700) + ", " + num(f8g) +
                    "} vs {0.976, 0.975, 0.941} +-0.01; F(1 km) = " + num(f_km) + " >= 0.95");
}

void criterion_5(Harness& h) {
    const ChannelSummary low = evaluate({200e6});
    const ChannelSummary high = evaluate({8e9});
    const double ratio = low.capacity.lower_per_g / high.capacity.lower_per_g;
    const bool ratio_ok = std::abs(ratio - 2.98) / 2.98 <= 0.10;
    const bool abs_ok = within(low.capacity.lower_per_g, 1.43, 0.1) &&
                        within(high.capacity.lower_per_g, 0.48, 0.05);
    h.criterion(5, "capacity lower bounds (Q/g, g in rad/s)", ratio_ok && abs_ok,
                "Q_L(200 MHz)/Q_L(8 GHz) = " + num(ratio) + " (2.98 +-10%); Q_L/g = " +
                    num(low.capacity.lower_per_g) + " (1.43 +-0.1), " +
                    num(high.capacity.lower_per_g) + " (0.48 +-0.05)");
}

void criterion_6(Harness& h) {
    const PumpSpec pump{0.03 * pi, 6.0, 0.0};
    const double g_a = coupling_rate(planck * 3.51e9, pump, 0.051, 0.50) / two_pi;
    const double g_b = coupling_rate(planck * 4.53e9, pump, 0.049, 0.50) / two_pi;
    const bool ok = std::abs(g_a - 25.20e6) / 25.20e6 <= 0.01 &&
                    std::abs(g_b - 31.48e6) / 31.48e6 <= 0.01;
    h.criterion(6, "coupling rates from Table-1 inputs", ok,
                "g/2pi = " + num(g_a / 1e6) + " MHz (25.20 +-1%), " + num(g_b / 1e6) +
                    " MHz (31.48 +-1%)");
}

void criterion_7(Harness& h) {
    CableSpec cable;
    cable.qi = QiModel(1e6);
    cable.length_m = 100.0;
    cable.eps_r = 1.7;
    const double db_km = attenuation_db_per_km(400e6, cable);
    const bool ok = std::abs(db_km - 0.048) / 0.048 <= 0.02;
    h.criterion(7, "attenuation at 400 MHz, Qi = 1e6", ok,
                num(db_km) + " dB/km (0.048 +-2%)");
}

void criterion_8(Harness& h) {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    bool ok = true;
    std::string failed;
    auto expect = [&](bool cond, const char* what) {
        if (!cond && ok) failed = what;
        ok = ok && cond;
    };

    auto random_transducer = [&](double temperature) {
        TransducerSpec t;
        t.omega_a = two_pi * (1.5e8 + 8e8 * u01(rng));
        t.omega_b = two_pi * (4e9 + 4e9 * u01(rng));
        t.g = two_pi * (1e7 + 2e7 * u01(rng));
        t.kappa_a_ext = (1.5 + u01(rng)) * t.g;
        t.kappa_b_ext = (1.5 + u01(rng)) * t.g;
        t.kappa_a_int = t.omega_a / (1e4 + 9e4 * u01(rng));
        t.kappa_b_int = two_pi * 1e5 * u01(rng);
        t.temperature_k = temperature;
        return t;
    };
    auto random_cable = [&](double temperature) {
        CableSpec cable;
        cable.qi = QiModel(1e4 + 9e5 * u01(rng));
        cable.length_m = 5.0 + 300.0 * u01(rng);
        cable.eps_r = 1.7;
        cable.temperature_k = temperature;
        return cable;
    };

    // component and loss-complete network unitarity; reciprocity
    for (int trial = 0; trial < 25; ++trial) {
        const TransducerSpec t = random_transducer(0.02 * u01(rng));
        const double delta = two_pi * 6e7 * (2.0 * u01(rng) - 1.0);
        const ScatteringNetwork s_t = transducer_smatrix(delta, t);
        expect(s_t.max_unitarity_defect() <= 1e-9, "transducer unitarity");
        expect(s_t.max_asymmetry() <= 1e-10, "transducer reciprocity");
        const ScatteringNetwork s_c =
            cable_smatrix(1e8 + 1e10 * u01(rng), random_cable(0.01));
        expect(s_c.max_unitarity_defect() <= 1e-9, "cable unitarity");

        const CableSpec cable = random_cable(0.01);
        const double bw = t.g / (2.0 * std::sqrt(2.0));
        const FrequencyGrid grid =
            FrequencyGrid::symmetric(8.0 * bw, 65, t.omega_a, t.omega_b);
        const NetworkResponse resp = assemble_link(t, cable, t, grid, SolverMode::Full);
        for (int j = 0; j < grid.n; ++j)
            expect(std::abs(resp.s_to_output.row(j).squaredNorm() - 1.0) <= 1e-9,
                   "loss-complete row sums");
    }

    // matched lossless conversion at delta = 0
    {
        TransducerSpec t = random_transducer(0.0);
        t.kappa_a_int = 0.0;
        t.kappa_b_int = 0.0;
        t.kappa_a_ext = 2.0 * t.g;
        t.kappa_b_ext = 2.0 * t.g;
        const ScatteringNetwork s = transducer_smatrix(0.0, t);
        expect(std::abs(std::norm(s.s(0, 2)) - 1.0) <= 1e-12, "matched unit conversion");
    }

    // F = eta at zero temperature across 50 random links
    for (int trial = 0; trial < 50; ++trial) {
        TransducerSpec t = random_transducer(0.0);
        const CableSpec cable = random_cable(0.0);
        const double bw = t.g / (2.0 * std::sqrt(2.0));
        const FrequencyGrid grid =
            FrequencyGrid::symmetric(8.0 * bw, 129, t.omega_a, t.omega_b);
        const NetworkResponse resp = assemble_link(
            t, cable, t, grid, trial % 2 ? SolverMode::Full : SolverMode::SinglePass);
        const ChannelSummary summary =
            summarize_channel(resp, gaussian_pulse(grid, bw), t.g);
        expect(std::abs(summary.fidelity - summary.eta) <= 1e-12, "F = eta at T = 0");
    }

    // fidelity fast path vs brute-force Fock oracle on a 20x20 grid
    for (int ie = 0; ie < 20 && ok; ++ie)
        for (int in = 0; in < 20; ++in) {
            const double eta = (ie + 0.5) / 20.0;
            const double n_th = 2.0 * (in + 0.5) / 20.0;
            expect(std::abs(single_photon_fidelity(eta, n_th) -
                            oracle::single_photon_fidelity(eta, n_th)) <= 1e-9,
                   "fidelity fast path vs oracle");
        }

    // q_U = q_L at nbar = 0 (zero-temperature link), pulse normalization,
    // grid doubling, monotonicity
    {
        TransducerSpec t = random_transducer(0.0);
        const CableSpec cable = random_cable(0.0);
        const double bw = t.g / (2.0 * std::sqrt(2.0));
        const FrequencyGrid grid =
            FrequencyGrid::symmetric(8.0 * bw, 1025, t.omega_a, t.omega_b);
        const NetworkResponse resp = assemble_link(t, cable, t, grid, SolverMode::SinglePass);
        const CapacityBounds caps = capacity_bounds(resp, t.g);
        expect(std::abs(caps.lower_qubits_per_s - caps.upper_qubits_per_s) <=
                   1e-12 * std::max(1.0, caps.lower_qubits_per_s),
               "q_U = q_L at nbar = 0");

        const PulseSpec pulse = gaussian_pulse(grid, bw);
        expect(std::abs(pulse.norm_sq() - 1.0) <= 1e-12, "pulse normalization");
    }
    {
        const ChannelSummary coarse = evaluate({200e6}, 2049);
        const ChannelSummary fine = evaluate({200e6}, 4097);
        auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
        expect(rel(coarse.eta, fine.eta) <= 1e-4, "grid-doubling eta");
        expect(rel(coarse.fidelity, fine.fidelity) <= 1e-4, "grid-doubling F");
        expect(rel(coarse.capacity.lower_qubits_per_s,
                   fine.capacity.lower_qubits_per_s) <= 1e-4,
               "grid-doubling Q_L");
    }
    {
        double prev = 2.0;
        for (const double length : {10.0, 100.0, 1000.0}) {
            const double f = evaluate({200e6, 1e5, length}, 1025).fidelity;
            expect(f < prev, "F monotone in L");
            prev = f;
        }
        double prev_n = -1.0;
        for (const double temperature : {0.01, 0.03, 0.1, 0.3, 1.0}) {
            const double n = thermal_occupation(200e6, temperature);
            expect(n > prev_n, "nbar monotone in T");
            prev_n = n;
        }
    }

    h.criterion(8, "property suites", ok,
                ok ? "unitarity, reciprocity, conversion, F = eta, oracle, q bounds, "
                     "normalization, doubling, monotonicity"
                   : "first failure: " + failed);
}

void criterion_9(Harness& h) {
    bool ok = true;
    std::string failed;
    auto expect = [&](bool cond, const char* what) {
        if (!cond && ok) failed = what;
        ok = ok && cond;
    };

    // parallel LC closed forms
    {
        const double l = 1e-9, c = 1e-12;
        Netlist nl;
        nl.nodes = {"n1"};
        nl.branches = {{"c1", "n1", "gnd", BranchKind::Capacitor, c},
                       {"l1", "n1", "gnd", BranchKind::Inductor, l},
                       {"jj", "n1", "gnd", BranchKind::Junction, planck * 5e9}};
        nl.junction_id = "jj";
        const ModeSolution sol = quantize_netlist(nl);
        const double f_expected = 1.0 / (two_pi * std::sqrt(l * c));
        const double z = std::sqrt(l / c);
        const double phi_expected = std::sqrt(hbar * z / 2.0) / reduced_flux_quantum;
        expect(sol.modes.size() == 1, "LC mode count");
        expect(std::abs(sol.modes[0].omega / two_pi - f_expected) / f_expected <= 1e-9,
               "LC frequency closed form");
        expect(std::abs(sol.modes[0].phi_zpf - phi_expected) / phi_expected <= 1e-9,
               "LC phi closed form");
    }

    // coupled two-mode symbolic oracle
    {
        const double l1 = 2e-9, c1 = 0.5e-12, l2 = 1.3e-9, c2 = 0.9e-12, cc = 0.2e-12;
        Netlist nl;
        nl.nodes = {"n1", "n2"};
        nl.branches = {{"c1", "n1", "gnd", BranchKind::Capacitor, c1},
                       {"l1", "n1", "gnd", BranchKind::Inductor, l1},
                       {"jj", "n1", "gnd", BranchKind::Junction, planck * 5e9},
                       {"c2", "n2", "gnd", BranchKind::Capacitor, c2},
                       {"l2", "n2", "gnd", BranchKind::Inductor, l2},
                       {"cc", "n1", "n2", BranchKind::Capacitor, cc}};
        nl.junction_id = "jj";
        const ModeSolution sol = quantize_netlist(nl);
        const double a = (c1 + cc) * (c2 + cc) - cc * cc;
        const double b = (c2 + cc) / l1 + (c1 + cc) / l2;
        const double c = 1.0 / (l1 * l2);
        const double disc = std::sqrt(b * b - 4.0 * a * c);
        expect(sol.modes.size() == 2, "coupled mode count");
        expect(std::abs(sol.modes[0].omega - std::sqrt((b - disc) / (2 * a))) /
                       sol.modes[0].omega <=
                   1e-9,
               "coupled lower eigenvalue");
        expect(std::abs(sol.modes[1].omega - std::sqrt((b + disc) / (2 * a))) /
                       sol.modes[1].omega <=
                   1e-9,
               "coupled upper eigenvalue");
    }

    h.criterion(9, "quantizer closed forms and symbolic oracle", ok,
                ok ? "parallel-LC and coupled-2x2 to 1e-9 relative"
                   : "first failure: " + failed);

    // Exploratory (non-gating): Table-1 reproduction under the shipped
    // candidate topology; the exact Figure-1a placement of C_c/L_c is open.
    try {
        const PumpSpec pump{0.03 * pi, 6.0, 0.0};
        for (const auto& [file, name] :
             {std::pair{SCENARIO_DIR "/design_a.netlist", "A"},
              std::pair{SCENARIO_DIR "/design_b.netlist", "B"}}) {
            const Netlist nl = Netlist::parse_file(file);
            const ModeSolution sol = quantize_netlist(nl);
            if (sol.modes.size() != 2) continue;
            const double g =
                coupling_rate(nl.junction_branch().value, pump, sol.modes[0].phi_zpf,
                              sol.modes[1].phi_zpf);
            Harness::info(std::string("exploratory design ") + name + ": f_a = " +
                          num(sol.modes[0].omega / two_pi / 1e6) + " MHz, f_b = " +
                          num(sol.modes[1].omega / two_pi / 1e9) + " GHz, phi_a = " +
                          num(sol.modes[0].phi_zpf) + ", phi_b = " +
                          num(sol.modes[1].phi_zpf) + ", g/2pi = " + num(g / two_pi / 1e6) +
                          " MHz");
        }
        Harness::info("exploratory table-1 targets: A: 201.0 MHz / 5.302 GHz / 0.051 / 0.50 "
                      "/ 25.20 MHz; B: 689.1 MHz / 5.304 GHz / 0.049 / 0.50 / 31.48 MHz");
    } catch (const std::exception& e) {
        Harness::info(std::string("exploratory table-1 reproduction unavailable: ") +
                      e.what());
    }
}

} // namespace

int main() {
    Harness h;
    criterion_1(h);
    criterion_2(h);
    criterion_3(h);
    criterion_4(h);
    criterion_5(h);
    criterion_6(h);
    criterion_7(h);
    criterion_8(h);
    criterion_9(h);
    if (h.failures == 0) std::printf("all acceptance criteria passed\n");
    else std::printf("%d criterion(s) failed\n", h.failures);
    return h.failures;
}
