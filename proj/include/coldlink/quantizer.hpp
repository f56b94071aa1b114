#pragma once

#include "coldlink/netlist.hpp"

#include <string>
#include <vector>

namespace coldlink {

/// One normal mode of the linearized circuit.
struct Mode {
    double omega = 0.0;     // rad/s, > 0
    double phi_zpf = 0.0;   // zero-point phase fluctuation across the junction branch
    double impedance = 0.0; // 2*Phi_zpf^2/hbar, ohms; sqrt(L/C) for a bare LC
};

struct ModeSolution {
    std::vector<Mode> modes; // ascending frequency
    int dropped_zero_modes = 0;
    std::vector<std::string> warnings;
};

/// Flux-pump drive parameters. epsilon_p is the pump amplitude in radians
/// of flux phase; beta the off-resonant b-mode drive strength. The
/// detuning is carried for reporting only; the first-order conversion
/// rate does not depend on it.
struct PumpSpec {
    double epsilon_p = 0.0;
    double beta = 0.0;
    double detuning = 0.0; // rad/s
};

/// Solves the generalized eigenproblem of node-flux oscillations,
/// M v = omega^2 C v, with C the capacitance matrix and M the inverse
/// inductance matrix. The junction branch is treated as a linear open at
/// the ATS saddle point. Zero-frequency (free-particle) modes are dropped
/// with a warning; a singular capacitance matrix raises netlist_error
/// ("ill-posed netlist").
ModeSolution quantize_netlist(const Netlist& netlist);

/// Parametric conversion rate g = (E_J/hbar) epsilon_p beta phi_b^2 phi_a.
double coupling_rate(double e_j_joules, const PumpSpec& pump, double phi_a, double phi_b);

/// Longitudinal-coupling comparison baseline g = g0 sqrt(n_c).
double longitudinal_baseline(double g0, double n_c);

} // namespace coldlink
