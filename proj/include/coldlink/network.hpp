#pragma once

#include "coldlink/link_physics.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <string>
#include <vector>

namespace coldlink {

/// Uniform symmetric grid of offsets about the conversion band center.
/// The converter maps omega_b + delta to omega_a + delta, so a single
/// offset axis serves both sides; the absolute band centers are kept for
/// bath-occupancy evaluation.
struct FrequencyGrid {
    int n = 0;              // odd, >= 3
    double spacing = 0.0;   // rad/s
    double omega_a = 0.0;   // rad/s, absolute a-band center
    double omega_b = 0.0;   // rad/s, absolute b-band center

    static FrequencyGrid symmetric(double half_span, int n, double omega_a, double omega_b);

    double delta(int j) const { return (j - (n - 1) / 2) * spacing; }
    double half_span() const { return (n - 1) / 2 * spacing; }
    bool same_as(const FrequencyGrid& other, double rel_tol = 1e-12) const;
};

enum class SolverMode { Full, SinglePass };

/// End-to-end response of the assembled link: for every grid offset, the
/// scattering amplitudes from each external port into the output port
/// (transducer-B b-external). Port 0 is the signal input (transducer-A
/// b-external); the last port is the output itself (its column holds the
/// output reflection). Noise ports carry bath descriptors.
struct NetworkResponse {
    FrequencyGrid grid;
    std::vector<Port> ports;
    int input_index = 0;
    int output_index = 0;
    Eigen::MatrixXcd s_to_output; // n x ports: S_{out <- i}[delta_j]
    SolverMode mode = SolverMode::Full;
    std::vector<std::string> warnings;

    double efficiency(int j) const; // |S_21|^2 at grid point j
};

/// Block-diagonal union of two networks; port lists concatenate.
ScatteringNetwork join(const ScatteringNetwork& a, const ScatteringNetwork& b);

/// Eliminates an internal connection between ports p and q of one network
/// (a_p = b_q, a_q = b_p), returning the reduced network. Port order is
/// preserved with p and q removed.
ScatteringNetwork connect(const ScatteringNetwork& net, int p, int q);

/// Composes transducer A -> cable -> transducer B over the grid.
/// `Full` solves the complete linear port network per frequency point,
/// capturing multi-bounce reflections between the transducers through the
/// cable. `SinglePass` multiplies forward transmissions only, treating the
/// cable as a continuum beamsplitter; its output-reflection entry is zero.
NetworkResponse assemble_link(const TransducerSpec& t_a, const CableSpec& cable,
                              const TransducerSpec& t_b, const FrequencyGrid& grid,
                              SolverMode mode);

struct PassivityReport {
    double max_row_sum = 0.0;
    int worst_grid_index = 0;
    int violation_count = 0; // grid points with row sum > 1 + 1e-9
    bool ok() const { return violation_count == 0; }
};

PassivityReport verify_passivity(const NetworkResponse& resp);

/// CSV dump, columns: delta_hz, port_label, re, im.
void dump_response_csv(const NetworkResponse& resp, std::ostream& out);

} // namespace coldlink
