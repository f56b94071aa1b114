#pragma once

#include "coldlink/network.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace coldlink {

/// Spectral amplitude of the photon wave packet on a frequency grid,
/// discretely normalized: sum_j |psi_j|^2 = 1.
struct PulseSpec {
    FrequencyGrid grid;
    std::vector<std::complex<double>> amplitude;
    double bandwidth = 0.0; // rad/s, std dev of the |psi|^2 envelope
    double center = 0.0;    // rad/s offset from band center

    double norm_sq() const;
};

/// Gaussian pulse psi_j ~ exp(-(delta_j - center)^2 / (4 BW^2)), so the
/// |psi|^2 envelope has standard deviation BW. Requires at least 6 BW of
/// span on both sides of the center.
PulseSpec gaussian_pulse(const FrequencyGrid& grid, double bandwidth, double center = 0.0);

/// eta = sum_j |S_21[j]|^2 |psi_j|^2.
double pulse_efficiency(const NetworkResponse& resp, const PulseSpec& pulse);

struct AddedNoise {
    std::vector<std::pair<std::string, double>> per_port;
    double total = 0.0;
};

/// n_added,i = sum_j |S_{2i}[j]|^2 |psi_j|^2 nbar_i(omega_j, T_i), summed
/// over noise ports; vacuum baths contribute zero.
AddedNoise added_noise(const NetworkResponse& resp, const PulseSpec& pulse);

/// Inverts n_added = (1 - eta) n_th.
double effective_thermal(double eta, double n_added_total);

/// F = <1|rho_s|1> for the thermal-attenuator channel of transmissivity
/// eta and environment occupancy n_th, evaluated as a truncated Fock-space
/// sum over environment number states: the environment cutoff m* is the
/// smallest integer whose residual thermal tail mass is below 1e-12.
double single_photon_fidelity(double eta, double n_th);

struct CapacityBounds {
    double lower_qubits_per_s = 0.0;
    double upper_qubits_per_s = 0.0;
    double lower_per_g = 0.0;       // Q / g with g in rad/s
    double upper_per_g = 0.0;
    double lower_per_g_hz = 0.0;    // Q / (g/2pi); second convention, reported alongside
    double upper_per_g_hz = 0.0;
    int lower_exceeds_upper_points = 0; // grid points where q_L > q_U (nonzero nbar)
    std::vector<std::string> warnings;
};

/// Integrates the discrete-time thermal-loss capacity bounds
///   q_L = max{log2(eta/(1-eta)), 0}
///   q_U = max{log2[(eta - (1-eta) nbar)/((1-eta)(nbar+1))], 0}
/// over the grid (trapezoid rule, d omega / 2pi) with the per-frequency
/// effective nbar built from the noise-port rows. Cells where q crosses
/// zero are integrated over the interpolated sub-interval only.
CapacityBounds capacity_bounds(const NetworkResponse& resp, double g);

struct ChannelSummary {
    double eta = 0.0;
    double n_added_total = 0.0;
    double n_th = 0.0;
    double fidelity = 0.0;
    CapacityBounds capacity;
    AddedNoise noise_breakdown;

    /// CSV row, fixed column order: eta, n_added_total, n_th, fidelity,
    /// qcap_lower_per_g, qcap_upper_per_g, qcap_lower_qubits_s,
    /// qcap_upper_qubits_s.
    static std::string csv_header();
    std::string csv_row() const;
    std::string to_json() const; // flat object with the same fields

    void validate() const; // eta, F in [0,1]; n_added >= 0
};

ChannelSummary summarize_channel(const NetworkResponse& resp, const PulseSpec& pulse,
                                 double g);

} // namespace coldlink
