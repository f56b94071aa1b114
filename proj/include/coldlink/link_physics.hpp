#pragma once

#include <Eigen/Dense>

#include <string>
#include <utility>
#include <vector>

namespace coldlink {

/// Thermal environment attached to a scattering port. A vacuum-flagged
/// bath contributes zero occupancy at any frequency.
struct Bath {
    double temperature_k = 0.0;
    bool vacuum = false;
};

/// Internal quality factor of cable standing modes: a constant, or a
/// tabulated function of frequency (linear interpolation, clamped ends).
class QiModel {
public:
    QiModel() = default;
    explicit QiModel(double constant) : constant_(constant) {}
    explicit QiModel(std::vector<std::pair<double, double>> table);

    double at(double f_hz) const;
    bool is_constant() const { return table_.empty(); }
    double constant_value() const { return constant_; }

private:
    double constant_ = 1e5;
    std::vector<std::pair<double, double>> table_; // (f_hz, Qi), sorted
};

/// Superconducting coax segment.
struct CableSpec {
    QiModel qi;
    double length_m = 100.0;
    double eps_r = 1.7;          // calibrated against 0.048 dB/km at 400 MHz, Qi = 1e6
    double temperature_k = 0.01;

    void validate() const; // throws domain_error on violated invariants
};

/// Two-mode parametric converter in the rotating frame of the pump.
/// All rates are angular (rad/s).
struct TransducerSpec {
    double omega_a = 0.0;
    double omega_b = 0.0;
    double kappa_a_ext = 0.0;
    double kappa_b_ext = 0.0;
    double kappa_a_int = 0.0;
    double kappa_b_int = 0.0;
    double g = 0.0;
    double temperature_k = 0.01;
    bool b_bath_vacuum = true; // baths on the high-frequency mode sit in vacuum

    double kappa_a() const { return kappa_a_ext + kappa_a_int; }
    double kappa_b() const { return kappa_b_ext + kappa_b_int; }

    /// Throws domain_error on hard violations (negative rates, g >= omega_a);
    /// returns warnings for soft ones (g above omega_a/5, a-mode above b-mode).
    std::vector<std::string> validate() const;
};

/// One port of a scattering component or assembled network.
struct Port {
    std::string label;
    double center_hz = 0.0; // absolute frequency of the port at grid center
    Bath bath;
    bool is_noise = false;  // participates in added-noise sums
};

/// Multiport scattering matrix with per-port bath metadata. Components are
/// loss-complete: every decay channel appears as a port, so the matrix is
/// unitary.
struct ScatteringNetwork {
    std::vector<Port> ports;
    Eigen::MatrixXcd s;

    int port_index(const std::string& label) const; // -1 if absent
    double max_unitarity_defect() const;            // max |S S^dag - I|
    double max_asymmetry() const;                   // max |S - S^T|
};

/// Field attenuation constant of Eq-style coax loss: alpha = pi sqrt(eps_r) f / (Qi c).
double attenuation_constant(double f_hz, const CableSpec& cable); // 1/m

/// Power attenuation in dB/km (2*alpha nepers/m converted).
double attenuation_db_per_km(double f_hz, const CableSpec& cable);

/// Bose-Einstein occupancy 1/(exp(hf/kT)-1); 0 at T = 0. Throws
/// domain_error for f <= 0.
double thermal_occupation(double f_hz, double temperature_k);
double thermal_occupation(double f_hz, const Bath& bath);

/// 4-port lossy-beamsplitter cable section evaluated at absolute frequency
/// f. Ports: [end1, end2, loss1, loss2]. Signal transmission carries
/// exp(i beta L); the loss-loss backscatter carries the conjugate phase,
/// which keeps the matrix exactly unitary and symmetric while leaving all
/// |S| elements equal to the zero-phase form.
ScatteringNetwork cable_smatrix(double f_hz, const CableSpec& cable);

/// Two-mode converter response at offset delta (rad/s) from band center,
/// from input-output theory of the beam-splitter Hamiltonian:
///   S(delta) = K M(delta)^-1 K^T - I,
/// with M = [[ka/2 - i d, i g], [i g, kb/2 - i d]] and K the mode-to-port
/// coupling map. Ports: [a_ext, a_int, b_ext, b_int].
ScatteringNetwork transducer_smatrix(double delta, const TransducerSpec& spec);

/// Peak conversion efficiency (kappa_a_ext/kappa_a)(kappa_b_ext/kappa_b) * 4C/(1+C)^2
/// with cooperativity C = 4g^2/(kappa_a kappa_b); closed form for delta = 0.
double peak_conversion_efficiency(const TransducerSpec& spec);

/// Back-of-envelope photon jump probability alpha*L*(4 nbar + 1). A
/// diagnostic only; not used by the fidelity pipeline.
double photon_jump_probability(double alpha_per_m, double length_m, double nbar);

} // namespace coldlink
