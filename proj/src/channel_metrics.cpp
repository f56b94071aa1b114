#include "coldlink/channel_metrics.hpp"

#include "coldlink/constants.hpp"
#include "coldlink/errors.hpp"
#include "coldlink/io_format.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace coldlink {

using namespace constants;

double PulseSpec::norm_sq() const {
    double sum = 0.0;
    for (const auto& a : amplitude) sum += std::norm(a);
    return sum;
}

PulseSpec gaussian_pulse(const FrequencyGrid& grid, double bandwidth, double center) {
    if (bandwidth <= 0.0) throw domain_error("pulse bandwidth must be positive");
    if (grid.half_span() - std::abs(center) < 6.0 * bandwidth)
        throw domain_error("insufficient span: grid must extend at least 6 bandwidths "
                           "on both sides of the pulse center");
    PulseSpec pulse;
    pulse.grid = grid;
    pulse.bandwidth = bandwidth;
    pulse.center = center;
    pulse.amplitude.resize(grid.n);
    double norm = 0.0;
    for (int j = 0; j < grid.n; ++j) {
        const double x = grid.delta(j) - center;
        const double a = std::exp(-x * x / (4.0 * bandwidth * bandwidth));
        pulse.amplitude[j] = a;
        norm += a * a;
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (auto& a : pulse.amplitude) a *= scale;
    return pulse;
}

namespace {

void require_same_grid(const NetworkResponse& resp, const PulseSpec& pulse) {
    if (!resp.grid.same_as(pulse.grid) ||
        static_cast<int>(pulse.amplitude.size()) != resp.grid.n)
        throw domain_error("pulse grid does not match network response grid");
}

} // namespace

double pulse_efficiency(const NetworkResponse& resp, const PulseSpec& pulse) {
    require_same_grid(resp, pulse);
    double eta = 0.0;
    for (int j = 0; j < resp.grid.n; ++j)
        eta += resp.efficiency(j) * std::norm(pulse.amplitude[j]);
    return eta;
}

AddedNoise added_noise(const NetworkResponse& resp, const PulseSpec& pulse) {
    require_same_grid(resp, pulse);
    AddedNoise out;
    for (std::size_t i = 0; i < resp.ports.size(); ++i) {
        const Port& port = resp.ports[i];
        if (!port.is_noise) continue;
        if (!(port.bath.temperature_k >= 0.0))
            throw domain_error("noise port '" + port.label + "' lacks a valid bath descriptor");
        double n_i = 0.0;
        if (!port.bath.vacuum && port.bath.temperature_k > 0.0) {
            for (int j = 0; j < resp.grid.n; ++j) {
                const double f_abs = port.center_hz + resp.grid.delta(j) / two_pi;
                n_i += std::norm(resp.s_to_output(j, static_cast<int>(i))) *
                       std::norm(pulse.amplitude[j]) * thermal_occupation(f_abs, port.bath);
            }
        }
        out.per_port.emplace_back(port.label, n_i);
        out.total += n_i;
    }
    return out;
}

double effective_thermal(double eta, double n_added_total) {
    if (eta < 0.0 || eta > 1.0) throw domain_error("eta must lie in [0, 1]");
    if (n_added_total < 0.0) throw domain_error("added noise must be non-negative");
    if (eta >= 1.0) {
        if (n_added_total == 0.0) return 0.0;
        throw domain_error("inconsistent channel: eta = 1 with nonzero added noise "
                           "violates passivity");
    }
    return n_added_total / (1.0 - eta);
}

double single_photon_fidelity(double eta, double n_th) {
    if (eta < 0.0 || eta > 1.0) throw domain_error("eta must lie in [0, 1]");
    if (n_th < 0.0) throw domain_error("n_th must be non-negative");
    if (n_th == 0.0) return eta; // pure loss: |1><1| -> eta|1><1| + (1-eta)|0><0|

    // Environment cutoff: residual thermal tail (n/(1+n))^(m*+1) < 1e-12.
    const double ratio = n_th / (1.0 + n_th);
    const int m_star = std::max(
        2, static_cast<int>(std::ceil(-12.0 * std::log(10.0) / std::log(ratio))) - 1);

    // With the environment in Fock state |m>, photon-number conservation
    // leaves a single amplitude A_m = <1,m|U|1,m> = t^(m-1)(t^2 - m r^2),
    // t = sqrt(eta); summing p_m |A_m|^2 is the truncated Fock-space result.
    double fidelity = 0.0;
    double p = 1.0 / (1.0 + n_th); // thermal weight p_0
    fidelity += p * eta;           // m = 0 term
    double eta_pow = 1.0;          // eta^(m-1)
    for (int m = 1; m <= m_star; ++m) {
        p *= ratio;
        const double a = eta - m * (1.0 - eta);
        fidelity += p * eta_pow * a * a;
        eta_pow *= eta;
    }
    return fidelity;
}

namespace {

// Unclamped capacity-bound exponents; -inf marks a non-positive argument.
double q_lower_raw(double eta) {
    const double one_minus = 1.0 - eta;
    if (eta <= 0.0 || one_minus <= 0.0) return -std::numeric_limits<double>::infinity();
    return std::log2(eta / one_minus);
}

double q_upper_raw(double eta, double nbar) {
    const double one_minus = 1.0 - eta;
    if (one_minus <= 0.0) return -std::numeric_limits<double>::infinity();
    const double arg = (eta - one_minus * nbar) / (one_minus * (nbar + 1.0));
    if (arg <= 0.0) return -std::numeric_limits<double>::infinity();
    return std::log2(arg);
}

// Trapezoid rule with the max{., 0} clamp; cells where the unclamped
// integrand changes sign contribute only over the linearly interpolated
// positive sub-interval.
double integrate_clamped(const std::vector<double>& q_raw, double spacing) {
    const int n = static_cast<int>(q_raw.size());
    double integral = 0.0;
    for (int j = 0; j + 1 < n; ++j) {
        const double a = q_raw[j];
        const double b = q_raw[j + 1];
        const double ap = std::max(a, 0.0);
        const double bp = std::max(b, 0.0);
        if (a >= 0.0 && b >= 0.0) {
            integral += 0.5 * (ap + bp) * spacing;
        } else if (a <= 0.0 && b <= 0.0) {
            continue;
        } else {
            const double pos = std::max(a, b);
            double frac = 0.5;
            if (std::isfinite(a) && std::isfinite(b)) frac = pos / (pos - std::min(a, b));
            integral += 0.5 * pos * frac * spacing;
        }
    }
    return integral;
}

} // namespace

CapacityBounds capacity_bounds(const NetworkResponse& resp, double g) {
    if (g <= 0.0) throw domain_error("capacity normalization requires g > 0");
    CapacityBounds out;

    const int n = resp.grid.n;
    std::vector<double> ql(n), qu(n);
    bool clamped_eta = false;
    for (int j = 0; j < n; ++j) {
        double eta = resp.efficiency(j);
        double one_minus = 1.0 - eta;
        if (one_minus <= 0.0) {
            one_minus = 1e-15; // perfect channel has unbounded discrete capacity
            eta = 1.0 - one_minus;
            clamped_eta = true;
        }
        double noise = 0.0;
        for (std::size_t i = 0; i < resp.ports.size(); ++i) {
            const Port& port = resp.ports[i];
            if (!port.is_noise || port.bath.vacuum || port.bath.temperature_k <= 0.0) continue;
            const double f_abs = port.center_hz + resp.grid.delta(j) / two_pi;
            noise += std::norm(resp.s_to_output(j, static_cast<int>(i))) *
                     thermal_occupation(f_abs, port.bath);
        }
        const double nbar = noise / one_minus;
        ql[j] = q_lower_raw(eta);
        qu[j] = q_upper_raw(eta, nbar);
        if (std::max(ql[j], 0.0) > std::max(qu[j], 0.0)) ++out.lower_exceeds_upper_points;
    }
    if (clamped_eta)
        out.warnings.push_back("eta reached 1 on the grid; capacity bound diverges and was "
                               "clamped at 1 - 1e-15");
    if (out.lower_exceeds_upper_points > 0)
        out.warnings.push_back(std::to_string(out.lower_exceeds_upper_points) +
                               " grid point(s) with q_L > q_U (pure-loss lower bound is "
                               "independent of nbar)");

    out.lower_qubits_per_s = integrate_clamped(ql, resp.grid.spacing) / two_pi;
    out.upper_qubits_per_s = integrate_clamped(qu, resp.grid.spacing) / two_pi;
    out.lower_per_g = out.lower_qubits_per_s / g;
    out.upper_per_g = out.upper_qubits_per_s / g;
    out.lower_per_g_hz = out.lower_qubits_per_s / (g / two_pi);
    out.upper_per_g_hz = out.upper_qubits_per_s / (g / two_pi);
    return out;
}

std::string ChannelSummary::csv_header() {
    return "eta,n_added_total,n_th,fidelity,qcap_lower_per_g,qcap_upper_per_g,"
           "qcap_lower_qubits_s,qcap_upper_qubits_s";
}

std::string ChannelSummary::csv_row() const {
    validate();
    std::ostringstream out;
    out << io::format_double(eta) << ',' << io::format_double(n_added_total) << ','
        << io::format_double(n_th) << ',' << io::format_double(fidelity) << ','
        << io::format_double(capacity.lower_per_g) << ','
        << io::format_double(capacity.upper_per_g) << ','
        << io::format_double(capacity.lower_qubits_per_s) << ','
        << io::format_double(capacity.upper_qubits_per_s);
    return out.str();
}

std::string ChannelSummary::to_json() const {
    validate();
    std::ostringstream out;
    out << "{\"eta\":" << io::format_double(eta)
        << ",\"n_added_total\":" << io::format_double(n_added_total)
        << ",\"n_th\":" << io::format_double(n_th)
        << ",\"fidelity\":" << io::format_double(fidelity)
        << ",\"qcap_lower_per_g\":" << io::format_double(capacity.lower_per_g)
        << ",\"qcap_upper_per_g\":" << io::format_double(capacity.upper_per_g)
        << ",\"qcap_lower_per_g_hz\":" << io::format_double(capacity.lower_per_g_hz)
        << ",\"qcap_upper_per_g_hz\":" << io::format_double(capacity.upper_per_g_hz)
        << ",\"qcap_lower_qubits_s\":" << io::format_double(capacity.lower_qubits_per_s)
        << ",\"qcap_upper_qubits_s\":" << io::format_double(capacity.upper_qubits_per_s)
        << ",\"n_added_per_port\":{";
    bool first = true;
    for (const auto& [label, value] : noise_breakdown.per_port) {
        if (!first) out << ',';
        first = false;
        out << '"' << label << "\":" << io::format_double(value);
    }
    out << "}}";
    return out.str();
}

void ChannelSummary::validate() const {
    if (!(eta >= 0.0 && eta <= 1.0))
        throw domain_error("channel summary: eta outside [0, 1]");
    if (!(fidelity >= 0.0 && fidelity <= 1.0))
        throw domain_error("channel summary: fidelity outside [0, 1]");
    if (!(n_added_total >= 0.0))
        throw domain_error("channel summary: negative added noise");
}

ChannelSummary summarize_channel(const NetworkResponse& resp, const PulseSpec& pulse,
                                 double g) {
    ChannelSummary summary;
    summary.eta = pulse_efficiency(resp, pulse);
    summary.noise_breakdown = added_noise(resp, pulse);
    summary.n_added_total = summary.noise_breakdown.total;
    summary.n_th = effective_thermal(summary.eta, summary.n_added_total);
    summary.fidelity = single_photon_fidelity(summary.eta, summary.n_th);
    summary.capacity = capacity_bounds(resp, g);
    summary.validate();
    return summary;
}

} // namespace coldlink
