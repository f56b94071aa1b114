#include "coldlink/link_physics.hpp"

#include "coldlink/constants.hpp"
#include "coldlink/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace coldlink {

using namespace constants;
using cd = std::complex<double>;

QiModel::QiModel(std::vector<std::pair<double, double>> table) : table_(std::move(table)) {
    if (table_.empty()) throw domain_error("Qi table must not be empty");
    std::sort(table_.begin(), table_.end());
    for (const auto& [f, q] : table_) {
        if (q <= 0.0) throw domain_error("Qi table entries must be positive");
        if (f < 0.0) throw domain_error("Qi table frequencies must be non-negative");
    }
}

double QiModel::at(double f_hz) const {
    if (table_.empty()) return constant_;
    if (f_hz <= table_.front().first) return table_.front().second;
    if (f_hz >= table_.back().first) return table_.back().second;
    auto hi = std::upper_bound(table_.begin(), table_.end(), std::make_pair(f_hz, 0.0));
    auto lo = hi - 1;
    const double t = (f_hz - lo->first) / (hi->first - lo->first);
    return lo->second + t * (hi->second - lo->second);
}

void CableSpec::validate() const {
    if (length_m <= 0.0) throw domain_error("cable length must be positive");
    if (eps_r < 1.0) throw domain_error("cable eps_r must be >= 1");
    if (temperature_k < 0.0) throw domain_error("cable temperature must be >= 0");
    if (qi.is_constant() && qi.constant_value() <= 0.0)
        throw domain_error("cable Qi must be positive");
}

std::vector<std::string> TransducerSpec::validate() const {
    if (omega_a <= 0.0 || omega_b <= 0.0)
        throw domain_error("transducer mode frequencies must be positive");
    if (kappa_a_ext < 0.0 || kappa_b_ext < 0.0 || kappa_a_int < 0.0 || kappa_b_int < 0.0)
        throw domain_error("transducer linewidths must be non-negative");
    if (g < 0.0) throw domain_error("conversion rate g must be non-negative");
    if (temperature_k < 0.0) throw domain_error("transducer temperature must be >= 0");
    if (g >= omega_a)
        throw domain_error("g >= omega_a: rotating-wave converter model invalid");

    std::vector<std::string> warnings;
    if (g > omega_a / 5.0)
        warnings.push_back("g exceeds omega_a/5; rotating-wave converter model is marginal");
    if (omega_b <= omega_a)
        warnings.push_back("a-mode frequency at or above b-mode; sweep treats it as the "
                           "transmission frequency with the converter model unchanged");
    return warnings;
}

int ScatteringNetwork::port_index(const std::string& label) const {
    for (std::size_t i = 0; i < ports.size(); ++i)
        if (ports[i].label == label) return static_cast<int>(i);
    return -1;
}

double ScatteringNetwork::max_unitarity_defect() const {
    const Eigen::MatrixXcd defect =
        s * s.adjoint() - Eigen::MatrixXcd::Identity(s.rows(), s.cols());
    return defect.cwiseAbs().maxCoeff();
}

double ScatteringNetwork::max_asymmetry() const {
    return (s - s.transpose()).cwiseAbs().maxCoeff();
}

double attenuation_constant(double f_hz, const CableSpec& cable) {
    if (f_hz < 0.0) throw domain_error("attenuation frequency must be >= 0");
    if (f_hz == 0.0) return 0.0;
    const double qi = cable.qi.at(f_hz);
    if (qi <= 0.0) throw domain_error("Qi(f) must be positive");
    return pi * std::sqrt(cable.eps_r) * f_hz / (qi * speed_of_light);
}

double attenuation_db_per_km(double f_hz, const CableSpec& cable) {
    // field alpha in Np/m; power decay 2*alpha; dB = 10 log10(e) per neper
    return 2.0 * attenuation_constant(f_hz, cable) * 1000.0 * 10.0 / std::log(10.0);
}

double thermal_occupation(double f_hz, double temperature_k) {
    if (f_hz <= 0.0) throw domain_error("thermal occupation requires f > 0");
    if (temperature_k < 0.0) throw domain_error("temperature must be >= 0");
    if (temperature_k == 0.0) return 0.0;
    const double x = planck * f_hz / (boltzmann * temperature_k);
    // 1/expm1 underflows to 0 for large x and stays accurate for small x.
    return 1.0 / std::expm1(x);
}

double thermal_occupation(double f_hz, const Bath& bath) {
    if (bath.vacuum) return 0.0;
    return thermal_occupation(f_hz, bath.temperature_k);
}

ScatteringNetwork cable_smatrix(double f_hz, const CableSpec& cable) {
    if (f_hz <= 0.0) throw domain_error("cable S-matrix requires f > 0");
    cable.validate();

    const double alpha = attenuation_constant(f_hz, cable);
    const double eta_c = std::exp(-2.0 * alpha * cable.length_m);
    const double beta_l =
        two_pi * f_hz * std::sqrt(cable.eps_r) / speed_of_light * cable.length_m;

    const cd t = std::sqrt(eta_c) * std::exp(cd(0.0, beta_l));
    const double r = std::sqrt(std::max(0.0, 1.0 - eta_c));

    ScatteringNetwork net;
    net.ports = {
        {"end1", f_hz, Bath{0.0, true}, false},
        {"end2", f_hz, Bath{0.0, true}, false},
        {"loss1", f_hz, Bath{cable.temperature_k, false}, true},
        {"loss2", f_hz, Bath{cable.temperature_k, false}, true},
    };
    net.s = Eigen::MatrixXcd::Zero(4, 4);
    net.s(0, 1) = t;
    net.s(1, 0) = t;
    net.s(0, 3) = r;
    net.s(3, 0) = r;
    net.s(1, 2) = r;
    net.s(2, 1) = r;
    net.s(2, 3) = -std::conj(t);
    net.s(3, 2) = -std::conj(t);
    return net;
}

ScatteringNetwork transducer_smatrix(double delta, const TransducerSpec& spec) {
    spec.validate();

    const double ka = spec.kappa_a();
    const double kb = spec.kappa_b();

    Eigen::Matrix2cd m;
    m << cd(ka / 2.0, -delta), cd(0.0, spec.g),
         cd(0.0, spec.g),      cd(kb / 2.0, -delta);

    Eigen::Matrix<double, 4, 2> k;
    k << std::sqrt(spec.kappa_a_ext), 0.0,
         std::sqrt(spec.kappa_a_int), 0.0,
         0.0, std::sqrt(spec.kappa_b_ext),
         0.0, std::sqrt(spec.kappa_b_int);

    const Eigen::Matrix2cd m_inv = m.inverse();

    ScatteringNetwork net;
    const double f_a = (spec.omega_a + delta) / two_pi;
    const double f_b = (spec.omega_b + delta) / two_pi;
    net.ports = {
        {"a_ext", f_a, Bath{0.0, true}, false},
        {"a_int", f_a, Bath{spec.temperature_k, false}, true},
        {"b_ext", f_b, Bath{0.0, true}, false},
        {"b_int", f_b, Bath{spec.temperature_k, spec.b_bath_vacuum}, true},
    };
    net.s = k.cast<cd>() * m_inv * k.transpose().cast<cd>() -
            Eigen::Matrix4cd::Identity();
    return net;
}

double peak_conversion_efficiency(const TransducerSpec& spec) {
    const double ka = spec.kappa_a();
    const double kb = spec.kappa_b();
    if (ka <= 0.0 || kb <= 0.0) return 0.0;
    const double coop = 4.0 * spec.g * spec.g / (ka * kb);
    return (spec.kappa_a_ext / ka) * (spec.kappa_b_ext / kb) * 4.0 * coop /
           ((1.0 + coop) * (1.0 + coop));
}

double photon_jump_probability(double alpha_per_m, double length_m, double nbar) {
    if (alpha_per_m < 0.0 || length_m < 0.0 || nbar < 0.0)
        throw domain_error("photon jump probability requires non-negative inputs");
    return alpha_per_m * length_m * (4.0 * nbar + 1.0);
}

} // namespace coldlink
