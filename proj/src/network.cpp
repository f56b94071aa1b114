#include "coldlink/network.hpp"

#include "coldlink/constants.hpp"
#include "coldlink/errors.hpp"
#include "coldlink/io_format.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>

namespace coldlink {

using namespace constants;
using cd = std::complex<double>;

FrequencyGrid FrequencyGrid::symmetric(double half_span, int n, double omega_a,
                                       double omega_b) {
    if (n < 3 || n % 2 == 0)
        throw domain_error("frequency grid needs an odd point count >= 3, got " +
                           std::to_string(n));
    if (half_span <= 0.0) throw domain_error("frequency grid span must be positive");
    FrequencyGrid grid;
    grid.n = n;
    grid.spacing = 2.0 * half_span / (n - 1);
    grid.omega_a = omega_a;
    grid.omega_b = omega_b;
    return grid;
}

bool FrequencyGrid::same_as(const FrequencyGrid& other, double rel_tol) const {
    auto close = [rel_tol](double a, double b) {
        return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b));
    };
    return n == other.n && close(spacing, other.spacing) && close(omega_a, other.omega_a) &&
           close(omega_b, other.omega_b);
}

double NetworkResponse::efficiency(int j) const {
    return std::norm(s_to_output(j, input_index));
}

ScatteringNetwork join(const ScatteringNetwork& a, const ScatteringNetwork& b) {
    ScatteringNetwork out;
    out.ports = a.ports;
    out.ports.insert(out.ports.end(), b.ports.begin(), b.ports.end());
    const auto na = a.s.rows(), nb = b.s.rows();
    out.s = Eigen::MatrixXcd::Zero(na + nb, na + nb);
    out.s.topLeftCorner(na, na) = a.s;
    out.s.bottomRightCorner(nb, nb) = b.s;
    return out;
}

ScatteringNetwork connect(const ScatteringNetwork& net, int p, int q) {
    const int n = static_cast<int>(net.s.rows());
    if (p < 0 || q < 0 || p >= n || q >= n || p == q)
        throw domain_error("connect: invalid port pair");

    std::vector<int> keep;
    keep.reserve(n - 2);
    for (int i = 0; i < n; ++i)
        if (i != p && i != q) keep.push_back(i);
    const int m = static_cast<int>(keep.size());

    // Incoming waves on the joined ports follow from a_p = b_q, a_q = b_p:
    //   [1 - S_qp, -S_qq ] [a_p]   [S_q,keep]
    //   [-S_pp, 1 - S_pq ] [a_q] = [S_p,keep] a_keep
    Eigen::Matrix2cd lhs;
    lhs << 1.0 - net.s(q, p), -net.s(q, q),
           -net.s(p, p), 1.0 - net.s(p, q);
    Eigen::Matrix<cd, 2, Eigen::Dynamic> rhs(2, m);
    for (int c = 0; c < m; ++c) {
        rhs(0, c) = net.s(q, keep[c]);
        rhs(1, c) = net.s(p, keep[c]);
    }
    const Eigen::Matrix<cd, 2, Eigen::Dynamic> x = lhs.inverse() * rhs;

    ScatteringNetwork out;
    out.ports.reserve(m);
    for (int i : keep) out.ports.push_back(net.ports[i]);
    out.s.resize(m, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            out.s(r, c) = net.s(keep[r], keep[c]) + net.s(keep[r], p) * x(0, c) +
                          net.s(keep[r], q) * x(1, c);
    return out;
}

namespace {

void check_link_preconditions(const TransducerSpec& t_a, const TransducerSpec& t_b,
                              std::vector<std::string>& warnings) {
    auto rel_diff = [](double a, double b) {
        const double scale = std::max(std::abs(a), std::abs(b));
        return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
    };
    if (rel_diff(t_a.omega_a, t_b.omega_a) > 1e-6 || rel_diff(t_a.omega_b, t_b.omega_b) > 1e-6)
        throw domain_error("assemble_link: transducer mode frequencies mismatch beyond 1e-6");
    if (rel_diff(t_a.g, t_b.g) > 1e-12 || rel_diff(t_a.kappa_a_ext, t_b.kappa_a_ext) > 1e-12 ||
        rel_diff(t_a.kappa_b_ext, t_b.kappa_b_ext) > 1e-12 ||
        rel_diff(t_a.kappa_a_int, t_b.kappa_a_int) > 1e-12 ||
        rel_diff(t_a.kappa_b_int, t_b.kappa_b_int) > 1e-12)
        warnings.push_back("asymmetric link: transducer rates differ between the two ends");
}

} // namespace

NetworkResponse assemble_link(const TransducerSpec& t_a, const CableSpec& cable,
                              const TransducerSpec& t_b, const FrequencyGrid& grid,
                              SolverMode mode) {
    NetworkResponse resp;
    resp.grid = grid;
    resp.mode = mode;

    for (const auto& w : t_a.validate()) resp.warnings.push_back("transducer A: " + w);
    for (const auto& w : t_b.validate()) resp.warnings.push_back("transducer B: " + w);
    cable.validate();
    check_link_preconditions(t_a, t_b, resp.warnings);
    if ((grid.omega_a - grid.half_span()) <= 0.0)
        throw domain_error("assemble_link: grid span reaches non-positive absolute frequency");

    const double f_a = grid.omega_a / two_pi;
    const double f_b = grid.omega_b / two_pi;
    resp.ports = {
        {"in_b_ext_A", f_b, Bath{0.0, true}, false},
        {"a_int_A", f_a, Bath{t_a.temperature_k, false}, true},
        {"b_int_A", f_b, Bath{t_a.temperature_k, t_a.b_bath_vacuum}, true},
        {"cable_loss1", f_a, Bath{cable.temperature_k, false}, true},
        {"cable_loss2", f_a, Bath{cable.temperature_k, false}, true},
        {"a_int_B", f_a, Bath{t_b.temperature_k, false}, true},
        {"b_int_B", f_b, Bath{t_b.temperature_k, t_b.b_bath_vacuum}, true},
        {"out_b_ext_B", f_b, Bath{0.0, true}, false},
    };
    resp.input_index = 0;
    resp.output_index = 7;
    resp.s_to_output = Eigen::MatrixXcd::Zero(grid.n, 8);

    for (int j = 0; j < grid.n; ++j) {
        const double delta = grid.delta(j);
        const double f_abs = (grid.omega_a + delta) / two_pi;
        const ScatteringNetwork s_a = transducer_smatrix(delta, t_a);
        const ScatteringNetwork s_b = transducer_smatrix(delta, t_b);
        const ScatteringNetwork s_c = cable_smatrix(f_abs, cable);

        if (mode == SolverMode::SinglePass) {
            // out = S^B_{b<-a} * cable * S^A_{a<-...}; forward transmissions only.
            // Transducer port order [a_ext, a_int, b_ext, b_int]; cable
            // [end1, end2, loss1, loss2] with loss1 feeding end2.
            const cd b_from_a = s_b.s(2, 0);
            const cd t_cable = s_c.s(1, 0);
            const cd through_b = b_from_a * t_cable;
            resp.s_to_output(j, 0) = through_b * s_a.s(0, 2); // signal
            resp.s_to_output(j, 1) = through_b * s_a.s(0, 1); // A a_int
            resp.s_to_output(j, 2) = through_b * s_a.s(0, 3); // A b_int
            resp.s_to_output(j, 3) = b_from_a * s_c.s(1, 2);  // cable loss1
            resp.s_to_output(j, 4) = 0.0;                     // cable loss2 feeds end1 only
            resp.s_to_output(j, 5) = s_b.s(2, 1);             // B a_int
            resp.s_to_output(j, 6) = s_b.s(2, 3);             // B b_int
            resp.s_to_output(j, 7) = 0.0;                     // no output reflection
        } else {
            // Global composition: ports 0..3 = A, 4..7 = cable, 8..11 = B.
            ScatteringNetwork full = join(join(s_a, s_c), s_b);
            full = connect(full, 0, 4); // A.a_ext <-> cable.end1
            // removing ports {0,4} shifts cable.end2 (5) -> 3 and B.a_ext (8) -> 6
            full = connect(full, 3, 6);
            // remaining: [A.a_int, A.b_ext, A.b_int, c.loss1, c.loss2,
            //             B.a_int, B.b_ext, B.b_int]
            const int out = 6;
            resp.s_to_output(j, 0) = full.s(out, 1);
            resp.s_to_output(j, 1) = full.s(out, 0);
            resp.s_to_output(j, 2) = full.s(out, 2);
            resp.s_to_output(j, 3) = full.s(out, 3);
            resp.s_to_output(j, 4) = full.s(out, 4);
            resp.s_to_output(j, 5) = full.s(out, 5);
            resp.s_to_output(j, 6) = full.s(out, 7);
            resp.s_to_output(j, 7) = full.s(out, 6);
        }
    }

    // Band-coverage check: the grid must resolve the whole conversion band.
    double peak = 0.0;
    for (int j = 0; j < grid.n; ++j) peak = std::max(peak, resp.efficiency(j));
    const double edge = std::max(resp.efficiency(0), resp.efficiency(grid.n - 1));
    if (peak > 0.0 && edge > 0.01 * peak)
        resp.warnings.push_back("grid too narrow: band-edge efficiency above 1% of peak");

    return resp;
}

PassivityReport verify_passivity(const NetworkResponse& resp) {
    PassivityReport report;
    for (int j = 0; j < resp.grid.n; ++j) {
        const double row_sum = resp.s_to_output.row(j).squaredNorm();
        if (row_sum > report.max_row_sum) {
            report.max_row_sum = row_sum;
            report.worst_grid_index = j;
        }
        if (row_sum > 1.0 + 1e-9) ++report.violation_count;
    }
    return report;
}

void dump_response_csv(const NetworkResponse& resp, std::ostream& out) {
    out << "delta_hz,port_label,re,im\n";
    for (int j = 0; j < resp.grid.n; ++j) {
        const double delta_hz = resp.grid.delta(j) / two_pi;
        for (std::size_t i = 0; i < resp.ports.size(); ++i) {
            const cd v = resp.s_to_output(j, static_cast<int>(i));
            out << io::format_double(delta_hz) << ',' << resp.ports[i].label << ','
                << io::format_double(v.real()) << ',' << io::format_double(v.imag()) << '\n';
        }
    }
}

} // namespace coldlink
