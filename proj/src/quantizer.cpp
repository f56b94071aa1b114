#include "coldlink/quantizer.hpp"

#include "coldlink/constants.hpp"
#include "coldlink/errors.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace coldlink {

using namespace constants;

ModeSolution quantize_netlist(const Netlist& netlist) {
    netlist.validate();
    const int n = static_cast<int>(netlist.nodes.size());
    if (n == 0) throw netlist_error("netlist has no non-ground nodes");

    Eigen::MatrixXd cap = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd ind_inv = Eigen::MatrixXd::Zero(n, n);

    auto stamp = [&](Eigen::MatrixXd& mat, int i, int j, double value) {
        if (i >= 0) mat(i, i) += value;
        if (j >= 0) mat(j, j) += value;
        if (i >= 0 && j >= 0) {
            mat(i, j) -= value;
            mat(j, i) -= value;
        }
    };

    for (const auto& b : netlist.branches) {
        const int i = netlist.node_index(b.from);
        const int j = netlist.node_index(b.to);
        switch (b.kind) {
        case BranchKind::Capacitor: stamp(cap, i, j, b.value); break;
        case BranchKind::Inductor: stamp(ind_inv, i, j, 1.0 / b.value); break;
        case BranchKind::Junction: break; // linear open at the saddle point
        }
    }

    // The capacitance matrix is the kinetic metric; it must be positive
    // definite for the eigenproblem to be well posed.
    {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ces(cap, Eigen::EigenvaluesOnly);
        const double cmin = ces.eigenvalues().minCoeff();
        const double cmax = ces.eigenvalues().maxCoeff();
        if (cmax <= 0.0 || cmin <= cmax * 1e-14)
            throw netlist_error("ill-posed netlist: singular capacitance matrix "
                                "(every node needs a capacitive path to ground)");
    }

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(ind_inv, cap);
    if (solver.info() != Eigen::Success)
        throw netlist_error("ill-posed netlist: eigenproblem failed to converge");

    const Eigen::VectorXd lambda = solver.eigenvalues();   // ascending
    const Eigen::MatrixXd vecs = solver.eigenvectors();    // v^T C v = I

    const Branch& jb = netlist.junction_branch();
    const int ji = netlist.node_index(jb.from);
    const int jj = netlist.node_index(jb.to);

    const double lambda_max = std::max(lambda.maxCoeff(), 0.0);
    const double zero_tol = lambda_max * 1e-10;

    ModeSolution out;
    for (int k = 0; k < n; ++k) {
        if (lambda(k) <= zero_tol) {
            ++out.dropped_zero_modes;
            continue;
        }
        const double omega = std::sqrt(lambda(k));
        const double vi = ji >= 0 ? vecs(ji, k) : 0.0;
        const double vj = jj >= 0 ? vecs(jj, k) : 0.0;
        // zero-point flux of mode k across the junction branch
        const double flux_zpf = std::abs(vi - vj) * std::sqrt(hbar / (2.0 * omega));
        Mode mode;
        mode.omega = omega;
        mode.phi_zpf = flux_zpf / reduced_flux_quantum;
        mode.impedance = 2.0 * flux_zpf * flux_zpf / hbar;
        out.modes.push_back(mode);
    }
    if (out.dropped_zero_modes > 0)
        out.warnings.push_back(std::to_string(out.dropped_zero_modes) +
                               " zero-frequency mode(s) excluded (no inductive restoring force)");
    return out;
}

double coupling_rate(double e_j_joules, const PumpSpec& pump, double phi_a, double phi_b) {
    if (e_j_joules < 0.0 || pump.epsilon_p < 0.0 || pump.beta < 0.0 || phi_a < 0.0 ||
        phi_b < 0.0)
        throw domain_error("coupling rate requires non-negative inputs");
    return (e_j_joules / hbar) * pump.epsilon_p * pump.beta * phi_b * phi_b * phi_a;
}

double longitudinal_baseline(double g0, double n_c) {
    if (g0 < 0.0 || n_c < 0.0)
        throw domain_error("longitudinal baseline requires non-negative inputs");
    return g0 * std::sqrt(n_c);
}

} // namespace coldlink
