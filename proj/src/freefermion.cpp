#include "qrainbow/freefermion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qrainbow {

Eigen::MatrixXd hopping_matrix(const ChainSpec& spec) {
    spec.validate();
    const int n = spec.n_pairs;
    const int size = 2 * n;
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(size, size);

    // Linear position p: site -i at p = N - i, site i at p = N - 1 + i.
    // Couplings left to right: J_N, ..., J_2, J_1, J_2, ..., J_N.
    for (int p = 0; p + 1 < size; ++p) {
        const int pair = p < n ? n - p : p - n + 2;  // pair index of the bond
        const double J = spec.J[std::min(pair, n) - 1];
        M(p, p + 1) = M(p + 1, p) = 2.0 * J;
    }
    for (int i = 1; i <= n; ++i) {
        M(n - i, n - i) = 2.0 * spec.h[i - 1];          // site -i
        M(n - 1 + i, n - 1 + i) = -2.0 * spec.h[i - 1]; // site i
    }
    return M;
}

CorrelationMatrix correlation_matrix(const ChainSpec& spec) {
    const Eigen::MatrixXd M = hopping_matrix(spec);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);

    CorrelationMatrix out;
    out.zero_mode_warning = false;
    out.n_occupied = 0;
    const Eigen::VectorXd& ev = es.eigenvalues();
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
        if (std::abs(ev[k]) < 1e-12) out.zero_mode_warning = true;
        if (ev[k] < 0.0) ++out.n_occupied;
    }
    const Eigen::MatrixXd V_occ = es.eigenvectors().leftCols(out.n_occupied);
    out.C = V_occ * V_occ.transpose();
    return out;
}

SubsystemSpectrum subsystem_ent_energies(const Eigen::MatrixXd& C, int cut) {
    if (cut <= 0 || cut > C.rows())
        throw std::invalid_argument("subsystem_ent_energies: invalid cut");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(C.topLeftCorner(cut, cut),
                                                      Eigen::EigenvaluesOnly);
    SubsystemSpectrum out;
    out.n_clamped = 0;
    for (Eigen::Index k = 0; k < cut; ++k) {
        const double zeta = es.eigenvalues()[k];
        if (zeta < 1e-14 || zeta > 1.0 - 1e-14) {
            ++out.n_clamped;
            continue;
        }
        out.eps.push_back(std::log((1.0 - zeta) / zeta));
    }
    std::sort(out.eps.begin(), out.eps.end(),
              [](double a, double b) { return std::abs(a) > std::abs(b); });
    return out;
}

double block_entropy(const Eigen::MatrixXd& C, int cut) {
    if (cut <= 0 || cut > C.rows())
        throw std::invalid_argument("block_entropy: invalid cut");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(C.topLeftCorner(cut, cut),
                                                      Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index k = 0; k < cut; ++k) {
        const double zeta = std::clamp(es.eigenvalues()[k], 0.0, 1.0);
        if (zeta > 0.0) s -= zeta * std::log(zeta);
        if (zeta < 1.0) s -= (1.0 - zeta) * std::log(1.0 - zeta);
    }
    return s;
}

}  // namespace qrainbow
