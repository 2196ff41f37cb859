#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qrainbow/chain.hpp"

namespace qrainbow {

// Jordan-Wigner single-particle hopping matrix: tridiagonal in the linear
// site order (-N..-1, 1..N), hopping 2J on each bond, on-site +-2h_i from
// h_i (sz_{-i} - sz_i).
Eigen::MatrixXd hopping_matrix(const ChainSpec& spec);

struct CorrelationMatrix {
    Eigen::MatrixXd C;          // <c_m^dag c_n> in the ground state
    int n_occupied;             // number of negative single-particle modes
    bool zero_mode_warning;     // a single-particle energy within 1e-12 of zero
};

// C = V_occ V_occ^T over the negative-energy eigenvectors. Half-filling is
// not assumed; occupation is set by the sign of each single-particle energy.
CorrelationMatrix correlation_matrix(const ChainSpec& spec);

struct SubsystemSpectrum {
    // eps_k = ln((1 - zeta_k)/zeta_k) for block eigenvalues away from 0 and 1,
    // sorted by descending |eps|. This orientation is the negative of the
    // spin-side eps = -ln q^2 (anchored on the N = 1 analytic case).
    std::vector<double> eps;
    int n_clamped;  // modes with zeta within 1e-14 of 0 or 1, excluded
};

SubsystemSpectrum subsystem_ent_energies(const Eigen::MatrixXd& C, int cut);

// vN entropy of the left block from the correlation-matrix eigenvalues:
// sum over zeta of -zeta ln zeta - (1-zeta) ln(1-zeta).
double block_entropy(const Eigen::MatrixXd& C, int cut);

}  // namespace qrainbow
