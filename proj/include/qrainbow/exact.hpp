#pragma once

#include <Eigen/Dense>

#include "qrainbow/chain.hpp"

namespace qrainbow {

// Normalized amplitude vector over the 2^{2N} basis in BasisConvention order.
struct PureState {
    int n_sites = 0;
    Eigen::VectorXd amplitudes;

    int n_pairs() const { return n_sites / 2; }
};

// Deterministic sign: first amplitude above threshold made positive.
void fix_phase(Eigen::VectorXd& v, double threshold = 1e-12);

struct GroundStateResult {
    double energy = 0.0;
    PureState state;
    double gap = 0.0;
    int degeneracy = 1;
    // Orthonormal columns spanning the (near-)degenerate ground subspace,
    // embedded in the full basis.
    Eigen::MatrixXd ground_subspace;

    // Squared overlap with the ground subspace (projector overlap, so the
    // result is basis-independent when the ground state is degenerate).
    double fidelity(const PureState& ansatz) const;
};

enum class SectorSearch {
    all,      // diagonalize every magnetization sector
    sz_zero,  // restrict to the Sz = 0 sector
};

struct GroundStateOptions {
    std::size_t size_cap = kDefaultSizeCap;
    // The rainbow ansatz lives in Sz = 0 but the exact ground state is not
    // assumed to; all sectors are searched by default up to N = 4.
    SectorSearch search = SectorSearch::all;
    double gap_tol_scale = 1e-10;  // degeneracy window = scale * max|eigenvalue|
};

// Sector-blocked ground state; blocks diagonalized in parallel, merged
// deterministically.
GroundStateResult ground_state(const ChainSpec& spec,
                               const GroundStateOptions& opts = {});

// Serial full-matrix reference: dense diagonalization of the unblocked
// 2^{2N} Hamiltonian. Oracle for the blocked path and benchmark baseline.
GroundStateResult ground_state_reference(const ChainSpec& spec,
                                         std::size_t size_cap = kDefaultSizeCap);

// |<a|b>|^2
double fidelity(const PureState& a, const PureState& b);

// Variational energy <psi|H|psi> of an arbitrary state.
double expectation_energy(const ChainSpec& spec, const PureState& psi,
                          std::size_t size_cap = kDefaultSizeCap);

}  // namespace qrainbow
