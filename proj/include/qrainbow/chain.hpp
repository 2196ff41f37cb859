#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qrainbow/qalgebra.hpp"

namespace qrainbow {

inline constexpr std::size_t kDefaultSizeCap = std::size_t(1) << 14;

// Concentric open chain of 2N sites labelled (-N..-1, 1..N).
// J[0] is the central bond J_1; J[i-1], h[i-1] belong to pair i.
struct ChainSpec {
    int n_pairs = 0;
    std::vector<double> J;
    std::vector<double> h;

    void validate() const;
    std::size_t dimension() const { return std::size_t(1) << (2 * n_pairs); }
};

// Bit-order convention: site order (-N, ..., -1, 1, ..., N) maps to bit
// positions 0 .. 2N-1; spin-up is bit value 1; basis index = sum bit_l * 2^l.
struct BasisConvention {
    int n_pairs;

    explicit BasisConvention(int n) : n_pairs(n) {}

    // site label in {-N..-1, 1..N} -> bit position
    int bit_of_site(int site) const {
        return site < 0 ? n_pairs + site : n_pairs - 1 + site;
    }

    int spin_z(std::uint64_t index, int site) const {
        return (index >> bit_of_site(site)) & 1u ? +1 : -1;
    }
};

struct SectorBlock {
    int magnetization;                  // total sigma^z eigenvalue
    std::vector<std::uint64_t> indices; // sorted basis indices of the sector
    Eigen::MatrixXd matrix;             // H restricted to the sector
};

// Full dense 2^{2N} x 2^{2N} Hamiltonian, no sector blocking.
Eigen::MatrixXd build_full_hamiltonian(const ChainSpec& spec,
                                       std::size_t size_cap = kDefaultSizeCap);

// Magnetization-sector blocks; blocks are assembled in parallel.
std::vector<SectorBlock> build_sector_blocks(const ChainSpec& spec,
                                             std::size_t size_cap = kDefaultSizeCap);

// Exact two-site ground energy -[2]_q J with sinh(gamma) = h/J.
double ground_energy_pair(double J, double h);

}  // namespace qrainbow
