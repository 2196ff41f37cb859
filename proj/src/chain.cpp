#include "qrainbow/chain.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "qrainbow/errors.hpp"

namespace qrainbow {

void ChainSpec::validate() const {
    if (n_pairs <= 0) throw std::invalid_argument("ChainSpec: n_pairs must be positive");
    if (J.size() != std::size_t(n_pairs) || h.size() != std::size_t(n_pairs))
        throw std::invalid_argument("ChainSpec: J and h must each have n_pairs entries");
    for (int i = 0; i < n_pairs; ++i) {
        if (!(J[i] > 0.0))
            throw std::invalid_argument("ChainSpec: J[" + std::to_string(i + 1) +
                                        "] must be positive");
        if (!std::isfinite(h[i]))
            throw std::invalid_argument("ChainSpec: h[" + std::to_string(i + 1) +
                                        "] must be finite");
    }
}

namespace {

struct Bond {
    int bit_a;
    int bit_b;
    double J;
};

// Bonds of Eq.-8 geometry in bit positions: central (-1,1) with J_1, then
// (-i,-(i-1)) and (i-1,i) with J_i for i >= 2.
std::vector<Bond> bond_list(const ChainSpec& spec) {
    const BasisConvention basis(spec.n_pairs);
    std::vector<Bond> bonds;
    bonds.push_back({basis.bit_of_site(-1), basis.bit_of_site(1), spec.J[0]});
    for (int i = 2; i <= spec.n_pairs; ++i) {
        bonds.push_back({basis.bit_of_site(-i), basis.bit_of_site(-(i - 1)), spec.J[i - 1]});
        bonds.push_back({basis.bit_of_site(i - 1), basis.bit_of_site(i), spec.J[i - 1]});
    }
    return bonds;
}

double diagonal_element(const ChainSpec& spec, const BasisConvention& basis,
                        std::uint64_t index) {
    double d = 0.0;
    for (int i = 1; i <= spec.n_pairs; ++i)
        d += spec.h[i - 1] * (basis.spin_z(index, -i) - basis.spin_z(index, i));
    return d;
}

void check_cap(const ChainSpec& spec, std::size_t size_cap) {
    spec.validate();
    if (spec.dimension() > size_cap)
        throw resource_error("Hilbert space dimension " + std::to_string(spec.dimension()) +
                             " exceeds cap " + std::to_string(size_cap));
}

}  // namespace

Eigen::MatrixXd build_full_hamiltonian(const ChainSpec& spec, std::size_t size_cap) {
    check_cap(spec, size_cap);
    const BasisConvention basis(spec.n_pairs);
    const std::size_t dim = spec.dimension();
    const auto bonds = bond_list(spec);

    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
    for (std::uint64_t a = 0; a < dim; ++a) {
        H(a, a) = diagonal_element(spec, basis, a);
        for (const Bond& bond : bonds) {
            const bool sa = (a >> bond.bit_a) & 1u;
            const bool sb = (a >> bond.bit_b) & 1u;
            if (sa == sb) continue;
            // sigma^x sigma^x + sigma^y sigma^y exchanges the two spins
            const std::uint64_t b =
                a ^ (std::uint64_t(1) << bond.bit_a) ^ (std::uint64_t(1) << bond.bit_b);
            H(a, b) += 2.0 * bond.J;
        }
    }
    return H;
}

std::vector<SectorBlock> build_sector_blocks(const ChainSpec& spec, std::size_t size_cap) {
    check_cap(spec, size_cap);
    const BasisConvention basis(spec.n_pairs);
    const int n_sites = 2 * spec.n_pairs;
    const std::size_t dim = spec.dimension();
    const auto bonds = bond_list(spec);

    std::vector<SectorBlock> blocks(n_sites + 1);
    for (int k = 0; k <= n_sites; ++k) blocks[k].magnetization = 2 * k - n_sites;
    for (std::uint64_t a = 0; a < dim; ++a)
        blocks[std::popcount(a)].indices.push_back(a);

#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k <= n_sites; ++k) {
        SectorBlock& blk = blocks[k];
        const std::size_t d = blk.indices.size();
        // index -> position within the sector
        std::vector<std::int64_t> pos(dim, -1);
        for (std::size_t p = 0; p < d; ++p) pos[blk.indices[p]] = std::int64_t(p);

        blk.matrix = Eigen::MatrixXd::Zero(d, d);
        for (std::size_t p = 0; p < d; ++p) {
            const std::uint64_t a = blk.indices[p];
            blk.matrix(p, p) = diagonal_element(spec, basis, a);
            for (const Bond& bond : bonds) {
                const bool sa = (a >> bond.bit_a) & 1u;
                const bool sb = (a >> bond.bit_b) & 1u;
                if (sa == sb) continue;
                const std::uint64_t b =
                    a ^ (std::uint64_t(1) << bond.bit_a) ^ (std::uint64_t(1) << bond.bit_b);
                blk.matrix(p, pos[b]) += 2.0 * bond.J;
            }
        }
    }
    return blocks;
}

double ground_energy_pair(double J, double h) {
    if (!(J > 0.0)) throw std::invalid_argument("ground_energy_pair: J must be positive");
    const QParam q = q_from_ratio(h / J);
    return -quantum_dimension_2(q) * J;
}

}  // namespace qrainbow
