#include "qrainbow/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qrainbow {

void fix_phase(Eigen::VectorXd& v, double threshold) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > threshold) {
            if (v[i] < 0.0) v = -v;
            return;
        }
    }
}

double GroundStateResult::fidelity(const PureState& ansatz) const {
    if (ansatz.amplitudes.size() != ground_subspace.rows())
        throw std::invalid_argument("fidelity: dimension mismatch");
    return (ground_subspace.transpose() * ansatz.amplitudes).squaredNorm();
}

double fidelity(const PureState& a, const PureState& b) {
    if (a.amplitudes.size() != b.amplitudes.size())
        throw std::invalid_argument("fidelity: dimension mismatch");
    const double ov = a.amplitudes.dot(b.amplitudes);
    return ov * ov;
}

namespace {

struct SectorEigen {
    const SectorBlock* block;
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};

GroundStateResult assemble(const ChainSpec& spec,
                           const std::vector<SectorEigen>& solved,
                           double gap_tol_scale) {
    const std::size_t dim = spec.dimension();

    double max_abs = 0.0;
    double e0 = std::numeric_limits<double>::infinity();
    for (const auto& s : solved) {
        if (s.values.size() == 0) continue;
        max_abs = std::max(max_abs, s.values.cwiseAbs().maxCoeff());
        e0 = std::min(e0, s.values.minCoeff());
    }
    const double gap_tol = gap_tol_scale * std::max(max_abs, 1.0);

    GroundStateResult result;
    result.energy = e0;

    // Gather every eigenvector within gap_tol of the minimum, and the gap to
    // the first level outside the window.
    double next = std::numeric_limits<double>::infinity();
    std::vector<Eigen::VectorXd> ground_vecs;
    for (const auto& s : solved) {
        for (Eigen::Index j = 0; j < s.values.size(); ++j) {
            const double e = s.values[j];
            if (e - e0 <= gap_tol) {
                Eigen::VectorXd full = Eigen::VectorXd::Zero(dim);
                for (std::size_t p = 0; p < s.block->indices.size(); ++p)
                    full[s.block->indices[p]] = s.vectors(p, j);
                ground_vecs.push_back(std::move(full));
            } else {
                next = std::min(next, e);
            }
        }
    }

    result.degeneracy = int(ground_vecs.size());
    result.gap = std::isfinite(next) ? next - e0 : 0.0;

    result.ground_subspace.resize(dim, ground_vecs.size());
    for (std::size_t k = 0; k < ground_vecs.size(); ++k)
        result.ground_subspace.col(k) = ground_vecs[k];
    // Vectors from distinct sectors are orthogonal already; orthonormalize to
    // cover in-sector near-degeneracies.
    if (ground_vecs.size() > 1) {
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(result.ground_subspace);
        result.ground_subspace =
            qr.householderQ() * Eigen::MatrixXd::Identity(dim, ground_vecs.size());
    }

    result.state.n_sites = 2 * spec.n_pairs;
    result.state.amplitudes = ground_vecs.front();
    fix_phase(result.state.amplitudes);
    return result;
}

}  // namespace

GroundStateResult ground_state(const ChainSpec& spec, const GroundStateOptions& opts) {
    auto blocks = build_sector_blocks(spec, opts.size_cap);

    std::vector<const SectorBlock*> selected;
    for (const auto& blk : blocks) {
        if (blk.indices.empty()) continue;
        if (opts.search == SectorSearch::sz_zero && blk.magnetization != 0) continue;
        selected.push_back(&blk);
    }

    std::vector<SectorEigen> solved(selected.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < std::int64_t(selected.size()); ++i) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(selected[i]->matrix);
        solved[i] = {selected[i], es.eigenvalues(), es.eigenvectors()};
    }
    return assemble(spec, solved, opts.gap_tol_scale);
}

GroundStateResult ground_state_reference(const ChainSpec& spec, std::size_t size_cap) {
    const Eigen::MatrixXd H = build_full_hamiltonian(spec, size_cap);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    const std::size_t dim = spec.dimension();

    const Eigen::VectorXd& ev = es.eigenvalues();
    const double e0 = ev[0];
    const double gap_tol = 1e-10 * std::max(ev.cwiseAbs().maxCoeff(), 1.0);

    GroundStateResult result;
    result.energy = e0;
    int deg = 1;
    while (deg < ev.size() && ev[deg] - e0 <= gap_tol) ++deg;
    result.degeneracy = deg;
    result.gap = deg < ev.size() ? ev[deg] - e0 : 0.0;
    result.ground_subspace = es.eigenvectors().leftCols(deg);
    result.state.n_sites = 2 * spec.n_pairs;
    result.state.amplitudes = es.eigenvectors().col(0);
    fix_phase(result.state.amplitudes);
    (void)dim;
    return result;
}

double expectation_energy(const ChainSpec& spec, const PureState& psi,
                          std::size_t size_cap) {
    const Eigen::MatrixXd H = build_full_hamiltonian(spec, size_cap);
    if (psi.amplitudes.size() != H.rows())
        throw std::invalid_argument("expectation_energy: dimension mismatch");
    return psi.amplitudes.dot(H * psi.amplitudes);
}

}  // namespace qrainbow
