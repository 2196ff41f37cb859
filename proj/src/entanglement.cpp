#include "qrainbow/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qrainbow {

Eigen::MatrixXd reduced_density_matrix(const PureState& state) {
    if (state.n_sites <= 0 || state.n_sites % 2 != 0)
        throw std::invalid_argument("reduced_density_matrix: even positive site count required");
    const int n = state.n_sites / 2;
    const std::size_t dim_half = std::size_t(1) << n;
    if (state.amplitudes.size() != Eigen::Index(dim_half * dim_half))
        throw std::invalid_argument("reduced_density_matrix: amplitude length mismatch");

    // Left sites occupy bits 0..N-1, right sites bits N..2N-1, so the basis
    // index splits as left + (right << N).
    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(dim_half, dim_half);
    for (std::size_t r = 0; r < dim_half; ++r) {
        const auto seg = state.amplitudes.segment(r * dim_half, dim_half);
        rho.noalias() += seg * seg.transpose();
    }
    return rho;
}

std::vector<double> rho_eigenvalues(const Eigen::MatrixXd& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho, Eigen::EigenvaluesOnly);
    std::vector<double> eigs(es.eigenvalues().data(),
                             es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(eigs.begin(), eigs.end(), std::greater<>());
    for (double& l : eigs)
        if (l < 0.0 && l >= -1e-12) l = 0.0;
    return eigs;
}

double renyi_entropy(const std::vector<double>& rho_eigs, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("renyi_entropy: alpha must be positive");
    if (alpha == 1.0)
        throw std::invalid_argument("renyi_entropy: alpha = 1 is the von Neumann limit");
    double sum = 0.0;
    for (double l : rho_eigs)
        if (l > 0.0) sum += std::pow(l, alpha);
    return std::log(sum) / (1.0 - alpha);
}

double vn_entropy(const std::vector<double>& rho_eigs) {
    double s = 0.0;
    for (double l : rho_eigs)
        if (l > 0.0) s -= l * std::log(l);
    return s;
}

std::vector<double> entanglement_spectrum(const std::vector<double>& rho_eigs) {
    std::vector<double> spectrum;
    for (double l : rho_eigs)
        if (l >= 1e-14) spectrum.push_back(-std::log(l));
    if (spectrum.empty())
        throw std::invalid_argument("entanglement_spectrum: no eigenvalues above cutoff");
    std::sort(spectrum.begin(), spectrum.end());
    return spectrum;
}

double pair_vn_entropy(const QParam& q) {
    // ln(1+q^2) - q^2 ln(q^2)/(1+q^2), evaluated from the two eigenvalues so
    // large |gamma| stays finite.
    const double g = q.gamma;
    const double l0 = 1.0 / (1.0 + std::exp(2.0 * g));
    const double l1 = 1.0 - l0;
    double s = 0.0;
    if (l0 > 0.0) s -= l0 * std::log(l0);
    if (l1 > 0.0) s -= l1 * std::log(l1);
    return s;
}

double pair_renyi_entropy(const QParam& q, double alpha) {
    return renyi_entropy({1.0 / (1.0 + std::exp(2.0 * q.gamma)),
                          1.0 / (1.0 + std::exp(-2.0 * q.gamma))},
                         alpha);
}

SingleParticleEnergies single_particle_energies(const QProfile& profile) {
    SingleParticleEnergies out;
    out.E0 = 0.0;
    for (const QParam& q : profile.q) {
        out.eps.push_back(-2.0 * q.gamma);
        out.E0 += std::log1p(std::exp(2.0 * q.gamma));
    }
    return out;
}

FreeSpectrumFit fit_free_spectrum(const std::vector<double>& spectrum, int n_pairs) {
    const std::size_t m = spectrum.size();
    if (n_pairs <= 0 || m != (std::size_t(1) << n_pairs))
        throw std::invalid_argument("fit_free_spectrum: spectrum length must be 2^n_pairs");
    for (double e : spectrum)
        if (!std::isfinite(e))
            throw std::invalid_argument("fit_free_spectrum: spectrum entries must be finite");

    std::vector<double> sorted(spectrum);
    std::sort(sorted.begin(), sorted.end());
    const double e_min = sorted.front();
    std::vector<double> diffs(m);
    for (std::size_t j = 0; j < m; ++j) diffs[j] = sorted[j] - e_min;

    const double tol = 1e-6 * std::max(1.0, diffs.back());

    // Greedy generator extraction from the subset-sum multiset: repeatedly
    // take the smallest difference not explained by sums of known generators.
    std::vector<double> gens;
    std::vector<double> sums = {0.0};
    while (int(gens.size()) < n_pairs) {
        std::vector<bool> used(m, false);
        for (double s : sums) {
            double best = tol;
            std::size_t best_j = m;
            for (std::size_t j = 0; j < m; ++j) {
                if (used[j]) continue;
                const double d = std::abs(diffs[j] - s);
                if (d < best) {
                    best = d;
                    best_j = j;
                }
            }
            if (best_j < m) used[best_j] = true;
        }
        double next = -1.0;
        for (std::size_t j = 0; j < m; ++j)
            if (!used[j]) {
                next = diffs[j];
                break;
            }
        if (next < 0.0)
            throw std::invalid_argument("fit_free_spectrum: degenerate spectrum, "
                                        "fewer than n_pairs generators found");
        gens.push_back(next);
        std::vector<double> grown;
        grown.reserve(sums.size() * 2);
        for (double s : sums) {
            grown.push_back(s);
            grown.push_back(s + next);
        }
        std::sort(grown.begin(), grown.end());
        sums = std::move(grown);
    }

    // Refine by least squares over the pattern assignment given by sorting
    // both predicted and observed energies.
    std::vector<std::pair<double, std::uint64_t>> patterns;
    for (std::uint64_t c = 0; c < m; ++c) {
        double p = 0.0;
        for (int i = 0; i < n_pairs; ++i)
            if ((c >> i) & 1u) p += gens[i];
        patterns.emplace_back(p, c);
    }
    std::sort(patterns.begin(), patterns.end());

    Eigen::MatrixXd A(m, n_pairs + 1);
    Eigen::VectorXd b(m);
    for (std::size_t j = 0; j < m; ++j) {
        A(j, 0) = 1.0;
        for (int i = 0; i < n_pairs; ++i) A(j, i + 1) = (patterns[j].second >> i) & 1u;
        b[j] = sorted[j];
    }
    const Eigen::VectorXd x = A.colPivHouseholderQr().solve(b);
    const double residual = (A * x - b).cwiseAbs().maxCoeff();

    FreeSpectrumFit fit;
    fit.residual = residual;
    fit.E0 = x[0];
    std::vector<double> mags(x.data() + 1, x.data() + 1 + n_pairs);
    // Non-positive sign convention: E0 absorbs the flips.
    for (double a : mags) fit.E0 += a;
    for (double a : mags) fit.eps.push_back(-a);
    std::sort(fit.eps.begin(), fit.eps.end(),
              [](double a, double b2) { return std::abs(a) > std::abs(b2); });
    return fit;
}

EntanglementReport analyze(const PureState& state, const QProfile* profile,
                           const std::vector<double>& renyi_orders) {
    EntanglementReport report;
    report.rho_eigs = rho_eigenvalues(reduced_density_matrix(state));
    for (double a : renyi_orders) report.renyi[a] = renyi_entropy(report.rho_eigs, a);
    report.vn_entropy = vn_entropy(report.rho_eigs);
    report.spectrum = entanglement_spectrum(report.rho_eigs);
    if (profile) {
        const auto sp = single_particle_energies(*profile);
        report.E0 = sp.E0;
        report.single_particle = sp.eps;
    }
    return report;
}

}  // namespace qrainbow
