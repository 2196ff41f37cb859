#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "qrainbow/exact.hpp"
#include "qrainbow/rg.hpp"

namespace qrainbow {

// Entanglement data across the central bipartition (sites -N..-1 vs 1..N).
struct EntanglementReport {
    std::vector<double> rho_eigs;       // descending, sum 1
    std::map<double, double> renyi;     // order alpha -> entropy
    double vn_entropy = 0.0;
    std::vector<double> spectrum;       // ascending E_j = -ln lambda_j
    std::vector<double> single_particle;  // {eps_i}, when a profile is known
    double E0 = 0.0;
};

// Partial trace over the right half (sites 1..N), leaving sites -N..-1.
Eigen::MatrixXd reduced_density_matrix(const PureState& state);

// Descending eigenvalues; values in [-1e-12, 0) clipped to 0.
std::vector<double> rho_eigenvalues(const Eigen::MatrixXd& rho);

double renyi_entropy(const std::vector<double>& rho_eigs, double alpha);

// -sum lambda ln lambda, with 0 ln 0 = 0.
double vn_entropy(const std::vector<double>& rho_eigs);

// E_j = -ln lambda_j ascending; eigenvalues below 1e-14 are excluded rather
// than mapped onto huge energies.
std::vector<double> entanglement_spectrum(const std::vector<double>& rho_eigs);

// Per-pair closed form ln(1+q^2) - q^2 ln(q^2)/(1+q^2).
double pair_vn_entropy(const QParam& q);
double pair_renyi_entropy(const QParam& q, double alpha);

struct SingleParticleEnergies {
    double E0;                // sum_i ln(1 + q_i^2)
    std::vector<double> eps;  // eps_i = -2 gamma_i
};

SingleParticleEnergies single_particle_energies(const QProfile& profile);

// Least-squares fit of a 2^N spectrum onto E_j = E0 + sum_i n_i eps_i over
// occupation patterns n in {0,1}^N. The spectrum multiset only determines
// each eps_i up to a sign flip (absorbed into E0); the fit returns the
// non-positive-sign representative, sorted by descending |eps|.
struct FreeSpectrumFit {
    double E0;
    std::vector<double> eps;
    double residual;  // max |E_j - fit|
};

FreeSpectrumFit fit_free_spectrum(const std::vector<double>& spectrum, int n_pairs);

// Full report for a state; single-particle energies filled from the profile
// when one is supplied.
EntanglementReport analyze(const PureState& state, const QProfile* profile = nullptr,
                           const std::vector<double>& renyi_orders = {2.0, 3.0});

}  // namespace qrainbow
