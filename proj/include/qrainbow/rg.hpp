#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qrainbow/chain.hpp"
#include "qrainbow/exact.hpp"
#include "qrainbow/qalgebra.hpp"

namespace qrainbow {

// Renormalized parameters of the real-space RG recursion. The central pair
// is never rescaled: J_eff[0] = J[0], h_eff[0] = h[0].
struct QProfile {
    std::vector<QParam> q;
    std::vector<double> J_eff;
    std::vector<double> h_eff;
    // r_i = max(J_{i+1}, |h_{i+1}|) / max(J~_i, |h~_i|), one per decimation
    // step (size N-1). Monitors the strong-inhomogeneity assumption.
    std::vector<double> validity_ratio;

    int n_pairs() const { return int(q.size()); }
    bool valid_within(double threshold) const {
        for (double r : validity_ratio)
            if (r > threshold) return false;
        return true;
    }
};

// J~_i = 4 J_i^2 / ([2]_{q_{i-1}}^2 J~_{i-1}),
// h~_i = h_i - 2 (q_{i-1} - 1/q_{i-1}) J_i^2 / ([2]_{q_{i-1}}^2 J~_{i-1}),
// q_i from sinh(gamma_i) = h~_i / J~_i.
QProfile renormalize(const ChainSpec& spec);

// Tensor product of N q-singlets, pair i on sites (-i, i), expanded into the
// BasisConvention amplitude vector. Support lies entirely in Sz = 0.
PureState rainbow_state(const QProfile& profile);

// Numerical second-order perturbation theory on the 4-site chain, following
// the degenerate-subspace construction over the 12 excited states.
struct PerturbationResult {
    Eigen::Matrix4d first_order;   // <m_a|V|m_b>
    Eigen::Matrix4d second_order;  // sum_n <m|V|n><n|V|m> / (E_- - E_n)
    double J2_eff;
    double h2_eff;
    double energy_const;  // coefficient of the identity in H_eff
};

PerturbationResult perturbation_oracle_4site(double J1, double h1, double J2, double h2);

}  // namespace qrainbow
