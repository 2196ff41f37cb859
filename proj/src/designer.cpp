#include "qrainbow/designer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qrainbow/errors.hpp"

namespace qrainbow {

namespace {

constexpr double kLn2 = 0.6931471805599453;

// Bisection for gamma >= 0 with pair_vn_entropy(gamma) = S; monotone
// decreasing from ln 2 at gamma = 0.
double entropy_to_gamma(double S) {
    if (!(S > 0.0) || S > kLn2 + 1e-12)
        throw std::invalid_argument("entropy target must lie in (0, ln 2]");
    if (S >= kLn2) return 0.0;
    double lo = 0.0, hi = 1.0;
    while (pair_vn_entropy(QParam::from_gamma(hi)) > S) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (pair_vn_entropy(QParam::from_gamma(mid)) > S)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double entropy_to_q(double S) { return std::exp(entropy_to_gamma(S)); }

void DesignTarget::validate() const {
    if (eps_targets.has_value() == s_targets.has_value())
        throw std::invalid_argument("DesignTarget: exactly one of eps/S targets required");
    const std::size_t n = eps_targets ? eps_targets->size() : s_targets->size();
    if (n == 0) throw std::invalid_argument("DesignTarget: empty target list");
    if (J.size() != n)
        throw std::invalid_argument("DesignTarget: J must have one entry per target");
    for (double j : J)
        if (!(j > 0.0)) throw std::invalid_argument("DesignTarget: J entries must be positive");
    if (s_targets)
        for (double s : *s_targets)
            if (!(s > 0.0) || s > kLn2 + 1e-12)
                throw std::invalid_argument("DesignTarget: S targets must lie in (0, ln 2]");
    if (eps_targets)
        for (double e : *eps_targets)
            if (!std::isfinite(e))
                throw std::invalid_argument("DesignTarget: eps targets must be finite");
}

std::vector<int> order_pairs(const std::vector<double>& eps) {
    std::vector<int> perm(eps.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        const double ma = std::abs(eps[a]), mb = std::abs(eps[b]);
        if (ma != mb) return ma > mb;
        return eps[a] > eps[b];
    });
    return perm;
}

double h2_max(double J1, double h1, double J2) {
    if (!(J1 > 0.0) || !(J2 > 0.0))
        throw std::invalid_argument("h2_max: couplings must be positive");
    const QParam q1 = q_from_ratio(h1 / J1);
    const double two_q = quantum_dimension_2(q1);
    return 2.0 * (2.0 * std::sinh(q1.gamma)) * J2 * J2 / (two_q * two_q * J1);
}

double choose_branch(double J1, double h1, double J2, double target_S2) {
    const double gamma2 = entropy_to_gamma(target_S2);
    const QParam q1 = q_from_ratio(h1 / J1);
    const double two_q = quantum_dimension_2(q1);
    const double J2_eff = 4.0 * J2 * J2 / (two_q * two_q * J1);
    const double offset = J2_eff * std::sinh(gamma2);
    return h2_max(J1, h1, J2) + (h1 / J1 < 0.0 ? -offset : offset);
}

std::vector<double> closed_form_fields(const std::vector<double>& eps,
                                       const std::vector<double>& J) {
    if (eps.empty() || eps.size() != J.size())
        throw std::invalid_argument("closed_form_fields: eps and J sizes must match");
    const int n = int(eps.size());
    std::vector<double> h(n);
    h[0] = -J[0] * std::sinh(eps[0] / 2.0);
    if (n >= 2) {
        const double c1 = std::cosh(eps[0] / 2.0);
        h[1] = -J[1] * J[1] / (c1 * c1 * J[0]) *
               (std::sinh(eps[1] / 2.0) + std::sinh(eps[0] / 2.0));
    }
    for (int i = 3; i <= n; ++i) {
        if (h[i - 2] == 0.0)
            throw degenerate_target_error(
                "closed_form_fields: h_" + std::to_string(i - 1) +
                " vanishes; perturb the targets or use the forward recursion");
        const double cm = std::cosh(eps[i - 2] / 2.0);
        h[i - 1] = J[i - 1] * J[i - 1] / (cm * cm * h[i - 2]) *
                   (std::sinh(eps[i - 1] / 2.0) + std::sinh(eps[i - 2] / 2.0)) *
                   (std::sinh(eps[i - 2] / 2.0) + std::sinh(eps[i - 3] / 2.0));
    }
    return h;
}

namespace {

// Solve h~_i/J~_i = -sinh(eps_i/2) for h_i through the forward recursion.
// Algebraically identical to the closed forms but has no removable
// singularity at intermediate h = 0.
std::vector<double> forward_fields(const std::vector<double>& eps,
                                   const std::vector<double>& J) {
    const int n = int(eps.size());
    std::vector<double> h(n);
    double gamma_prev = -eps[0] / 2.0;
    h[0] = J[0] * std::sinh(gamma_prev);
    if (!std::isfinite(h[0]))
        throw numeric_range_error("fields_from_energies: overflow at pair 1");
    double Jt = J[0];
    for (int i = 2; i <= n; ++i) {
        const double two_q = 2.0 * std::cosh(gamma_prev);
        const double base = J[i - 1] * J[i - 1] / (two_q * two_q * Jt);
        const double Jt_next = 4.0 * base;
        const double gamma_i = -eps[i - 1] / 2.0;
        const double ht_next = Jt_next * std::sinh(gamma_i);
        h[i - 1] = ht_next + 2.0 * (2.0 * std::sinh(gamma_prev)) * base;
        if (!std::isfinite(h[i - 1]) || !(Jt_next > 0.0))
            throw numeric_range_error("fields_from_energies: overflow at pair " +
                                      std::to_string(i));
        Jt = Jt_next;
        gamma_prev = gamma_i;
    }
    return h;
}

}  // namespace

DesignResult fields_from_energies(const DesignTarget& target) {
    target.validate();
    const int n = target.n_pairs();

    std::vector<double> eps;
    if (target.eps_targets) {
        eps = *target.eps_targets;
    } else {
        // Entropy targets determine |eps|; the sign follows the branch policy
        // (high: q >= 1, eps <= 0; low: q <= 1, eps >= 0). The optimal policy
        // keeps all pairs on the high-fidelity branch.
        const double sign = target.branch == BranchPolicy::low ? +1.0 : -1.0;
        for (double s : *target.s_targets)
            eps.push_back(sign * 2.0 * entropy_to_gamma(s));
    }

    std::vector<int> perm;
    if (target.ordering == OrderingPolicy::optimal) {
        perm = order_pairs(eps);
    } else {
        perm.resize(n);
        std::iota(perm.begin(), perm.end(), 0);
    }
    std::vector<double> ordered(n);
    for (int i = 0; i < n; ++i) ordered[i] = eps[perm[i]];

    DesignResult result;
    result.permutation = perm;
    result.spec.n_pairs = n;
    result.spec.J = target.J;
    result.spec.h = forward_fields(ordered, target.J);
    result.profile = renormalize(result.spec);

    const auto sp = single_particle_energies(result.profile);
    result.eps_achieved = sp.eps;
    for (int i = 0; i < n; ++i) {
        const double err = std::abs(sp.eps[i] - ordered[i]);
        if (err > 1e-9 * std::max(1.0, std::abs(ordered[i])))
            throw numeric_range_error("fields_from_energies: round-trip check failed at pair " +
                                      std::to_string(i + 1));
    }

    result.predicted = analyze(rainbow_state(result.profile), &result.profile);
    return result;
}

ChainSpec uniform_q_fields(double q, const std::vector<double>& J) {
    if (!(q > 0.0)) throw std::invalid_argument("uniform_q_fields: q must be positive");
    if (J.empty()) throw std::invalid_argument("uniform_q_fields: empty coupling profile");
    for (double j : J)
        if (!(j > 0.0)) throw std::invalid_argument("uniform_q_fields: J entries must be positive");

    ChainSpec spec;
    spec.n_pairs = int(J.size());
    spec.J = J;
    spec.h.assign(J.size(), 0.0);
    if (q == 1.0) return spec;  // rainbow limit, the h_2 formula divides by h_1 = 0

    const double ratio2 = std::pow((1.0 - q * q) / (1.0 + q * q), 2.0);
    spec.h[0] = J[0] * (q - 1.0 / q) / 2.0;
    if (spec.n_pairs >= 2) spec.h[1] = 2.0 * J[1] * J[1] / spec.h[0] * ratio2;
    for (int i = 3; i <= spec.n_pairs; ++i)
        spec.h[i - 1] = 4.0 * J[i - 1] * J[i - 1] / spec.h[i - 2] * ratio2;
    return spec;
}

}  // namespace qrainbow
