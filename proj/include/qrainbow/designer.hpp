#pragma once

#include <optional>
#include <vector>

#include "qrainbow/chain.hpp"
#include "qrainbow/entanglement.hpp"
#include "qrainbow/rg.hpp"

namespace qrainbow {

enum class OrderingPolicy { optimal, as_given };
enum class BranchPolicy { optimal, high, low };

// Inverse-design input: either target single-particle entanglement energies
// or per-pair von Neumann entropies, with a fixed coupling profile.
struct DesignTarget {
    std::optional<std::vector<double>> eps_targets;
    std::optional<std::vector<double>> s_targets;  // each in [0, ln 2]
    std::vector<double> J;
    OrderingPolicy ordering = OrderingPolicy::optimal;
    BranchPolicy branch = BranchPolicy::optimal;

    void validate() const;
    int n_pairs() const { return int(J.size()); }
};

struct DesignResult {
    ChainSpec spec;
    QProfile profile;
    // permutation[i] = index into the target list assigned to pair i+1
    std::vector<int> permutation;
    std::vector<double> eps_achieved;  // per pair, ansatz level
    EntanglementReport predicted;      // of the rainbow ansatz
};

// Field profile realizing the targets; the forward recursion is solved for
// h_i at each step (algebraically identical to the closed forms, without
// their removable singularities) and verified by a renormalize round trip.
DesignResult fields_from_energies(const DesignTarget& target);

// Closed-form field profile for given energies (no ordering applied). Throws
// degenerate_target_error when an intermediate h_{i-1} vanishes.
std::vector<double> closed_form_fields(const std::vector<double>& eps,
                                       const std::vector<double>& J);

// Field value nulling h~_2, i.e. q_2 = 1 and S_{A,2} = ln 2.
double h2_max(double J1, double h1, double J2);

// Of the two h_2 realizing target_S2 (symmetric about h2_max), returns the
// high-fidelity one: h_2 >= h2_max when h_1/J_1 > 0, h_2 <= h2_max otherwise.
double choose_branch(double J1, double h1, double J2, double target_S2);

// Permutation sorting targets by descending |eps|, ties broken by descending
// eps then original index. Entry i is the target index assigned to pair i+1.
std::vector<int> order_pairs(const std::vector<double>& eps);

// Field profile giving q_i = q for every pair. q = 1 returns all-zero fields.
ChainSpec uniform_q_fields(double q, const std::vector<double>& J);

// Invert the per-pair vN entropy for q >= 1 by bisection; S in [0, ln 2].
double entropy_to_q(double S);

}  // namespace qrainbow
