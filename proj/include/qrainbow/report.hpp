#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "qrainbow/chain.hpp"
#include "qrainbow/designer.hpp"
#include "qrainbow/entanglement.hpp"
#include "qrainbow/rg.hpp"

namespace qrainbow {

// ChainSpec wire format: {"pairs": N, "J": [...], "h": [...]}
nlohmann::json chain_spec_to_json(const ChainSpec& spec);
ChainSpec chain_spec_from_json(const nlohmann::json& j);

nlohmann::json q_profile_to_json(const QProfile& profile);

nlohmann::json entanglement_report_to_json(const EntanglementReport& report);

// DesignTarget wire format:
// {"targets": {"eps": [...]} | {"S": [...]}, "J": [...],
//  "ordering": "optimal"|"as-given", "branch": "optimal"|"high"|"low"}
DesignTarget design_target_from_json(const nlohmann::json& j);
nlohmann::json design_target_to_json(const DesignTarget& target);

struct SimulationOptions {
    std::size_t size_cap = kDefaultSizeCap;
    double validity_threshold = 0.1;
    // All sectors are searched up to this many pairs, Sz = 0 beyond.
    int all_sector_limit = 4;
};

// Full simulation of one chain: exact ground state, rainbow ansatz, fidelity,
// entanglement reports for both, free-fermion single-particle energies.
nlohmann::json simulate_report(const ChainSpec& spec, const SimulationOptions& opts = {});

// Round-trip exact decimal formatting (17 significant digits).
std::string format_double(double x);

// Spectrum export: two-column CSV (index, energy).
std::string spectrum_to_csv(const std::vector<double>& spectrum);

}  // namespace qrainbow
