#include "qrainbow/report.hpp"

#include <cstdio>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qrainbow/exact.hpp"
#include "qrainbow/freefermion.hpp"

namespace qrainbow {

using nlohmann::json;

nlohmann::json chain_spec_to_json(const ChainSpec& spec) {
    return json{{"pairs", spec.n_pairs}, {"J", spec.J}, {"h", spec.h}};
}

ChainSpec chain_spec_from_json(const json& j) {
    ChainSpec spec;
    spec.n_pairs = j.at("pairs").get<int>();
    spec.J = j.at("J").get<std::vector<double>>();
    spec.h = j.at("h").get<std::vector<double>>();
    spec.validate();
    return spec;
}

nlohmann::json q_profile_to_json(const QProfile& profile) {
    std::vector<double> q, gamma;
    for (const QParam& p : profile.q) {
        q.push_back(p.q());
        gamma.push_back(p.gamma);
    }
    return json{{"q", q},
                {"gamma", gamma},
                {"J_eff", profile.J_eff},
                {"h_eff", profile.h_eff},
                {"validity_ratio", profile.validity_ratio}};
}

nlohmann::json entanglement_report_to_json(const EntanglementReport& report) {
    json renyi = json::object();
    for (const auto& [alpha, value] : report.renyi) renyi[format_double(alpha)] = value;
    return json{{"rho_eigs", report.rho_eigs},
                {"renyi", renyi},
                {"vn_entropy", report.vn_entropy},
                {"spectrum", report.spectrum},
                {"single_particle", report.single_particle},
                {"E0", report.E0}};
}

DesignTarget design_target_from_json(const json& j) {
    DesignTarget target;
    const json& targets = j.at("targets");
    if (targets.contains("eps"))
        target.eps_targets = targets.at("eps").get<std::vector<double>>();
    if (targets.contains("S"))
        target.s_targets = targets.at("S").get<std::vector<double>>();
    target.J = j.at("J").get<std::vector<double>>();

    const std::string ordering = j.value("ordering", "optimal");
    if (ordering == "optimal")
        target.ordering = OrderingPolicy::optimal;
    else if (ordering == "as-given")
        target.ordering = OrderingPolicy::as_given;
    else
        throw std::invalid_argument("DesignTarget: unknown ordering policy '" + ordering + "'");

    const std::string branch = j.value("branch", "optimal");
    if (branch == "optimal")
        target.branch = BranchPolicy::optimal;
    else if (branch == "high")
        target.branch = BranchPolicy::high;
    else if (branch == "low")
        target.branch = BranchPolicy::low;
    else
        throw std::invalid_argument("DesignTarget: unknown branch policy '" + branch + "'");

    target.validate();
    return target;
}

nlohmann::json design_target_to_json(const DesignTarget& target) {
    json targets = json::object();
    if (target.eps_targets) targets["eps"] = *target.eps_targets;
    if (target.s_targets) targets["S"] = *target.s_targets;
    return json{
        {"targets", targets},
        {"J", target.J},
        {"ordering", target.ordering == OrderingPolicy::optimal ? "optimal" : "as-given"},
        {"branch", target.branch == BranchPolicy::optimal
                       ? "optimal"
                       : (target.branch == BranchPolicy::high ? "high" : "low")}};
}

nlohmann::json simulate_report(const ChainSpec& spec, const SimulationOptions& opts) {
    spec.validate();
    GroundStateOptions gs_opts;
    gs_opts.size_cap = opts.size_cap;
    gs_opts.search = spec.n_pairs <= opts.all_sector_limit ? SectorSearch::all
                                                           : SectorSearch::sz_zero;
    const GroundStateResult exact = ground_state(spec, gs_opts);

    const QProfile profile = renormalize(spec);
    const PureState ansatz = rainbow_state(profile);

    json report;
    report["spec"] = chain_spec_to_json(spec);
    report["q_profile"] = q_profile_to_json(profile);
    report["exact"] = json{{"energy", exact.energy},
                           {"gap", exact.gap},
                           {"degeneracy", exact.degeneracy}};
    report["ansatz"] = json{{"energy", expectation_energy(spec, ansatz, opts.size_cap)},
                            {"fidelity", exact.fidelity(ansatz)}};
    report["entanglement"] =
        json{{"exact", entanglement_report_to_json(analyze(exact.state, &profile))},
             {"ansatz", entanglement_report_to_json(analyze(ansatz, &profile))}};

    const CorrelationMatrix corr = correlation_matrix(spec);
    const SubsystemSpectrum ff = subsystem_ent_energies(corr.C, spec.n_pairs);
    report["freefermion"] = json{{"eps", ff.eps},
                                 {"n_clamped", ff.n_clamped},
                                 {"zero_mode_warning", corr.zero_mode_warning}};
    report["validity"] = json{{"threshold", opts.validity_threshold},
                              {"ok", profile.valid_within(opts.validity_threshold)}};
    return report;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string spectrum_to_csv(const std::vector<double>& spectrum) {
    std::ostringstream out;
    out << "index,energy\n";
    for (std::size_t i = 0; i < spectrum.size(); ++i)
        out << i << ',' << format_double(spectrum[i]) << '\n';
    return out.str();
}

}  // namespace qrainbow
