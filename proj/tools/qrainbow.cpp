#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qrainbow/designer.hpp"
#include "qrainbow/errors.hpp"
#include "qrainbow/primes.hpp"
#include "qrainbow/report.hpp"
#include "qrainbow/sweep.hpp"

namespace {

using nlohmann::json;
using namespace qrainbow;

constexpr int kExitInput = 2;     // malformed/invalid input
constexpr int kExitResource = 3;  // size cap exceeded
constexpr int kExitDesign = 4;    // designer failure

struct GlobalOptions {
    int threads = 0;
    std::size_t size_cap = kDefaultSizeCap;
    double validity_threshold = 0.1;
};

void apply_threads(int threads) {
    if (threads <= 0) {
        if (const char* env = std::getenv("QRAINBOW_THREADS")) threads = std::atoi(env);
    }
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

// Parse with line/column reporting on failure.
json parse_json(const std::string& text, const std::string& path) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::ostringstream msg;
        msg << path << ":" << line << ":" << column << ": " << e.what();
        throw std::invalid_argument(msg.str());
    }
}

void warn_validity(const QProfile& profile, double threshold) {
    for (std::size_t i = 0; i < profile.validity_ratio.size(); ++i)
        if (profile.validity_ratio[i] > threshold)
            std::cerr << "warning: validity ratio r_" << (i + 1) << " = "
                      << format_double(profile.validity_ratio[i]) << " exceeds "
                      << format_double(threshold)
                      << "; the renormalization assumption is strained\n";
}

SimulationOptions sim_options(const GlobalOptions& global) {
    SimulationOptions opts;
    opts.size_cap = global.size_cap;
    opts.validity_threshold = global.validity_threshold;
    return opts;
}

int cmd_simulate(const std::string& input, const std::string& out,
                 const GlobalOptions& global) {
    const ChainSpec spec = chain_spec_from_json(parse_json(read_file(input), input));
    const json report = simulate_report(spec, sim_options(global));
    warn_validity(renormalize(spec), global.validity_threshold);
    write_file(out, report.dump(2) + "\n");
    std::cout << "report written to " << out << "\n";
    return 0;
}

void print_design_table(const DesignTarget& target, const DesignResult& result) {
    std::cout << "pair  target_eps            achieved_eps          permutation\n";
    const auto& eps =
        target.eps_targets ? *target.eps_targets : std::vector<double>(result.eps_achieved);
    for (std::size_t i = 0; i < result.eps_achieved.size(); ++i) {
        const int src = result.permutation[i];
        std::cout << std::left << std::setw(6) << (i + 1) << std::setw(22)
                  << format_double(target.eps_targets ? eps[src] : result.eps_achieved[i])
                  << std::setw(22) << format_double(result.eps_achieved[i]) << "target["
                  << src << "]\n";
    }
}

int run_design(const DesignTarget& target, const std::string& out,
               const GlobalOptions& global) {
    const DesignResult result = fields_from_energies(target);
    warn_validity(result.profile, global.validity_threshold);

    write_file(out + ".spec.json", chain_spec_to_json(result.spec).dump(2) + "\n");
    json report = simulate_report(result.spec, sim_options(global));
    report["design"] = json{{"target", design_target_to_json(target)},
                            {"permutation", result.permutation},
                            {"eps_achieved", result.eps_achieved}};
    write_file(out + ".report.json", report.dump(2) + "\n");

    print_design_table(target, result);
    std::cout << "spec written to " << out << ".spec.json\n";
    std::cout << "report written to " << out << ".report.json\n";
    return 0;
}

int cmd_design(const std::string& input, const std::string& out,
               const GlobalOptions& global) {
    const DesignTarget target = design_target_from_json(parse_json(read_file(input), input));
    return run_design(target, out, global);
}

int cmd_sweep(const std::string& input, const std::string& out,
              const GlobalOptions& global) {
    const SweepGrid grid = sweep_grid_from_json(parse_json(read_file(input), input));
    write_file(out, run_sweep(grid, sim_options(global)));
    std::cout << "sweep written to " << out << " (" << grid.n_points() << " points)\n";
    return 0;
}

int cmd_prime(double s, int pairs, const std::vector<double>& J, const std::string& out,
              const GlobalOptions& global) {
    std::vector<double> couplings = J;
    if (couplings.empty()) {
        // geometric default, ratio 1e-2
        double j = 1.0;
        for (int i = 0; i < pairs; ++i, j *= 1e-2) couplings.push_back(j);
    }
    const DesignTarget target = prime_spectrum_target(s, pairs, couplings);
    if (s > 1.0) {
        const NormalizationResult norm = normalization(s);
        std::cout << "primon normalization: A_F = " << format_double(norm.A_F)
                  << ", E0 = " << format_double(norm.E0) << " (K = " << norm.K << ")\n";
    }
    return run_design(target, out, global);
}

int cmd_uniform_q(double q, const std::vector<double>& J, const std::string& out,
                  const GlobalOptions& global) {
    const ChainSpec spec = uniform_q_fields(q, J);
    warn_validity(renormalize(spec), global.validity_threshold);
    write_file(out + ".spec.json", chain_spec_to_json(spec).dump(2) + "\n");
    const json report = simulate_report(spec, sim_options(global));
    write_file(out + ".report.json", report.dump(2) + "\n");
    std::cout << "spec written to " << out << ".spec.json\n";
    std::cout << "report written to " << out << ".report.json\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-deformed rainbow chain simulator and entanglement-spectrum designer"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--threads", global.threads,
                   "worker threads (0: QRAINBOW_THREADS env var or OpenMP default)");
    app.add_option("--size-cap", global.size_cap, "maximum Hilbert-space dimension");
    app.add_option("--validity-threshold", global.validity_threshold,
                   "warn when a validity ratio exceeds this value");

    std::string input, out = "out";
    double s = 2.0, q = 1.0;
    int pairs = 3;
    std::vector<double> J;

    auto* simulate = app.add_subcommand("simulate", "simulate a chain from a ChainSpec JSON");
    simulate->add_option("config", input, "ChainSpec JSON path")->required();
    simulate->add_option("--out", out, "output report path");

    auto* design = app.add_subcommand("design", "design fields from a DesignTarget JSON");
    design->add_option("target", input, "DesignTarget JSON path")->required();
    design->add_option("--out", out, "output file prefix");

    auto* sweep = app.add_subcommand("sweep", "evaluate a parameter grid to CSV");
    sweep->add_option("grid", input, "SweepGrid JSON path")->required();
    sweep->add_option("--out", out, "output CSV path");

    auto* prime = app.add_subcommand("prime", "design a prime-number entanglement spectrum");
    prime->add_option("--s", s, "entanglement temperature")->required();
    prime->add_option("--pairs", pairs, "number of concentric pairs")->required();
    prime->add_option("--J", J, "coupling profile (default geometric, ratio 1e-2)");
    prime->add_option("--out", out, "output file prefix");

    auto* uniform = app.add_subcommand("uniform-q", "design equal deformation on every pair");
    uniform->add_option("--q", q, "common deformation parameter")->required();
    uniform->add_option("--J", J, "coupling profile")->required();
    uniform->add_option("--out", out, "output file prefix");

    CLI11_PARSE(app, argc, argv);
    apply_threads(global.threads);

    try {
        if (simulate->parsed()) return cmd_simulate(input, out == "out" ? "report.json" : out, global);
        if (design->parsed()) return cmd_design(input, out, global);
        if (sweep->parsed()) return cmd_sweep(input, out == "out" ? "sweep.csv" : out, global);
        if (prime->parsed()) return cmd_prime(s, pairs, J, out, global);
        if (uniform->parsed()) return cmd_uniform_q(q, J, out, global);
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const degenerate_target_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDesign;
    } catch (const numeric_range_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDesign;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
