#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "qrainbow/chain.hpp"
#include "qrainbow/report.hpp"

namespace qrainbow {

enum class AxisScale { linear, log };

struct SweepAxis {
    std::string param;  // "h1".."hN", "J1".."JN", or "q" in uniform_q mode
    double min = 0.0;
    double max = 0.0;
    int count = 0;  // >= 2
    AxisScale scale = AxisScale::linear;
};

enum class SweepMode { chain, uniform_q };

// Grid definition; rows are emitted in row-major order over the axes (last
// axis fastest), byte-identical regardless of worker count.
struct SweepGrid {
    SweepMode mode = SweepMode::chain;
    int n_pairs = 0;
    std::vector<double> J;
    std::vector<double> h;  // base field values (chain mode)
    double q = 1.0;         // base q (uniform_q mode)
    std::vector<SweepAxis> axes;
    std::vector<std::string> columns;

    void validate() const;
    std::size_t n_points() const;
};

SweepGrid sweep_grid_from_json(const nlohmann::json& j);

// Column vocabulary: h<i>, J<i>, q (uniform mode), q<i>, gamma<i>, eps<i>,
// S_A<i>, E0, S_total, fidelity, energy_exact, energy_ansatz, gap, degeneracy,
// validity_ratio<i>.
std::string run_sweep(const SweepGrid& grid, const SimulationOptions& opts = {});

}  // namespace qrainbow
