#include "qrainbow/sweep.hpp"

#include <cmath>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "qrainbow/designer.hpp"
#include "qrainbow/entanglement.hpp"
#include "qrainbow/exact.hpp"
#include "qrainbow/rg.hpp"

namespace qrainbow {

using nlohmann::json;

void SweepGrid::validate() const {
    if (n_pairs <= 0) throw std::invalid_argument("SweepGrid: n_pairs must be positive");
    if (J.size() != std::size_t(n_pairs))
        throw std::invalid_argument("SweepGrid: J must have n_pairs entries");
    if (mode == SweepMode::chain && h.size() != std::size_t(n_pairs))
        throw std::invalid_argument("SweepGrid: h must have n_pairs entries");
    if (axes.empty()) throw std::invalid_argument("SweepGrid: at least one axis required");
    for (const auto& axis : axes) {
        if (axis.count < 2) throw std::invalid_argument("SweepGrid: axis count must be >= 2");
        if (axis.scale == AxisScale::log && !(axis.min > 0.0 && axis.max > 0.0))
            throw std::invalid_argument("SweepGrid: log axis requires positive bounds");
    }
    if (columns.empty()) throw std::invalid_argument("SweepGrid: no output columns");
}

std::size_t SweepGrid::n_points() const {
    std::size_t n = 1;
    for (const auto& axis : axes) n *= std::size_t(axis.count);
    return n;
}

SweepGrid sweep_grid_from_json(const json& j) {
    SweepGrid grid;
    const std::string mode = j.value("mode", "chain");
    if (mode == "chain")
        grid.mode = SweepMode::chain;
    else if (mode == "uniform_q")
        grid.mode = SweepMode::uniform_q;
    else
        throw std::invalid_argument("SweepGrid: unknown mode '" + mode + "'");

    grid.n_pairs = j.at("pairs").get<int>();
    grid.J = j.at("J").get<std::vector<double>>();
    if (j.contains("h")) grid.h = j.at("h").get<std::vector<double>>();
    else grid.h.assign(grid.J.size(), 0.0);
    grid.q = j.value("q", 1.0);

    for (const auto& ja : j.at("axes")) {
        SweepAxis axis;
        axis.param = ja.at("param").get<std::string>();
        axis.min = ja.at("min").get<double>();
        axis.max = ja.at("max").get<double>();
        axis.count = ja.at("count").get<int>();
        const std::string scale = ja.value("scale", "linear");
        if (scale == "linear")
            axis.scale = AxisScale::linear;
        else if (scale == "log")
            axis.scale = AxisScale::log;
        else
            throw std::invalid_argument("SweepGrid: unknown scale '" + scale + "'");
        grid.axes.push_back(axis);
    }
    grid.columns = j.at("columns").get<std::vector<std::string>>();
    grid.validate();
    return grid;
}

namespace {

double axis_value(const SweepAxis& axis, int step) {
    const double t = double(step) / double(axis.count - 1);
    if (axis.scale == AxisScale::log)
        return axis.min * std::pow(axis.max / axis.min, t);
    return axis.min + (axis.max - axis.min) * t;
}

// Parse "h3" / "J2" style parameter names.
bool parse_indexed(const std::string& name, char prefix, int n_pairs, int* index) {
    if (name.size() < 2 || name[0] != prefix) return false;
    const int i = std::stoi(name.substr(1));
    if (i < 1 || i > n_pairs) throw std::invalid_argument("SweepGrid: parameter '" + name +
                                                          "' out of range");
    *index = i - 1;
    return true;
}

bool needs_exact(const std::vector<std::string>& columns) {
    for (const auto& c : columns)
        if (c == "fidelity" || c == "energy_exact" || c == "gap" || c == "degeneracy" ||
            c == "energy_ansatz")
            return true;
    return false;
}

std::map<std::string, double> evaluate_point(const SweepGrid& grid,
                                             const std::vector<double>& axis_values,
                                             const SimulationOptions& opts) {
    ChainSpec spec;
    double q_uniform = grid.q;

    if (grid.mode == SweepMode::uniform_q) {
        std::vector<double> J = grid.J;
        for (std::size_t a = 0; a < grid.axes.size(); ++a) {
            int idx;
            const std::string& p = grid.axes[a].param;
            if (p == "q")
                q_uniform = axis_values[a];
            else if (parse_indexed(p, 'J', grid.n_pairs, &idx))
                J[idx] = axis_values[a];
            else
                throw std::invalid_argument("SweepGrid: unsupported uniform_q axis '" + p + "'");
        }
        spec = uniform_q_fields(q_uniform, J);
    } else {
        spec.n_pairs = grid.n_pairs;
        spec.J = grid.J;
        spec.h = grid.h;
        for (std::size_t a = 0; a < grid.axes.size(); ++a) {
            int idx;
            const std::string& p = grid.axes[a].param;
            if (parse_indexed(p, 'h', grid.n_pairs, &idx))
                spec.h[idx] = axis_values[a];
            else if (parse_indexed(p, 'J', grid.n_pairs, &idx))
                spec.J[idx] = axis_values[a];
            else
                throw std::invalid_argument("SweepGrid: unsupported axis '" + p + "'");
        }
    }
    spec.validate();

    const QProfile profile = renormalize(spec);
    const auto sp = single_particle_energies(profile);

    std::map<std::string, double> row;
    row["q"] = q_uniform;
    row["E0"] = sp.E0;
    double s_total = 0.0;
    for (int i = 1; i <= grid.n_pairs; ++i) {
        const std::string suffix = std::to_string(i);
        row["J" + suffix] = spec.J[i - 1];
        row["h" + suffix] = spec.h[i - 1];
        row["q" + suffix] = profile.q[i - 1].q();
        row["gamma" + suffix] = profile.q[i - 1].gamma;
        row["eps" + suffix] = sp.eps[i - 1];
        const double s_pair = pair_vn_entropy(profile.q[i - 1]);
        row["S_A" + suffix] = s_pair;
        s_total += s_pair;
        if (i < grid.n_pairs) row["validity_ratio" + suffix] = profile.validity_ratio[i - 1];
    }
    row["S_total"] = s_total;

    if (needs_exact(grid.columns)) {
        GroundStateOptions gs_opts;
        gs_opts.size_cap = opts.size_cap;
        gs_opts.search = grid.n_pairs <= opts.all_sector_limit ? SectorSearch::all
                                                               : SectorSearch::sz_zero;
        const GroundStateResult exact = ground_state(spec, gs_opts);
        const PureState ansatz = rainbow_state(profile);
        row["fidelity"] = exact.fidelity(ansatz);
        row["energy_exact"] = exact.energy;
        row["energy_ansatz"] = expectation_energy(spec, ansatz, opts.size_cap);
        row["gap"] = exact.gap;
        row["degeneracy"] = double(exact.degeneracy);
    }
    return row;
}

}  // namespace

std::string run_sweep(const SweepGrid& grid, const SimulationOptions& opts) {
    grid.validate();
    const std::size_t n = grid.n_points();
    const std::size_t n_axes = grid.axes.size();

    std::vector<std::vector<double>> rows(n);
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t point = 0; point < std::int64_t(n); ++point) {
        try {
            // Row-major decomposition, last axis fastest.
            std::vector<double> values(n_axes);
            std::size_t rem = std::size_t(point);
            for (std::size_t a = n_axes; a-- > 0;) {
                values[a] = axis_value(grid.axes[a], int(rem % grid.axes[a].count));
                rem /= grid.axes[a].count;
            }
            const auto row = evaluate_point(grid, values, opts);
            std::vector<double> out;
            out.reserve(grid.columns.size());
            for (const auto& col : grid.columns) {
                const auto it = row.find(col);
                if (it == row.end())
                    throw std::invalid_argument("SweepGrid: unknown column '" + col + "'");
                out.push_back(it->second);
            }
            rows[point] = std::move(out);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    std::ostringstream csv;
    for (std::size_t c = 0; c < grid.columns.size(); ++c)
        csv << (c ? "," : "") << grid.columns[c];
    csv << '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            csv << (c ? "," : "") << format_double(row[c]);
        csv << '\n';
    }
    return csv.str();
}

}  // namespace qrainbow
