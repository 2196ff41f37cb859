#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <nlohmann/json.hpp>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qrainbow/report.hpp"
#include "qrainbow/sweep.hpp"

using namespace qrainbow;
using nlohmann::json;

namespace {

ChainSpec make(int n, std::vector<double> J, std::vector<double> h) {
    ChainSpec spec;
    spec.n_pairs = n;
    spec.J = std::move(J);
    spec.h = std::move(h);
    return spec;
}

}  // namespace

TEST_CASE("chain spec JSON round trip") {
    const ChainSpec spec = make(2, {1.0, 0.1}, {0.7, -0.003});
    const json j = chain_spec_to_json(spec);
    CHECK(j["pairs"] == 2);
    CHECK(j["J"].size() == 2);
    const ChainSpec back = chain_spec_from_json(j);
    CHECK(back.n_pairs == spec.n_pairs);
    CHECK(back.J == spec.J);
    CHECK(back.h == spec.h);

    CHECK_THROWS(chain_spec_from_json(json::parse(R"({"pairs": 2, "J": [1.0]})")));
    CHECK_THROWS(chain_spec_from_json(json::parse(R"({"J": [1.0], "h": [0.0]})")));
}

TEST_CASE("design target JSON") {
    const json j = json::parse(R"({
        "targets": {"S": [0.2, 0.6]},
        "J": [1.0, 0.1],
        "ordering": "as-given",
        "branch": "low"
    })");
    const DesignTarget t = design_target_from_json(j);
    CHECK(t.s_targets.has_value());
    CHECK_FALSE(t.eps_targets.has_value());
    CHECK(t.ordering == OrderingPolicy::as_given);
    CHECK(t.branch == BranchPolicy::low);

    const json back = design_target_to_json(t);
    CHECK(back["ordering"] == "as-given");
    CHECK(back["branch"] == "low");
    CHECK(back["targets"]["S"].size() == 2);

    // defaults
    const DesignTarget d =
        design_target_from_json(json::parse(R"({"targets": {"eps": [1.0]}, "J": [1.0]})"));
    CHECK(d.ordering == OrderingPolicy::optimal);
    CHECK(d.branch == BranchPolicy::optimal);

    CHECK_THROWS(design_target_from_json(json::parse(R"({"targets": {}, "J": [1.0]})")));
    CHECK_THROWS(design_target_from_json(
        json::parse(R"({"targets": {"eps": [1.0]}, "J": [1.0], "ordering": "bogus"})")));
}

TEST_CASE("simulate_report structure") {
    const json r = simulate_report(make(2, {1.0, 0.01}, {0.0, 0.0}));
    CHECK(r.contains("spec"));
    CHECK(r.contains("q_profile"));
    CHECK(r["exact"].contains("energy"));
    CHECK(r["exact"].contains("gap"));
    CHECK(r["exact"].contains("degeneracy"));
    CHECK(r["ansatz"].contains("energy"));
    CHECK(r["ansatz"].contains("fidelity"));
    CHECK(r["entanglement"].contains("exact"));
    CHECK(r["entanglement"].contains("ansatz"));
    CHECK(r["freefermion"].contains("eps"));
    CHECK(r.contains("validity"));

    CHECK(double(r["ansatz"]["fidelity"]) >= 0.999);
    CHECK(double(r["ansatz"]["energy"]) >= double(r["exact"]["energy"]) - 1e-12);
    const double s = double(r["entanglement"]["exact"]["vn_entropy"]);
    CHECK(s > 0.0);
    CHECK(s <= 2.0 * std::log(2.0) + 1e-9);
}

TEST_CASE("single pair report") {
    const json r = simulate_report(make(1, {1.0}, {0.0}));
    CHECK(double(r["ansatz"]["fidelity"]) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(double(r["entanglement"]["exact"]["vn_entropy"]) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("format_double round-trips") {
    for (double x : {0.1, 1.0 / 3.0, 9.6e-5, -2.0 * std::sqrt(2.0), 1e308, 3e-308}) {
        const std::string s = format_double(x);
        CHECK(std::stod(s) == x);
    }
    CHECK(format_double(0.0) == "0");
}

TEST_CASE("spectrum CSV") {
    const std::string csv = spectrum_to_csv({0.5, 1.25});
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "index,energy");
    std::getline(in, line);
    CHECK(line == "0," + format_double(0.5));
    std::getline(in, line);
    CHECK(line == "1," + format_double(1.25));
}

TEST_CASE("sweep grid JSON and validation") {
    const json j = json::parse(R"({
        "mode": "chain",
        "pairs": 2,
        "J": [1.0, 0.1],
        "h": [1.0, 0.0],
        "axes": [{"param": "h2", "min": -0.02, "max": 0.02, "count": 5}],
        "columns": ["h1", "h2", "S_A2", "fidelity"]
    })");
    const SweepGrid grid = sweep_grid_from_json(j);
    CHECK(grid.n_points() == 5);
    grid.validate();

    json bad = j;
    bad["axes"][0]["count"] = 1;
    CHECK_THROWS(sweep_grid_from_json(bad).validate());
}

TEST_CASE("sweep output shape and determinism") {
    SweepGrid grid;
    grid.mode = SweepMode::chain;
    grid.n_pairs = 2;
    grid.J = {1.0, 0.1};
    grid.h = {1.0, 0.0};
    grid.axes = {{"h2", -0.02, 0.02, 5, AxisScale::linear}};
    grid.columns = {"h1", "h2", "S_A2", "fidelity"};

    const std::string csv = run_sweep(grid);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "h1,h2,S_A2,fidelity");
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 5);

#ifdef _OPENMP
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const std::string serial = run_sweep(grid);
    omp_set_num_threads(saved);
    CHECK(serial == csv);
#endif
    CHECK(run_sweep(grid) == csv);
}

TEST_CASE("uniform-q sweep") {
    SweepGrid grid;
    grid.mode = SweepMode::uniform_q;
    grid.n_pairs = 2;
    grid.J = {1.0, 0.01};
    grid.axes = {{"q", 1.0, 10.0, 4, AxisScale::linear}};
    grid.columns = {"q", "S_total", "fidelity"};
    const std::string csv = run_sweep(grid);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "q,S_total,fidelity");
    int rows = 0;
    double min_f = 1.0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++rows;
        const auto last = line.rfind(',');
        min_f = std::min(min_f, std::stod(line.substr(last + 1)));
    }
    CHECK(rows == 4);
    CHECK(min_f >= 1.0 - 5e-4);
}

TEST_CASE("single-point grid") {
    SweepGrid grid;
    grid.mode = SweepMode::chain;
    grid.n_pairs = 1;
    grid.J = {1.0};
    grid.h = {0.0};
    grid.axes = {{"h1", 0.5, 1.0, 2, AxisScale::linear}};
    grid.columns = {"h1", "fidelity"};
    grid.axes[0].count = 2;
    const std::string csv = run_sweep(grid);
    int rows = 0;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 2);
}
