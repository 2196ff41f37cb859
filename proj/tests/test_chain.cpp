#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <bit>
#include <cmath>

#include "qrainbow/chain.hpp"
#include "qrainbow/errors.hpp"

using namespace qrainbow;

namespace {

ChainSpec make(int n, std::vector<double> J, std::vector<double> h) {
    ChainSpec spec;
    spec.n_pairs = n;
    spec.J = std::move(J);
    spec.h = std::move(h);
    return spec;
}

}  // namespace

TEST_CASE("basis convention") {
    BasisConvention conv(3);
    CHECK(conv.bit_of_site(-3) == 0);
    CHECK(conv.bit_of_site(-1) == 2);
    CHECK(conv.bit_of_site(1) == 3);
    CHECK(conv.bit_of_site(3) == 5);
    CHECK(conv.spin_z(0b000100, -1) == +1);
    CHECK(conv.spin_z(0b000100, 1) == -1);
}

TEST_CASE("two-site Sz=0 block") {
    // N=1, J=1, h=1: in the basis {|ud>, |du>} (up on site -1 vs up on site 1)
    // the diagonal is 2h (sigma^z_{-1} - sigma^z_1) and the off-diagonal 2J.
    const auto H = build_full_hamiltonian(make(1, {1.0}, {1.0}));
    REQUIRE(H.rows() == 4);
    BasisConvention conv(1);
    const int ud = 1 << conv.bit_of_site(-1);  // up on -1, down on 1
    const int du = 1 << conv.bit_of_site(1);
    CHECK(H(ud, ud) == doctest::Approx(2.0));
    CHECK(H(du, du) == doctest::Approx(-2.0));
    CHECK(H(ud, du) == doctest::Approx(2.0));
    CHECK(H(du, ud) == doctest::Approx(2.0));
    // fully polarized states feel no field (sigma^z_{-1} - sigma^z_1 cancels)
    CHECK(H(0, 0) == doctest::Approx(0.0));
    CHECK(H(3, 3) == doctest::Approx(0.0));
}

TEST_CASE("two-site XX ground state") {
    const auto H = build_full_hamiltonian(make(1, {1.0}, {0.0}));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    CHECK(es.eigenvalues()(0) == doctest::Approx(-2.0).epsilon(1e-14));
    Eigen::VectorXd v = es.eigenvectors().col(0);
    if (v(1) < 0.0) v = -v;
    CHECK(v(1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(v(2) == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::abs(v(0)) < 1e-12);
    CHECK(std::abs(v(3)) < 1e-12);
}

TEST_CASE("sector blocks tile the full matrix") {
    const ChainSpec spec = make(2, {1.0, 0.1}, {0.7, -0.3});
    const auto H = build_full_hamiltonian(spec);
    const auto blocks = build_sector_blocks(spec);

    std::size_t total = 0;
    for (const auto& b : blocks) {
        total += b.indices.size();
        CHECK((b.matrix - b.matrix.transpose()).cwiseAbs().maxCoeff() <= 1e-14);
        for (std::size_t a = 0; a < b.indices.size(); ++a) {
            const int pop = std::popcount(b.indices[a]);
            CHECK(2 * pop - 2 * spec.n_pairs == b.magnetization);
            for (std::size_t c = 0; c < b.indices.size(); ++c)
                CHECK(b.matrix(a, c) == H(b.indices[a], b.indices[c]));
        }
    }
    CHECK(total == spec.dimension());
}

TEST_CASE("magnetization conservation in the full matrix") {
    const ChainSpec spec = make(2, {1.0, 0.4}, {0.2, 0.9});
    const auto H = build_full_hamiltonian(spec);
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b)
            if (std::popcount(unsigned(a)) != std::popcount(unsigned(b)))
                CHECK(H(a, b) == 0.0);
}

TEST_CASE("off-diagonals only between adjacent exchanges") {
    const ChainSpec spec = make(2, {1.0, 0.3}, {0.1, 0.2});
    const auto H = build_full_hamiltonian(spec);
    BasisConvention conv(2);
    // bonds in Eq.-8 geometry: (-1,1), (-2,-1), (1,2)
    const int bonds[3][2] = {{conv.bit_of_site(-1), conv.bit_of_site(1)},
                             {conv.bit_of_site(-2), conv.bit_of_site(-1)},
                             {conv.bit_of_site(1), conv.bit_of_site(2)}};
    for (int a = 0; a < 16; ++a) {
        for (int b = 0; b < 16; ++b) {
            if (a == b) continue;
            bool allowed = false;
            for (const auto& bond : bonds) {
                const int mask = (1 << bond[0]) | (1 << bond[1]);
                if ((a ^ b) == mask && std::popcount(unsigned(a & mask)) == 1)
                    allowed = true;
            }
            if (!allowed) CHECK(H(a, b) == 0.0);
        }
    }
}

TEST_CASE("field antisymmetry under global spin flip") {
    const ChainSpec spec = make(3, {1.0, 0.3, 0.05}, {0.8, -0.4, 0.1});
    ChainSpec flipped = spec;
    for (double& f : flipped.h) f = -f;
    const auto H = build_full_hamiltonian(spec);
    const auto Hf = build_full_hamiltonian(flipped);
    const int dim = int(spec.dimension());
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            CHECK(H(a, b) == doctest::Approx(Hf((dim - 1) ^ a, (dim - 1) ^ b)).epsilon(1e-14));
}

TEST_CASE("ground_energy_pair") {
    CHECK(ground_energy_pair(1.0, 0.0) == doctest::Approx(-2.0));
    CHECK(ground_energy_pair(1.0, 1.0) == doctest::Approx(-2.0 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(ground_energy_pair(2.0, 0.0) == doctest::Approx(-4.0));
    CHECK_THROWS_AS(ground_energy_pair(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ground_energy_pair(-1.0, 0.0), std::invalid_argument);

    // matches the 4x4 eigensolve on a grid
    for (double h = -3.0; h <= 3.0; h += 0.5) {
        const auto H = build_full_hamiltonian(make(1, {1.0}, {h}));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H, Eigen::EigenvaluesOnly);
        CHECK(ground_energy_pair(1.0, h) == doctest::Approx(es.eigenvalues()(0)).epsilon(1e-13));
    }
}

TEST_CASE("validation and caps") {
    CHECK_THROWS_AS(build_full_hamiltonian(make(0, {}, {})), std::invalid_argument);
    CHECK_THROWS_AS(build_full_hamiltonian(make(1, {-1.0}, {0.0})), std::invalid_argument);
    CHECK_THROWS_AS(build_full_hamiltonian(make(2, {1.0}, {0.0, 0.0})), std::invalid_argument);
    CHECK_THROWS_AS(build_full_hamiltonian(make(2, {1.0, 0.1}, {0.0, 0.0}), 8), resource_error);
    CHECK_THROWS_AS(build_sector_blocks(make(2, {1.0, 0.1}, {0.0, 0.0}), 8), resource_error);
}
