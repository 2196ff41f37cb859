#include "qrainbow/rg.hpp"

#include <cmath>
#include <string>

#include "qrainbow/errors.hpp"

namespace qrainbow {

QProfile renormalize(const ChainSpec& spec) {
    spec.validate();
    const int n = spec.n_pairs;

    QProfile p;
    p.q.reserve(n);
    p.J_eff.reserve(n);
    p.h_eff.reserve(n);

    double Jt = spec.J[0];
    double ht = spec.h[0];
    p.J_eff.push_back(Jt);
    p.h_eff.push_back(ht);
    p.q.push_back(q_from_ratio(ht / Jt));

    for (int i = 2; i <= n; ++i) {
        const QParam& qp = p.q.back();
        const double two_q = quantum_dimension_2(qp);        // [2]_{q_{i-1}}
        const double qdiff = 2.0 * std::sinh(qp.gamma);      // q - 1/q
        const double base = spec.J[i - 1] * spec.J[i - 1] / (two_q * two_q * Jt);
        const double Jt_next = 4.0 * base;
        const double ht_next = spec.h[i - 1] - 2.0 * qdiff * base;
        if (!std::isfinite(Jt_next) || !std::isfinite(ht_next) || !(Jt_next > 0.0))
            throw numeric_range_error("renormalize: non-finite renormalized parameters at pair " +
                                      std::to_string(i));
        const double ratio = ht_next / Jt_next;
        if (!std::isfinite(ratio))
            throw numeric_range_error("renormalize: overflowing q at pair " + std::to_string(i));
        Jt = Jt_next;
        ht = ht_next;
        p.J_eff.push_back(Jt);
        p.h_eff.push_back(ht);
        p.q.push_back(q_from_ratio(ratio));
    }

    for (int i = 1; i < n; ++i) {
        const double outer = std::max(spec.J[i], std::abs(spec.h[i]));
        const double inner = std::max(p.J_eff[i - 1], std::abs(p.h_eff[i - 1]));
        p.validity_ratio.push_back(outer / inner);
    }
    return p;
}

PureState rainbow_state(const QProfile& profile) {
    const int n = profile.n_pairs();
    const BasisConvention basis(n);

    std::vector<SingletAmplitudes> amps;
    amps.reserve(n);
    for (const QParam& q : profile.q) amps.push_back(singlet_amplitudes(q));

    PureState psi;
    psi.n_sites = 2 * n;
    psi.amplitudes = Eigen::VectorXd::Zero(std::size_t(1) << (2 * n));

    // Pair configuration c_i = 0 -> |up,down> on (-i, i), c_i = 1 -> |down,up>.
    for (std::uint64_t c = 0; c < (std::uint64_t(1) << n); ++c) {
        double amp = 1.0;
        std::uint64_t index = 0;
        for (int i = 1; i <= n; ++i) {
            if ((c >> (i - 1)) & 1u) {
                amp *= amps[i - 1].down_up;
                index |= std::uint64_t(1) << basis.bit_of_site(i);
            } else {
                amp *= amps[i - 1].up_down;
                index |= std::uint64_t(1) << basis.bit_of_site(-i);
            }
        }
        psi.amplitudes[index] = amp;
    }
    return psi;
}

namespace {

constexpr int kDim4 = 16;
using Vec16 = Eigen::Matrix<double, kDim4, 1>;
using Mat16 = Eigen::Matrix<double, kDim4, kDim4>;

// bits: site -2 -> 0, -1 -> 1, 1 -> 2, 2 -> 3 (BasisConvention with N = 2)
Mat16 xx_term(int bit_a, int bit_b) {
    Mat16 m = Mat16::Zero();
    for (int a = 0; a < kDim4; ++a) {
        const bool sa = (a >> bit_a) & 1;
        const bool sb = (a >> bit_b) & 1;
        if (sa == sb) continue;
        m(a ^ (1 << bit_a) ^ (1 << bit_b), a) += 2.0;
    }
    return m;
}

Mat16 z_term(int bit) {
    Mat16 m = Mat16::Zero();
    for (int a = 0; a < kDim4; ++a) m(a, a) = ((a >> bit) & 1) ? +1.0 : -1.0;
    return m;
}

Vec16 product_state(int b0, int b1, int b2, int b3) {
    Vec16 v = Vec16::Zero();
    v[b0 | (b1 << 1) | (b2 << 2) | (b3 << 3)] = 1.0;
    return v;
}

// outer spins fixed, pair (-1,1) in the given two-site state (ud, du)
Vec16 dressed_state(int outer_left, int outer_right, double a_ud, double a_du) {
    Vec16 v = Vec16::Zero();
    const int base = outer_left | (outer_right << 3);
    v[base | (1 << 1)] = a_ud;  // -1 up, 1 down
    v[base | (1 << 2)] = a_du;  // -1 down, 1 up
    return v;
}

}  // namespace

PerturbationResult perturbation_oracle_4site(double J1, double h1, double J2, double h2) {
    if (!(J1 > 0.0) || !(J2 > 0.0))
        throw std::invalid_argument("perturbation_oracle_4site: couplings must be positive");

    const QParam q1 = q_from_ratio(h1 / J1);
    const double E1 = -quantum_dimension_2(q1) * J1;
    const auto minus = singlet_amplitudes(q1);
    // |psi^+> = (q^{1/2}|ud> + q^{-1/2}|du>)/sqrt([2]_q)
    const double plus_ud = 1.0 / std::sqrt(1.0 + std::exp(-2.0 * q1.gamma));
    const double plus_du = 1.0 / std::sqrt(1.0 + std::exp(2.0 * q1.gamma));

    const Mat16 V = J2 * (xx_term(0, 1) + xx_term(2, 3)) + h2 * (z_term(0) - z_term(3));

    // Degenerate ground manifold {|m>} and the 12 excited states {|s>,|t>,|k>}.
    std::vector<Vec16> m(4), excited;
    m[0] = dressed_state(1, 1, minus.up_down, minus.down_up);
    m[1] = dressed_state(1, 0, minus.up_down, minus.down_up);
    m[2] = dressed_state(0, 1, minus.up_down, minus.down_up);
    m[3] = dressed_state(0, 0, minus.up_down, minus.down_up);

    std::vector<double> excited_energy;
    for (int l : {1, 0})  // outer-spin patterns (up,up), (up,down), (down,up), (down,down)
        for (int r : {1, 0}) {
            excited.push_back(product_state(l, 1, 1, r));  // pair in |up,up>
            excited_energy.push_back(0.0);
            excited.push_back(product_state(l, 0, 0, r));  // pair in |down,down>
            excited_energy.push_back(0.0);
            excited.push_back(dressed_state(l, r, plus_ud, plus_du));
            excited_energy.push_back(-E1);
        }

    PerturbationResult result;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            result.first_order(a, b) = m[a].dot(V * m[b]);
            double sum = 0.0;
            for (std::size_t n = 0; n < excited.size(); ++n)
                sum += m[a].dot(V * excited[n]) * excited[n].dot(V * m[b]) /
                       (E1 - excited_energy[n]);
            result.second_order(a, b) = sum;
        }

    const Eigen::Matrix4d total = result.first_order + result.second_order;
    // H_eff = C*1 + J2_eff (sx sx + sy sy) + h2_eff (sz_{-2} - sz_2) in the
    // basis {m}: the XX operator couples m2 <-> m3 with element 2, the field
    // operator is diag(0, 2, -2, 0).
    result.J2_eff = total(1, 2) / 2.0;
    result.h2_eff = (total(1, 1) - total(2, 2)) / 4.0;
    result.energy_const = E1 + total(0, 0);
    return result;
}

}  // namespace qrainbow
