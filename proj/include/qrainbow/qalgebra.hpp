#pragma once

#include <cmath>
#include <stdexcept>

namespace qrainbow {

// Deformation parameter q = e^gamma. Stored as gamma so that extreme
// deformations (|eps| up to ~1400, eps = -2*gamma) stay representable.
struct QParam {
    double gamma = 0.0;

    QParam() = default;

    static QParam from_gamma(double g) {
        QParam p;
        p.gamma = g;
        return p;
    }

    static QParam from_q(double q) {
        if (!(q > 0.0)) throw std::invalid_argument("QParam: q must be positive");
        return from_gamma(std::log(q));
    }

    // gamma = asinh(ratio) with ratio = h/J (or renormalized h~/J~).
    static QParam from_ratio(double ratio) {
        if (!std::isfinite(ratio))
            throw std::invalid_argument("QParam: ratio must be finite");
        return from_gamma(std::asinh(ratio));
    }

    double q() const { return std::exp(gamma); }
    QParam inverse() const { return from_gamma(-gamma); }
};

inline QParam q_from_ratio(double ratio) { return QParam::from_ratio(ratio); }

// Quantum dimension [x]_q = (q^x - q^-x)/(q - 1/q) = sinh(x*gamma)/sinh(gamma),
// with the limit value x at q = 1.
inline double quantum_dimension(double x, const QParam& q) {
    const double g = q.gamma;
    if (std::abs(g) < 1e-12) return x;
    return std::sinh(x * g) / std::sinh(g);
}

// [2]_q = q + 1/q = 2*cosh(gamma).
inline double quantum_dimension_2(const QParam& q) { return 2.0 * std::cosh(q.gamma); }

struct SingletAmplitudes {
    double up_down;  // amplitude of |up,down> on the pair (-i, i)
    double down_up;  // amplitude of |down,up>
};

// q-singlet (q^{-1/2}|ud> - q^{1/2}|du>)/sqrt([2]_q), evaluated in the gamma
// domain: up_down = 1/sqrt(1+e^{2g}), down_up = -1/sqrt(1+e^{-2g}). Stable for
// arbitrarily large |gamma| (limits (0,-1) and (1,0)).
inline SingletAmplitudes singlet_amplitudes(const QParam& q) {
    const double g = q.gamma;
    SingletAmplitudes a;
    a.up_down = 1.0 / std::sqrt(1.0 + std::exp(2.0 * g));
    a.down_up = -1.0 / std::sqrt(1.0 + std::exp(-2.0 * g));
    return a;
}

}  // namespace qrainbow
