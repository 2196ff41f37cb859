#include "qrainbow/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qrainbow/errors.hpp"

namespace qrainbow {

int moebius(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("moebius: n must be >= 1");
    int r = 0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++r;
    }
    if (n > 1) ++r;
    return r % 2 ? -1 : 1;
}

std::vector<std::int8_t> moebius_sieve(std::uint64_t limit) {
    // Linear sieve via smallest prime factor.
    std::vector<std::int8_t> mu(limit + 1, 1);
    std::vector<std::uint32_t> lp(limit + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (lp[i] == 0) {
            lp[i] = std::uint32_t(i);
            primes.push_back(std::uint32_t(i));
            mu[i] = -1;
        }
        for (std::uint32_t p : primes) {
            if (p > lp[i] || i * p > limit) break;
            lp[i * p] = p;
            mu[i * p] = (p == lp[i]) ? std::int8_t(0) : std::int8_t(-mu[i]);
        }
    }
    if (limit >= 1) mu[0] = 0;
    return mu;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t m = i * i; m <= limit; m += i) composite[m] = true;
    }
    return primes;
}

std::vector<std::uint64_t> first_primes(int n) {
    if (n < 0) throw std::invalid_argument("first_primes: n must be nonnegative");
    std::uint64_t limit = 16;
    for (;;) {
        auto p = primes_up_to(limit);
        if (int(p.size()) >= n) {
            p.resize(n);
            return p;
        }
        limit *= 2;
    }
}

namespace {

// Riemann zeta for real x > 1 by Euler-Maclaurin.
double zeta_em(double x) {
    constexpr int M = 24;
    double sum = 0.0;
    for (int n = 1; n < M; ++n) sum += std::pow(double(n), -x);
    const double Mx = std::pow(double(M), -x);
    sum += double(M) * Mx / (x - 1.0) + 0.5 * Mx;
    // Bernoulli terms B2, B4, B6, B8
    static const double bern[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30};
    double rising = x;       // x(x+1)...(x+2k-2) built incrementally
    double fact = 2.0;       // (2k)!
    double Mpow = Mx / M;    // M^{-x-2k+1}
    for (int k = 1; k <= 4; ++k) {
        sum += bern[k - 1] / fact * rising * Mpow;
        rising *= (x + 2.0 * k - 1.0) * (x + 2.0 * k);
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
        Mpow /= double(M) * double(M);
    }
    return sum;
}

// Prime zeta P(x) = sum_p p^{-x} = sum_n mu(n)/n ln zeta(n x).
double prime_zeta(double x) {
    double total = 0.0;
    for (int n = 1; n * x < 700.0; ++n) {
        const int mu = moebius(n);
        if (mu == 0) continue;
        const double t = std::log(zeta_em(n * x));
        total += mu * t / n;
        if (std::abs(t) < 1e-19 && n > 2) break;
    }
    return total;
}

struct Estimates {
    double inv_product;  // zeta(s)/zeta(2s) via Euler product
    double inv_sum;      // via square-free sum
};

Estimates estimate(double s, const std::vector<std::int8_t>& mu,
                   const std::vector<std::uint64_t>& primes, std::uint64_t K) {
    // Euler product over p <= K with the exact prime-zeta tail:
    // ln prod_p (1+p^{-s}) = sum_m (-1)^{m+1} P(ms)/m.
    double log_prod = 0.0;
    for (std::uint64_t p : primes) log_prod += std::log1p(std::pow(double(p), -s));
    for (int m = 1; m * s < 700.0; ++m) {
        double trunc = 0.0;
        for (std::uint64_t p : primes) {
            const double t = std::pow(double(p), -double(m) * s);
            if (t < 1e-20) break;
            trunc += t;
        }
        const double term = (m % 2 ? 1.0 : -1.0) * (prime_zeta(m * s) - trunc) / m;
        log_prod += term;
        if (std::abs(term) < 1e-19) break;
    }

    // Square-free sum over k <= K with the density tail (6/pi^2) K^{1-s}/(s-1).
    double sum = 0.0;
    for (std::uint64_t k = K; k >= 1; --k)
        if (mu[k] != 0) sum += std::pow(double(k), -s);
    sum += (6.0 / (M_PI * M_PI)) * std::pow(double(K), 1.0 - s) / (s - 1.0);

    return {std::exp(log_prod), sum};
}

}  // namespace

NormalizationResult normalization(double s, std::uint64_t K) {
    if (!(s > 1.0))
        throw std::invalid_argument("normalization: series diverges for s <= 1");
    if (K < 1000) K = 1000;
    constexpr std::uint64_t kCap = 10'000'000;

    double prev_A_F = 0.0;
    Estimates est{};
    for (;;) {
        const auto mu = moebius_sieve(K);
        const auto primes = primes_up_to(K);
        est = estimate(s, mu, primes, K);
        const double A_F = 2.0 / (est.inv_product + est.inv_sum);
        if (prev_A_F != 0.0 && std::abs(A_F - prev_A_F) < 1e-10) break;
        prev_A_F = A_F;
        if (K >= kCap) break;
        K = std::min(K * 2, kCap);
    }

    NormalizationResult out;
    out.A_F_product = 1.0 / est.inv_product;
    out.A_F_sum = 1.0 / est.inv_sum;
    out.K = K;
    if (std::abs(out.A_F_product - out.A_F_sum) > 1e-8)
        throw numeric_range_error("normalization: product/sum cross-check disagreement");
    out.A_F = 0.5 * (out.A_F_product + out.A_F_sum);
    out.E0 = -std::log(out.A_F);
    return out;
}

PrimeSpectrum prime_spectrum(double s, int n_pairs) {
    if (s < 0.0) throw std::invalid_argument("prime_spectrum: s must be nonnegative");
    if (n_pairs < 1) throw std::invalid_argument("prime_spectrum: n_pairs must be >= 1");
    PrimeSpectrum out;
    out.s = s;
    out.primes = first_primes(n_pairs);
    std::reverse(out.primes.begin(), out.primes.end());  // p_i > p_{i+1}
    for (std::uint64_t p : out.primes) out.eps.push_back(s * std::log(double(p)));
    return out;
}

DesignTarget prime_spectrum_target(double s, int n_pairs, const std::vector<double>& J) {
    const PrimeSpectrum sp = prime_spectrum(s, n_pairs);
    DesignTarget target;
    target.eps_targets = sp.eps;
    target.J = J;
    // The prime energies are already in descending-|eps| order.
    target.ordering = OrderingPolicy::as_given;
    return target;
}

}  // namespace qrainbow
