#pragma once

#include <cstdint>
#include <vector>

#include "qrainbow/designer.hpp"

namespace qrainbow {

// Moebius function: 1 at n = 1, (-1)^r for a product of r distinct primes,
// 0 when a squared prime divides n.
int moebius(std::uint64_t n);

// Sieved Moebius values mu(1..limit).
std::vector<std::int8_t> moebius_sieve(std::uint64_t limit);

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// First n primes.
std::vector<std::uint64_t> first_primes(int n);

struct NormalizationResult {
    double A_F;          // zeta(2s)/zeta(s)
    double E0;           // -ln A_F = ln(zeta(s)/zeta(2s))
    double A_F_product;  // via truncated Euler product over primes
    double A_F_sum;      // via truncated square-free sum
    std::uint64_t K;     // truncation actually used
};

// Two-method evaluation of A_F with tail estimates; the truncation starts at
// K and doubles until successive estimates differ by < 1e-10 (cap 1e7).
// Requires s > 1.
NormalizationResult normalization(double s, std::uint64_t K = 1000);

struct PrimeSpectrum {
    double s;
    std::vector<std::uint64_t> primes;  // first N primes, descending
    std::vector<double> eps;            // s ln p_i, descending
};

PrimeSpectrum prime_spectrum(double s, int n_pairs);

// Design target eps_i = s ln p_i with p_i > p_{i+1}, over the given coupling
// profile. Requires s >= 0.
DesignTarget prime_spectrum_target(double s, int n_pairs, const std::vector<double>& J);

}  // namespace qrainbow
