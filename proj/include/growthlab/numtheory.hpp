#pragma once

#include <cstdint>
#include <vector>

#include "growthlab/bignum.hpp"

namespace growthlab {

// Primes <= n, ascending.  Segmented sieve, OpenMP over segments.
std::vector<uint64_t> primes_up_to(uint64_t n);

// Plain serial Eratosthenes, kept as the reference implementation.
std::vector<uint64_t> primes_up_to_serial(uint64_t n);

struct PrimePower {
  uint64_t q;  // q = p^a
  uint64_t p;
  unsigned a;
};

// Every prime power q = p^a <= n exactly once, ascending by q.
std::vector<PrimePower> prime_powers_up_to(uint64_t n);

// lcm(1..n) as the product over primes p <= n of p^floor(log_p n).
BigNat lcm_range(uint64_t n);

// Product of primes <= n (strict_less: primes < n).
BigNat primorial(uint64_t n, bool strict_less = false);

// Log-space twins; these reach far beyond what the exact products can
// materialize.  log_lcm_range is the Chebyshev psi function, log_primorial
// the theta function.
double log_lcm_range(uint64_t n);
double log_primorial(uint64_t n, bool strict_less = false);

// Chebyshev theta at several thresholds in one sieve pass.
// `thresholds` must be ascending; result[i] = sum of log p over p <= thresholds[i].
std::vector<double> theta_at(const std::vector<uint64_t>& thresholds);

struct WeightedSumResult {
  double prime_power_sum = 0;  // sum over prime powers q <= n of q^l log q
  double prime_sum = 0;        // same sum restricted to primes
  double prime_power_ratio = 0;  // prime_power_sum / n^{l+1}
  double prime_ratio = 0;        // prime_sum / n^{l+1}
};

// The Chebyshev-type sums behind every prime-product asymptotic here.
WeightedSumResult prime_power_weighted_sum(uint64_t n, unsigned l);
WeightedSumResult prime_power_weighted_sum_serial(uint64_t n, unsigned l);

bool is_prime_u64(uint64_t n);

// If q = p^a for a prime p, returns {p, a}; otherwise {0, 0}.
std::pair<uint64_t, unsigned> prime_power_decompose(uint64_t q);

}  // namespace growthlab
