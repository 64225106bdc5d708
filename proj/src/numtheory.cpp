#include "growthlab/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "growthlab/budget.hpp"
#include "growthlab/omp_util.hpp"

namespace growthlab {

std::string format_double17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<uint64_t> primes_up_to_serial(uint64_t n) {
  std::vector<uint64_t> out;
  if (n < 2) return out;
  std::vector<uint8_t> comp(n + 1, 0);
  for (uint64_t i = 2; i * i <= n; ++i)
    if (!comp[i])
      for (uint64_t j = i * i; j <= n; j += i) comp[j] = 1;
  for (uint64_t i = 2; i <= n; ++i)
    if (!comp[i]) out.push_back(i);
  return out;
}

namespace {

constexpr uint64_t kSegment = 1u << 21;

// Runs fn(segment_index, lo, hi, flags) for each segment [lo, hi); flags[i]
// nonzero means lo+i is composite.  Segments are processed in parallel, so fn
// must only touch per-segment state.
template <typename Fn>
void sieve_segments(uint64_t n, const Fn& fn) {
  if (n < 2) return;
  uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  while (root * root > n) --root;
  while ((root + 1) * (root + 1) <= n) ++root;
  std::vector<uint64_t> base = primes_up_to_serial(root);

  uint64_t nseg = (n - 1) / kSegment + 1;  // covers 2..n
  OmpExceptionGuard guard;
#pragma omp parallel
  {
    std::vector<uint8_t> flags(kSegment);
#pragma omp for schedule(dynamic)
    for (int64_t s = 0; s < static_cast<int64_t>(nseg); ++s) {
      guard.run([&] {
        budget::check("sieve");
        uint64_t lo = 2 + static_cast<uint64_t>(s) * kSegment;
        uint64_t hi = std::min(n + 1, lo + kSegment);
        std::fill(flags.begin(), flags.begin() + (hi - lo), 0);
        for (uint64_t p : base) {
          if (p * p >= hi) break;
          uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
          for (uint64_t j = start; j < hi; j += p) flags[j - lo] = 1;
        }
        fn(static_cast<uint64_t>(s), lo, hi, flags.data());
      });
    }
  }
  guard.rethrow();
}

}  // namespace

std::vector<uint64_t> primes_up_to(uint64_t n) {
  if (n < 2) return {};
  uint64_t nseg = (n - 1) / kSegment + 1;
  std::vector<std::vector<uint64_t>> per_seg(nseg);
  sieve_segments(n, [&](uint64_t s, uint64_t lo, uint64_t hi,
                        const uint8_t* flags) {
    auto& v = per_seg[s];
    for (uint64_t i = lo; i < hi; ++i)
      if (!flags[i - lo]) v.push_back(i);
  });
  std::vector<uint64_t> out;
  for (auto& v : per_seg) out.insert(out.end(), v.begin(), v.end());
  return out;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<uint64_t, unsigned> prime_power_decompose(uint64_t q) {
  if (q < 2) return {0, 0};
  uint64_t p = q;
  for (uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  uint64_t m = q;
  unsigned a = 0;
  while (m % p == 0) {
    m /= p;
    ++a;
  }
  if (m != 1) return {0, 0};
  return {p, a};
}

std::vector<PrimePower> prime_powers_up_to(uint64_t n) {
  std::vector<PrimePower> out;
  if (n < 2) return out;
  for (uint64_t p : primes_up_to(n)) {
    uint64_t q = p;
    unsigned a = 1;
    while (true) {
      out.push_back({q, p, a});
      if (q > n / p) break;
      q *= p;
      ++a;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PrimePower& x, const PrimePower& y) { return x.q < y.q; });
  return out;
}

BigNat lcm_range(uint64_t n) {
  if (n < 1) throw std::invalid_argument("lcm_range: n >= 1 required");
  BigNat acc = 1;
  for (uint64_t p : primes_up_to(n)) {
    uint64_t q = p;
    while (q <= n / p) q *= p;  // largest power of p that is <= n
    acc *= q;
  }
  return acc;
}

BigNat primorial(uint64_t n, bool strict_less) {
  if (n < 1) throw std::invalid_argument("primorial: n >= 1 required");
  BigNat acc = 1;
  for (uint64_t p : primes_up_to(n)) {
    if (strict_less && p == n) continue;
    acc *= p;
  }
  return acc;
}

double log_lcm_range(uint64_t n) {
  if (n < 1) throw std::invalid_argument("log_lcm_range: n >= 1 required");
  if (n < 2) return 0.0;
  uint64_t nseg = (n - 1) / kSegment + 1;
  std::vector<double> partial(nseg, 0.0);
  sieve_segments(n, [&](uint64_t s, uint64_t lo, uint64_t hi,
                        const uint8_t* flags) {
    double acc = 0;
    for (uint64_t i = lo; i < hi; ++i)
      if (!flags[i - lo]) {
        uint64_t q = i, p = i;
        while (q <= n / p) q *= p;
        acc += std::log(static_cast<double>(q));
      }
    partial[s] = acc;
  });
  double total = 0;
  for (double v : partial) total += v;  // deterministic fold order
  return total;
}

double log_primorial(uint64_t n, bool strict_less) {
  if (n < 1) throw std::invalid_argument("log_primorial: n >= 1 required");
  if (n < 2) return 0.0;
  uint64_t nseg = (n - 1) / kSegment + 1;
  std::vector<double> partial(nseg, 0.0);
  sieve_segments(n, [&](uint64_t s, uint64_t lo, uint64_t hi,
                        const uint8_t* flags) {
    double acc = 0;
    for (uint64_t i = lo; i < hi; ++i)
      if (!flags[i - lo]) {
        if (strict_less && i == n) continue;
        acc += std::log(static_cast<double>(i));
      }
    partial[s] = acc;
  });
  double total = 0;
  for (double v : partial) total += v;
  return total;
}

std::vector<double> theta_at(const std::vector<uint64_t>& thresholds) {
  if (thresholds.empty()) return {};
  if (!std::is_sorted(thresholds.begin(), thresholds.end()))
    throw std::invalid_argument("theta_at: thresholds must ascend");
  uint64_t n = thresholds.back();
  if (n < 2) return std::vector<double>(thresholds.size(), 0.0);
  uint64_t nseg = (n - 1) / kSegment + 1;
  // Per segment, the contribution to each threshold bucket; buckets are
  // prefix-summed after the deterministic fold.
  std::vector<std::vector<double>> partial(nseg);
  sieve_segments(n, [&](uint64_t s, uint64_t lo, uint64_t hi,
                        const uint8_t* flags) {
    std::vector<double> acc(thresholds.size(), 0.0);
    for (uint64_t i = lo; i < hi; ++i)
      if (!flags[i - lo]) {
        auto it = std::lower_bound(thresholds.begin(), thresholds.end(), i);
        if (it != thresholds.end())
          acc[it - thresholds.begin()] += std::log(static_cast<double>(i));
      }
    partial[s] = std::move(acc);
  });
  std::vector<double> out(thresholds.size(), 0.0);
  for (auto& seg : partial)
    if (!seg.empty())
      for (size_t t = 0; t < out.size(); ++t) out[t] += seg[t];
  for (size_t t = 1; t < out.size(); ++t) out[t] += out[t - 1];
  return out;
}

namespace {

double pow_u64(uint64_t q, unsigned l) {
  double b = static_cast<double>(q), r = 1;
  for (unsigned i = 0; i < l; ++i) r *= b;
  return r;
}

}  // namespace

WeightedSumResult prime_power_weighted_sum_serial(uint64_t n, unsigned l) {
  if (n < 2) throw std::invalid_argument("prime_power_weighted_sum: n >= 2");
  WeightedSumResult r;
  for (const auto& pp : prime_powers_up_to(n)) {
    double term = pow_u64(pp.q, l) * std::log(static_cast<double>(pp.q));
    r.prime_power_sum += term;
    if (pp.a == 1) r.prime_sum += term;
  }
  double denom = pow_u64(n, l + 1);
  r.prime_power_ratio = r.prime_power_sum / denom;
  r.prime_ratio = r.prime_sum / denom;
  return r;
}

WeightedSumResult prime_power_weighted_sum(uint64_t n, unsigned l) {
  if (n < 2) throw std::invalid_argument("prime_power_weighted_sum: n >= 2");
  uint64_t nseg = (n - 1) / kSegment + 1;
  std::vector<double> part_pp(nseg, 0.0), part_p(nseg, 0.0);
  sieve_segments(n, [&](uint64_t s, uint64_t lo, uint64_t hi,
                        const uint8_t* flags) {
    double app = 0, ap = 0;
    for (uint64_t i = lo; i < hi; ++i)
      if (!flags[i - lo]) {
        uint64_t p = i;
        double term = pow_u64(p, l) * std::log(static_cast<double>(p));
        ap += term;
        app += term;
        // higher powers of p within range
        uint64_t q = p;
        while (q <= n / p) {
          q *= p;
          app += pow_u64(q, l) * std::log(static_cast<double>(q));
        }
      }
    part_pp[s] = app;
    part_p[s] = ap;
  });
  WeightedSumResult r;
  for (uint64_t s = 0; s < nseg; ++s) {
    r.prime_power_sum += part_pp[s];
    r.prime_sum += part_p[s];
  }
  double denom = pow_u64(n, l + 1);
  r.prime_power_ratio = r.prime_power_sum / denom;
  r.prime_ratio = r.prime_sum / denom;
  return r;
}

}  // namespace growthlab
