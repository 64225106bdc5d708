#include <doctest.h>

#include <numeric>

#include "growthlab/lattice.hpp"
#include "growthlab/numtheory.hpp"

using namespace growthlab;

namespace {

// independent trial-division sieve used as the oracle
std::vector<uint64_t> trial_division_primes(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t c = 2; c <= n; ++c) {
    bool prime = true;
    for (uint64_t d = 2; d * d <= c; ++d)
      if (c % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("numtheory");

TEST_CASE("primes_up_to basics") {
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(10) == std::vector<uint64_t>{2, 3, 5, 7});
  CHECK(primes_up_to(2) == std::vector<uint64_t>{2});
}

TEST_CASE("primes_up_to against trial division at 1e5") {
  auto fast = primes_up_to(100'000);
  CHECK(fast.size() == 9592);
  CHECK(fast == trial_division_primes(100'000));
}

TEST_CASE("segmented sieve equals serial reference at 1e6") {
  CHECK(primes_up_to(1'000'000) == primes_up_to_serial(1'000'000));
}

TEST_CASE("prime_powers_up_to") {
  CHECK(prime_powers_up_to(1).empty());
  auto pp9 = prime_powers_up_to(9);
  REQUIRE(pp9.size() == 7);
  std::vector<uint64_t> qs;
  for (auto& e : pp9) qs.push_back(e.q);
  CHECK(qs == std::vector<uint64_t>{2, 3, 4, 5, 7, 8, 9});
  CHECK(pp9[2].p == 2);
  CHECK(pp9[2].a == 2);
  CHECK(prime_powers_up_to(100).size() == 35);

  // direct enumeration cross-check
  size_t direct = 0;
  for (uint64_t q = 2; q <= 100; ++q)
    if (prime_power_decompose(q).first != 0) ++direct;
  CHECK(direct == 35);
}

TEST_CASE("lcm_range") {
  CHECK(lcm_range(1) == 1);
  CHECK(lcm_range(6) == 60);

  // oracle: intersection of all sublattices of Z of index <= 6
  CHECK(brute_lambda_zk(6, 1).index() == lcm_range(6));

  // direct fold oracle
  unsigned long long fold = 1;
  for (int i = 1; i <= 20; ++i) fold = std::lcm(fold, (unsigned long long)i);
  CHECK(lcm_range(20) == BigNat(fold));
  CHECK(fold == 232792560ull);
}

TEST_CASE("primorial") {
  CHECK(primorial(1) == 1);
  CHECK(primorial(10) == 210);
  CHECK(primorial(30) == BigNat("6469693230"));
  // strict variant drops the boundary prime
  CHECK(primorial(7, true) == 30);
  CHECK(primorial(7, false) == 210);
  CHECK(primorial(8, true) == primorial(8, false));
}

TEST_CASE("lcm_range divisibility and jump structure") {
  for (uint64_t n = 2; n <= 64; ++n) {
    BigNat cur = lcm_range(n), prev = lcm_range(n - 1);
    CHECK(cur % prev == 0);
    BigNat jump = cur / prev;
    auto [p, a] = prime_power_decompose(n);
    if (p != 0)
      CHECK(jump == p);  // jumps exactly at prime powers, by the base prime
    else
      CHECK(jump == 1);
    CHECK(cur % primorial(n) == 0);
  }
}

TEST_CASE("log twins agree with exact products") {
  CHECK(log_lcm_range(1000) ==
        doctest::Approx(log_of(lcm_range(1000))).epsilon(1e-12));
  CHECK(log_primorial(1000) ==
        doctest::Approx(log_of(primorial(1000))).epsilon(1e-12));
}

TEST_CASE("theta_at matches log_primorial") {
  auto th = theta_at({10, 100, 1000});
  CHECK(th[0] == doctest::Approx(log_primorial(10)).epsilon(1e-12));
  CHECK(th[1] == doctest::Approx(log_primorial(100)).epsilon(1e-12));
  CHECK(th[2] == doctest::Approx(log_primorial(1000)).epsilon(1e-12));
}

TEST_CASE("prime_power_weighted_sum single term") {
  auto r = prime_power_weighted_sum(2, 0);
  CHECK(r.prime_power_sum == doctest::Approx(std::log(2.0)));
  CHECK(r.prime_sum == doctest::Approx(std::log(2.0)));
  CHECK(r.prime_power_ratio == doctest::Approx(std::log(2.0) / 2.0));
}

TEST_CASE("parallel weighted sum equals serial reference") {
  for (unsigned l : {0u, 1u, 3u}) {
    auto a = prime_power_weighted_sum(1'000'000, l);
    auto b = prime_power_weighted_sum_serial(1'000'000, l);
    CHECK(a.prime_power_sum ==
          doctest::Approx(b.prime_power_sum).epsilon(1e-11));
    CHECK(a.prime_sum == doctest::Approx(b.prime_sum).epsilon(1e-11));
  }
}

TEST_CASE("weighted-sum regression at 1e6") {
  // frozen from a verified run; theta(1e6)/1e6 is the l = 0 prime ratio
  auto r0 = prime_power_weighted_sum(1'000'000, 0);
  CHECK(r0.prime_ratio == doctest::Approx(0.99848417502563225).epsilon(1e-9));
  auto r1 = prime_power_weighted_sum(1'000'000, 1);
  CHECK(r1.prime_power_ratio ==
        doctest::Approx(0.50000905048287836).epsilon(1e-9));
  CHECK(r1.prime_ratio == doctest::Approx(0.49922395380526902).epsilon(1e-9));
}

TEST_CASE("asymptotic comparability across n and against primes") {
  // prime vs prime-power ratios within 3x; drift across n below 2x
  for (unsigned l = 0; l <= 3; ++l) {
    double prev_p = 0, prev_pp = 0;
    for (uint64_t n : {10'000ull, 100'000ull, 1'000'000ull}) {
      auto r = prime_power_weighted_sum(n, l);
      CHECK(r.prime_power_ratio / r.prime_ratio < 3.0);
      CHECK(r.prime_power_ratio / r.prime_ratio >= 1.0);
      if (prev_p > 0) {
        double drift_p = r.prime_ratio / prev_p;
        double drift_pp = r.prime_power_ratio / prev_pp;
        CHECK(std::max(drift_p, 1 / drift_p) < 2.0);
        CHECK(std::max(drift_pp, 1 / drift_pp) < 2.0);
      }
      prev_p = r.prime_ratio;
      prev_pp = r.prime_power_ratio;
    }
  }
}

TEST_SUITE_END();
