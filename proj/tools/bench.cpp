// Compares the OpenMP kernels against their serial reference
// implementations on representative workloads.

#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "growthlab/epicount.hpp"
#include "growthlab/fingroup.hpp"
#include "growthlab/lattice.hpp"
#include "growthlab/laws.hpp"
#include "growthlab/numtheory.hpp"

namespace gl = growthlab;

namespace {

double time_of(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void row(const char* name, double reference, double kernel) {
  std::printf("%-38s %10.3fs %10.3fs %8.2fx\n", name, reference, kernel,
              kernel > 0 ? reference / kernel : 0.0);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-38s %11s %11s %9s\n", "workload", "reference", "kernel",
              "speedup");

  {
    double s = time_of([] { gl::primes_up_to_serial(20'000'000); });
    double p = time_of([] { gl::primes_up_to(20'000'000); });
    row("prime sieve (2e7)", s, p);
  }
  {
    double s = time_of([] { gl::prime_power_weighted_sum_serial(10'000'000, 1); });
    double p = time_of([] { gl::prime_power_weighted_sum(10'000'000, 1); });
    row("Chebyshev-type sum (1e7, l=1)", s, p);
  }
  {
    auto a5 = gl::ConcreteGroup::alternating(5);
    a5.conjugacy_classes();
    double s = time_of([&] { gl::count_generating_tuples_naive(a5, 3); });
    double p = time_of([&] { gl::count_generating_tuples(a5, 3); });
    row("generating triples in A5", s, p);
  }
  {
    auto psl = gl::ConcreteGroup::psl(2, 11);
    psl.conjugacy_classes();
    double s = time_of([&] { gl::count_generating_tuples_naive(psl, 2); });
    double p = time_of([&] { gl::count_generating_tuples(psl, 2); });
    row("generating pairs in PSL2(11)", s, p);
  }
  {
    auto a5 = gl::ConcreteGroup::alternating(5);
    auto x = gl::Word::generator(1, 2), y = gl::Word::generator(2, 2);
    auto w = gl::Word::commutator(x.pow(420), y.pow(420));
    double s = time_of([&] { gl::is_law_naive(w, a5); });
    double p = time_of([&] { gl::is_law(w, a5); });
    row("law check [x^420,y^420] on A5", s, p);
  }
  {
    double s = time_of([] { gl::q_invariant_scan_serial(6000); });
    double p = time_of([] { gl::q_invariant_scan(6000); });
    row("invariant-lattice scan (n=6000)", s, p);
  }
  return 0;
}
