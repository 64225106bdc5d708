#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "growthlab/bignum.hpp"
#include "growthlab/census.hpp"

namespace growthlab {

// Subgroup class the intersection runs over.
enum class Flavor { All, Normal, Max, MaxNormal };

const char* flavor_tag(Flavor f);
std::optional<Flavor> flavor_from_tag(const std::string& tag);

enum class EvalMode { Exact, Hybrid, Estimate };
const char* mode_tag(EvalMode m);

// A single growth value: exact integer, a log-space point, or a
// [lower, upper] log-space bracket.
struct GrowthValue {
  enum class Kind { Exact, Log, Bracket };
  Kind kind = Kind::Exact;
  BigNat exact = 1;
  double log_lo = 0, log_hi = 0;
  EvalMode mode = EvalMode::Exact;

  static GrowthValue exact_value(BigNat v, EvalMode m = EvalMode::Exact);
  static GrowthValue log_value(double lg, EvalMode m);
  static GrowthValue bracket(double lo, double hi, EvalMode m);

  double log_mid() const;   // midpoint in log space
  double log_low() const;
  double log_high() const;
  std::string value_text() const;  // decimal, "log:...", or "log:lo..hi"
};

struct GrowthSeries {
  std::string label;
  Flavor flavor = Flavor::All;
  std::string method;
  std::vector<std::pair<uint64_t, GrowthValue>> points;  // ascending n
};

// --- Z^k -------------------------------------------------------------------
// All/Normal: lcm(1..n)^k.  Max/MaxNormal: primorial(n)^k.
BigNat ig_zk(uint64_t n, int k, Flavor flavor, bool strict_lt = false);
double log_ig_zk(uint64_t n, int k, Flavor flavor, bool strict_lt = false);

// --- SL_k(Z), k >= 3 --------------------------------------------------------
// Step functions over the per-prime factors.
BigNat ig_slk_max_normal(uint64_t n, int k);
double log_ig_slk_max_normal(uint64_t n, int k);
BigNat ig_slk_max(uint64_t n, int k);
double log_ig_slk_max(uint64_t n, int k);
// Normal flavor is only delivered as a bracket (congruence kernels below,
// the per-prime k*n bound above).
std::pair<LogValue, LogValue> ig_slk_normal_bracket(uint64_t n, int k);
// The n-values where the step functions jump, ascending, clipped to
// [lo, hi]; these are the natural sample points for exponent fits.
std::vector<uint64_t> slk_jump_thresholds(int k, Flavor flavor, uint64_t lo,
                                          uint64_t hi);

// --- free groups -------------------------------------------------------------
// Census product for F^k, flavors Max / MaxNormal.
GrowthValue ig_free(uint64_t n, int k, Flavor flavor, EvalMode mode);
GrowthSeries ig_free_series(const std::vector<uint64_t>& ns, int k,
                            Flavor flavor, EvalMode mode);

struct FamilyGrowth {
  GrowthValue value;  // log of the family sub-product (estimate mode)
  int dimension = 0;  // Lie dimension d entering the predicted exponent
};

// Sub-product of ig_free restricted to a single-parameter family; for
// two-parameter rows fix m and vary q.
FamilyGrowth family_growth(Family family, long long m_fixed, uint64_t n, int k,
                           Flavor flavor);

// Lie-type single-parameter families with at least one census entry of order
// <= n (pairs of family and fixed m; one-parameter rows carry m = 0).
std::vector<std::pair<Family, long long>> lie_families_in_census(uint64_t n);

// --- combinators -------------------------------------------------------------
// Pointwise product (direct factors multiply growth).
GrowthSeries ig_product(const GrowthSeries& a, const GrowthSeries& b);

// --- fits ---------------------------------------------------------------------
enum class FitModel { LogPoly };  // log(log i(n)) = c + alpha log n

struct FitResult {
  double alpha = 0;
  double r2 = 0;
  size_t points = 0;
};

// Least-squares slope of log(log i) against log n.  Requires >= 8 points
// spanning >= 3 decades with positive log values.
FitResult fit_exponent(const std::vector<std::pair<double, double>>& n_vs_log,
                       FitModel model = FitModel::LogPoly);
FitResult fit_series(const GrowthSeries& s, FitModel model = FitModel::LogPoly);

// Log-spaced integer sample points in [lo, hi].
std::vector<uint64_t> log_spaced(uint64_t lo, uint64_t hi, size_t count);

// --- export -------------------------------------------------------------------
std::string series_to_csv(const GrowthSeries& s);
std::string series_to_json(const GrowthSeries& s);
std::string series_to_gnuplot(const GrowthSeries& s);  // "n log_value" rows

}  // namespace growthlab
