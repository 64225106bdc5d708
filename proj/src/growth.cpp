#include "growthlab/growth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "growthlab/budget.hpp"
#include "growthlab/epicount.hpp"
#include "growthlab/numtheory.hpp"

namespace growthlab {

const char* flavor_tag(Flavor f) {
  switch (f) {
    case Flavor::All: return "all";
    case Flavor::Normal: return "normal";
    case Flavor::Max: return "max";
    case Flavor::MaxNormal: return "max-normal";
  }
  return "?";
}

std::optional<Flavor> flavor_from_tag(const std::string& tag) {
  if (tag == "all") return Flavor::All;
  if (tag == "normal") return Flavor::Normal;
  if (tag == "max") return Flavor::Max;
  if (tag == "max-normal" || tag == "maxnormal") return Flavor::MaxNormal;
  return std::nullopt;
}

const char* mode_tag(EvalMode m) {
  switch (m) {
    case EvalMode::Exact: return "exact";
    case EvalMode::Hybrid: return "hybrid";
    case EvalMode::Estimate: return "estimate";
  }
  return "?";
}

GrowthValue GrowthValue::exact_value(BigNat v, EvalMode m) {
  GrowthValue g;
  g.kind = Kind::Exact;
  g.exact = std::move(v);
  g.log_lo = g.log_hi = log_of(g.exact);
  g.mode = m;
  return g;
}

GrowthValue GrowthValue::log_value(double lg, EvalMode m) {
  GrowthValue g;
  g.kind = Kind::Log;
  g.log_lo = g.log_hi = lg;
  g.mode = m;
  return g;
}

GrowthValue GrowthValue::bracket(double lo, double hi, EvalMode m) {
  GrowthValue g;
  g.kind = Kind::Bracket;
  g.log_lo = lo;
  g.log_hi = hi;
  g.mode = m;
  return g;
}

double GrowthValue::log_mid() const { return (log_lo + log_hi) / 2; }
double GrowthValue::log_low() const { return log_lo; }
double GrowthValue::log_high() const { return log_hi; }

std::string GrowthValue::value_text() const {
  switch (kind) {
    case Kind::Exact: return to_decimal(exact);
    case Kind::Log: return "log:" + format_double17(log_lo);
    case Kind::Bracket:
      return "log:" + format_double17(log_lo) + ".." + format_double17(log_hi);
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Z^k

BigNat ig_zk(uint64_t n, int k, Flavor flavor, bool strict_lt) {
  if (n < 1 || k < 1) throw std::invalid_argument("ig_zk: n >= 1, k >= 1");
  BigNat base;
  if (flavor == Flavor::All || flavor == Flavor::Normal)
    base = lcm_range(n);
  else
    base = primorial(n, strict_lt);
  BigNat r = 1;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

double log_ig_zk(uint64_t n, int k, Flavor flavor, bool strict_lt) {
  if (n < 1 || k < 1) throw std::invalid_argument("ig_zk: n >= 1, k >= 1");
  double base = (flavor == Flavor::All || flavor == Flavor::Normal)
                    ? log_lcm_range(n)
                    : log_primorial(n, strict_lt);
  return base * k;
}

// ---------------------------------------------------------------------------
// SL_k(Z)

namespace {

BigNat qpow_small(uint64_t p, int e) {
  BigNat r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

void require_slk(int k) {
  if (k < 3)
    throw std::invalid_argument(
        "SL_k growth: k >= 3 required (congruence subgroup property)");
}

// |PSL_k(F_p)| and |SL_k(F_p)| for a prime p.
BigNat psl_order(int k, uint64_t p) {
  return order_of(Family::PSL, k, static_cast<long long>(p));
}

BigNat sl_order_p(int k, uint64_t p) {
  return psl_order(k, p) * std::gcd(static_cast<long long>(k),
                                    static_cast<long long>(p) - 1);
}

// Primes whose factor participates at threshold n, i.e. |PSL_k(F_p)| <= n
// (MaxNormal / Normal) or (p^k-1)/(p-1) <= n (Max).
std::vector<uint64_t> participating_primes(uint64_t n, int k, Flavor flavor) {
  std::vector<uint64_t> out;
  // generous prime search bound: |PSL_k(F_p)| > (p/2)^{k^2-1} >= p for all k
  uint64_t pmax;
  if (flavor == Flavor::Max) {
    // (p^k-1)/(p-1) > p^{k-1}, so p <= n^{1/(k-1)} + 1
    pmax = static_cast<uint64_t>(
               std::pow(static_cast<double>(n), 1.0 / (k - 1))) +
           2;
  } else {
    pmax = static_cast<uint64_t>(
               2.0 * std::pow(static_cast<double>(n),
                              1.0 / (static_cast<double>(k) * k - 1))) +
           2;
  }
  for (uint64_t p : primes_up_to(pmax)) {
    if (flavor == Flavor::Max) {
      BigNat pts = (qpow_small(p, k) - 1) / (BigNat(p) - 1);
      if (pts <= n) out.push_back(p);
    } else {
      if (psl_order(k, p) <= n) out.push_back(p);
    }
  }
  return out;
}

}  // namespace

BigNat ig_slk_max_normal(uint64_t n, int k) {
  require_slk(k);
  BigNat r = 1;
  for (uint64_t p : participating_primes(n, k, Flavor::MaxNormal))
    r *= psl_order(k, p);
  return r;
}

double log_ig_slk_max_normal(uint64_t n, int k) {
  require_slk(k);
  double acc = 0;
  for (uint64_t p : participating_primes(n, k, Flavor::MaxNormal))
    acc += log_of(psl_order(k, p));
  return acc;
}

BigNat ig_slk_max(uint64_t n, int k) {
  require_slk(k);
  BigNat r = 1;
  for (uint64_t p : participating_primes(n, k, Flavor::Max))
    r *= psl_order(k, p);
  return r;
}

double log_ig_slk_max(uint64_t n, int k) {
  require_slk(k);
  double acc = 0;
  for (uint64_t p : participating_primes(n, k, Flavor::Max))
    acc += log_of(psl_order(k, p));
  return acc;
}

std::pair<LogValue, LogValue> ig_slk_normal_bracket(uint64_t n, int k) {
  require_slk(k);
  double lo = 0, hi = 0;
  double log_n = std::log(static_cast<double>(n));
  double log_k = std::log(static_cast<double>(k));
  for (uint64_t p : participating_primes(n, k, Flavor::MaxNormal)) {
    // lower: the largest congruence-kernel index |SL_k(Z/p^s)| <= n
    BigNat level = sl_order_p(k, p);
    BigNat step = qpow_small(p, k * k - 1);
    BigNat best = 0;
    while (level <= n) {
      best = level;
      level *= step;
    }
    if (best > 0) lo += log_of(best);
    // upper: the per-prime bound i^< (n) <= k n
    hi += log_k + log_n;
  }
  return {LogValue{lo}, LogValue{hi}};
}

std::vector<uint64_t> slk_jump_thresholds(int k, Flavor flavor, uint64_t lo,
                                          uint64_t hi) {
  require_slk(k);
  std::vector<uint64_t> out;
  uint64_t pmax;
  if (flavor == Flavor::Max)
    pmax = static_cast<uint64_t>(
               std::pow(static_cast<double>(hi), 1.0 / (k - 1))) +
           2;
  else
    pmax = static_cast<uint64_t>(
               2.0 * std::pow(static_cast<double>(hi),
                              1.0 / (static_cast<double>(k) * k - 1))) +
           2;
  for (uint64_t p : primes_up_to(pmax)) {
    BigNat jump = flavor == Flavor::Max
                      ? (qpow_small(p, k) - 1) / (BigNat(p) - 1)
                      : psl_order(k, p);
    if (jump >= lo && jump <= hi) out.push_back(jump.convert_to<uint64_t>());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// free groups: census products

namespace {

struct CensusEntry {
  SimpleGroupDescriptor desc;
  uint64_t threshold;  // n at which the factor enters
  double log_order;
  double d_lo, d_hi;   // estimate-mode exponent bounds (equal when out known)
  bool exactable;      // exact tuple count possible under the caps
};

// d(k, S) via exact tuple counting, memoized across calls.
BigNat d_exact_cached(const SimpleGroupDescriptor& desc, int k) {
  static std::map<std::tuple<int, long long, long long, int>, BigNat> cache;
  static std::mutex mu;
  auto key = std::make_tuple(static_cast<int>(desc.family), desc.m, desc.q, k);
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto g = realize(desc);
  if (!g) throw CapExceeded("ig_free: " + desc.name + " is not constructible");
  BigNat d = d_of(*g, desc, k);
  std::lock_guard lock(mu);
  cache.emplace(key, d);
  return d;
}

// Collects the nonabelian entries entering the product at threshold <= max_n.
std::vector<CensusEntry> free_entries(uint64_t max_n, int k, Flavor flavor,
                                      std::optional<Family> only_family,
                                      long long only_m) {
  if (flavor != Flavor::Max && flavor != Flavor::MaxNormal)
    throw std::invalid_argument(
        "ig_free: census products cover the max and max-normal flavors");
  CensusSlice slice = [&] {
    if (flavor == Flavor::MaxNormal)
      return enumerate_simple(BigNat(max_n), false, true);
    // Max flavor: entries enter at min_index <= n; alternating factors push
    // the per-entry exponent past double range beyond n = 169.
    if (max_n > 169)
      throw Unsupported(
          "ig_free: max flavor beyond n = 169 leaves double range "
          "(alternating-family factors)");
    return enumerate_simple_by_min_index(max_n);
  }();

  std::vector<CensusEntry> out;
  for (const auto& d : slice.entries) {
    if (only_family && (d.family != *only_family ||
                        (family_is_lie(d.family) && two_param_family(d.family) &&
                         d.m != only_m)))
      continue;
    CensusEntry e;
    e.desc = d;
    if (flavor == Flavor::MaxNormal) {
      e.threshold = d.order.convert_to<uint64_t>();
    } else {
      if (!d.min_index) continue;  // sporadic entries carry no index column
      if (*d.min_index > max_n) continue;
      e.threshold = d.min_index->convert_to<uint64_t>();
    }
    if (e.threshold > max_n) continue;
    e.log_order = log_of(d.order);
    e.exactable = d.constructible && d.order <= kEnumerationCap &&
                  d.out_order.has_value() && k <= kExactKMax;
    if (d.out_order) {
      double dd = d_estimate(d, k).convert_to<double>();
      e.d_lo = e.d_hi = dd;
    } else {
      // |Out| unknown: bracket d between |S|^{k-2} and |S|^{k-1}
      double o = d.order.convert_to<double>();
      e.d_hi = std::pow(o, k - 1);
      e.d_lo = k >= 2 ? std::pow(o, k - 2) : 1.0;
      if (!std::isfinite(e.d_hi * e.log_order))
        throw Unsupported("ig_free: factor for " + d.name +
                          " leaves double range");
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(),
            [](const CensusEntry& a, const CensusEntry& b) {
              return a.threshold < b.threshold;
            });
  return out;
}

}  // namespace

GrowthSeries ig_free_series(const std::vector<uint64_t>& ns, int k,
                            Flavor flavor, EvalMode mode) {
  if (k < 2) throw std::invalid_argument("ig_free: k >= 2 required");
  if (ns.empty()) return {};
  std::vector<uint64_t> sorted = ns;
  std::sort(sorted.begin(), sorted.end());
  uint64_t max_n = sorted.back();

  auto entries = free_entries(max_n, k, flavor, std::nullopt, 0);

  GrowthSeries series;
  series.label = "F" + std::to_string(k);
  series.flavor = flavor;
  series.method = "census-product";

  if (mode == EvalMode::Exact) {
    for (uint64_t n : sorted) {
      // abelian factors: Z/p enters at n >= p in both flavors
      BigNat acc = ig_zk(n, k, Flavor::Max);
      for (const auto& e : entries) {
        if (e.threshold > n) continue;
        if (!e.exactable)
          throw CapExceeded("ig_free exact: " + e.desc.name +
                            " is beyond the enumeration cap");
        unsigned d = d_exact_cached(e.desc, k).convert_to<unsigned>();
        acc *= boost::multiprecision::pow(e.desc.order, d);
      }
      series.points.emplace_back(n, GrowthValue::exact_value(acc));
    }
    return series;
  }

  // estimate / hybrid: log-space prefix sums over entry thresholds
  std::vector<double> theta = theta_at(sorted);
  std::vector<double> pre_lo(entries.size() + 1, 0),
      pre_hi(entries.size() + 1, 0);
  std::vector<uint8_t> entry_exact(entries.size(), 0);
  std::vector<uint8_t> entry_bracket(entries.size(), 0);
  for (size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    double lo, hi;
    if (mode == EvalMode::Hybrid && e.exactable) {
      double d = d_exact_cached(e.desc, k).convert_to<double>();
      lo = hi = d * e.log_order;
      entry_exact[i] = 1;
    } else {
      lo = e.d_lo * e.log_order;
      hi = e.d_hi * e.log_order;
      entry_bracket[i] = e.d_lo != e.d_hi;
    }
    pre_lo[i + 1] = pre_lo[i] + lo;
    pre_hi[i + 1] = pre_hi[i] + hi;
  }

  for (size_t t = 0; t < sorted.size(); ++t) {
    uint64_t n = sorted[t];
    size_t idx =
        std::upper_bound(entries.begin(), entries.end(), n,
                         [](uint64_t v, const CensusEntry& e) {
                           return v < e.threshold;
                         }) -
        entries.begin();
    double abelian = static_cast<double>(k) * theta[t];
    double lo = abelian + pre_lo[idx];
    double hi = abelian + pre_hi[idx];
    bool any_bracket = false;
    for (size_t i = 0; i < idx; ++i)
      if (entry_bracket[i]) any_bracket = true;
    EvalMode m = mode == EvalMode::Hybrid ? EvalMode::Hybrid : EvalMode::Estimate;
    GrowthValue v = any_bracket ? GrowthValue::bracket(lo, hi, m)
                                : GrowthValue::log_value(lo, m);
    series.points.emplace_back(n, v);
  }
  return series;
}

GrowthValue ig_free(uint64_t n, int k, Flavor flavor, EvalMode mode) {
  return ig_free_series({n}, k, flavor, mode).points.at(0).second;
}

FamilyGrowth family_growth(Family family, long long m_fixed, uint64_t n, int k,
                           Flavor flavor) {
  if (family == Family::Sporadic)
    throw std::invalid_argument("family_growth: not an infinite family");
  FamilyGrowth fg;
  fg.dimension = family_is_lie(family)
                     ? family_dimension(family, m_fixed)
                     : 0;
  auto entries = free_entries(n, k, flavor, family, m_fixed);
  double lo = 0, hi = 0;
  bool any_bracket = false;
  for (const auto& e : entries) {
    lo += e.d_lo * e.log_order;
    hi += e.d_hi * e.log_order;
    if (e.d_lo != e.d_hi) any_bracket = true;
  }
  fg.value = any_bracket ? GrowthValue::bracket(lo, hi, EvalMode::Estimate)
                         : GrowthValue::log_value(lo, EvalMode::Estimate);
  return fg;
}

std::vector<std::pair<Family, long long>> lie_families_in_census(uint64_t n) {
  auto slice = enumerate_simple(BigNat(n), false, false);
  std::vector<std::pair<Family, long long>> out;
  for (const auto& d : slice.entries) {
    if (!family_is_lie(d.family)) continue;
    long long m = two_param_family(d.family) ? d.m : 0;
    std::pair<Family, long long> key{d.family, m};
    if (std::find(out.begin(), out.end(), key) == out.end()) out.push_back(key);
  }
  return out;
}

// ---------------------------------------------------------------------------

GrowthSeries ig_product(const GrowthSeries& a, const GrowthSeries& b) {
  if (a.flavor != b.flavor)
    throw std::invalid_argument("ig_product: flavor mismatch");
  if (a.points.size() != b.points.size())
    throw std::invalid_argument("ig_product: point sets differ");
  GrowthSeries out;
  out.label = a.label + "x" + b.label;
  out.flavor = a.flavor;
  out.method = "product";
  for (size_t i = 0; i < a.points.size(); ++i) {
    if (a.points[i].first != b.points[i].first)
      throw std::invalid_argument("ig_product: point sets differ");
    const GrowthValue& x = a.points[i].second;
    const GrowthValue& y = b.points[i].second;
    GrowthValue v;
    EvalMode m = std::max(x.mode, y.mode);
    if (x.kind == GrowthValue::Kind::Exact && y.kind == GrowthValue::Kind::Exact) {
      v = GrowthValue::exact_value(x.exact * y.exact, m);
    } else if (x.kind != GrowthValue::Kind::Bracket &&
               y.kind != GrowthValue::Kind::Bracket) {
      v = GrowthValue::log_value(x.log_lo + y.log_lo, m);
    } else {
      v = GrowthValue::bracket(x.log_lo + y.log_lo, x.log_hi + y.log_hi, m);
    }
    out.points.emplace_back(a.points[i].first, v);
  }
  return out;
}

FitResult fit_exponent(const std::vector<std::pair<double, double>>& n_vs_log,
                       FitModel) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [n, lg] : n_vs_log)
    if (lg > 0) pts.emplace_back(std::log(n), std::log(lg));
  if (pts.size() < 8)
    throw std::invalid_argument("fit_exponent: need >= 8 positive points");
  auto [mn, mx] = std::minmax_element(
      pts.begin(), pts.end(),
      [](const auto& a, const auto& b) { return a.first < b.first; });
  if (mx->first - mn->first < std::log(1000.0))
    throw std::invalid_argument("fit_exponent: points must span >= 3 decades");

  double sx = 0, sy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
  }
  double mx_ = sx / pts.size(), my_ = sy / pts.size();
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx_) * (x - mx_);
    sxy += (x - mx_) * (y - my_);
    syy += (y - my_) * (y - my_);
  }
  FitResult r;
  r.alpha = sxy / sxx;
  r.r2 = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  r.points = pts.size();
  return r;
}

FitResult fit_series(const GrowthSeries& s, FitModel model) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [n, v] : s.points)
    pts.emplace_back(static_cast<double>(n), v.log_mid());
  return fit_exponent(pts, model);
}

std::vector<uint64_t> log_spaced(uint64_t lo, uint64_t hi, size_t count) {
  if (lo < 1 || hi < lo || count < 2)
    throw std::invalid_argument("log_spaced: bad range");
  std::vector<uint64_t> out;
  double llo = std::log(static_cast<double>(lo));
  double lhi = std::log(static_cast<double>(hi));
  for (size_t i = 0; i < count; ++i) {
    double x = llo + (lhi - llo) * static_cast<double>(i) / (count - 1);
    uint64_t n = static_cast<uint64_t>(std::llround(std::exp(x)));
    n = std::max(lo, std::min(hi, n));
    if (out.empty() || out.back() != n) out.push_back(n);
  }
  return out;
}

// ---------------------------------------------------------------------------
// export

std::string series_to_csv(const GrowthSeries& s) {
  std::ostringstream os;
  os << "n,value,mode,method\n";
  for (const auto& [n, v] : s.points)
    os << n << "," << v.value_text() << "," << mode_tag(v.mode) << ","
       << s.method << "\n";
  return os.str();
}

std::string series_to_json(const GrowthSeries& s) {
  nlohmann::json root;
  root["label"] = s.label;
  root["flavor"] = flavor_tag(s.flavor);
  root["method"] = s.method;
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& [n, v] : s.points) {
    nlohmann::json p;
    p["n"] = n;
    p["mode"] = mode_tag(v.mode);
    switch (v.kind) {
      case GrowthValue::Kind::Exact: p["value"] = to_decimal(v.exact); break;
      case GrowthValue::Kind::Log: p["log"] = v.log_lo; break;
      case GrowthValue::Kind::Bracket:
        p["log_lo"] = v.log_lo;
        p["log_hi"] = v.log_hi;
        break;
    }
    pts.push_back(std::move(p));
  }
  root["points"] = std::move(pts);
  return root.dump(2);
}

std::string series_to_gnuplot(const GrowthSeries& s) {
  std::ostringstream os;
  for (const auto& [n, v] : s.points)
    os << n << " " << format_double17(v.log_mid()) << "\n";
  return os.str();
}

}  // namespace growthlab
