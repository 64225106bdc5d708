#include "growthlab/census.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "growthlab/budget.hpp"
#include "growthlab/numtheory.hpp"

namespace growthlab {

namespace {

BigNat qpow(const BigNat& q, long long e) {
  BigNat r = 1;
  for (long long i = 0; i < e; ++i) r *= q;
  return r;
}

struct SporadicRow {
  const char* name;
  const char* order;
};

// The 26 sporadic groups plus the Tits group.
constexpr std::array<SporadicRow, 27> kSporadic{{
    {"M11", "7920"},
    {"M12", "95040"},
    {"J1", "175560"},
    {"M22", "443520"},
    {"J2", "604800"},
    {"M23", "10200960"},
    {"2F4(2)'", "17971200"},
    {"HS", "44352000"},
    {"J3", "50232960"},
    {"M24", "244823040"},
    {"McL", "898128000"},
    {"He", "4030387200"},
    {"Ru", "145926144000"},
    {"Suz", "448345497600"},
    {"ON", "460815505920"},
    {"Co3", "495766656000"},
    {"Co2", "42305421312000"},
    {"Fi22", "64561751654400"},
    {"HN", "273030912000000"},
    {"Ly", "51765179004000000"},
    {"Th", "90745943887872000"},
    {"Fi23", "4089470473293004800"},
    {"Co1", "4157776806543360000"},
    {"J4", "86775571046077562880"},
    {"Fi24'", "1255205709190661721292800"},
    {"B", "4154781481226426191177580544000000"},
    {"M", "808017424794512875886459904961710757005754368000000000"},
}};

long long require_prime_power(long long q, const char* fam) {
  auto [p, a] = prime_power_decompose(static_cast<uint64_t>(q));
  if (p == 0)
    throw std::invalid_argument(std::string(fam) + ": q must be a prime power");
  (void)a;
  return static_cast<long long>(p);
}

}  // namespace

const char* family_tag(Family f) {
  switch (f) {
    case Family::Cyclic: return "Z";
    case Family::Alternating: return "A";
    case Family::PSL: return "PSL";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::TwoA: return "2A";
    case Family::TwoD: return "2D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    case Family::TwoE6: return "2E6";
    case Family::ThreeD4: return "3D4";
    case Family::TwoB2: return "2B2";
    case Family::TwoG2: return "2G2";
    case Family::TwoF4: return "2F4";
    case Family::Sporadic: return "sporadic";
  }
  return "?";
}

std::optional<Family> family_from_tag(const std::string& tag) {
  static const std::vector<std::pair<std::string, Family>> table = {
      {"Z", Family::Cyclic},      {"cyclic", Family::Cyclic},
      {"A", Family::Alternating}, {"alternating", Family::Alternating},
      {"PSL", Family::PSL},       {"B", Family::B},
      {"C", Family::C},           {"D", Family::D},
      {"2A", Family::TwoA},       {"2D", Family::TwoD},
      {"E6", Family::E6},         {"E7", Family::E7},
      {"E8", Family::E8},         {"F4", Family::F4},
      {"G2", Family::G2},         {"2E6", Family::TwoE6},
      {"3D4", Family::ThreeD4},   {"2B2", Family::TwoB2},
      {"2G2", Family::TwoG2},     {"2F4", Family::TwoF4},
      {"sporadic", Family::Sporadic}};
  for (const auto& [t, f] : table)
    if (t == tag) return f;
  return std::nullopt;
}

bool family_is_lie(Family f) {
  return f != Family::Cyclic && f != Family::Alternating &&
         f != Family::Sporadic;
}

bool two_param_family(Family f) {
  return f == Family::PSL || f == Family::B || f == Family::C ||
         f == Family::D || f == Family::TwoA || f == Family::TwoD;
}

int family_dimension(Family f, long long m) {
  switch (f) {
    case Family::PSL: return static_cast<int>(m * m - 1);
    case Family::B:
    case Family::C: return static_cast<int>(2 * m * m + m);
    case Family::D:
    case Family::TwoD: return static_cast<int>(2 * m * m - m);
    case Family::TwoA: return static_cast<int>(m * m + 2 * m);
    case Family::E6:
    case Family::TwoE6: return 78;
    case Family::E7: return 133;
    case Family::E8: return 248;
    case Family::F4: return 52;
    case Family::G2: return 14;
    case Family::ThreeD4: return 28;
    case Family::TwoB2: return 5;
    case Family::TwoG2: return 7;
    case Family::TwoF4: return 26;
    default:
      throw std::invalid_argument("family_dimension: not a Lie family");
  }
}

BigNat order_of(Family f, long long m, long long qi) {
  BigNat q = qi;
  switch (f) {
    case Family::Cyclic: {
      if (!is_prime_u64(static_cast<uint64_t>(m)))
        throw std::invalid_argument("cyclic: p must be prime");
      return BigNat(m);
    }
    case Family::Alternating: {
      if (m < 5) throw std::invalid_argument("alternating: m >= 5 required");
      BigNat r = 1;
      for (long long i = 3; i <= m; ++i) r *= i;
      return r;
    }
    case Family::PSL: {
      if (m < 2) throw std::invalid_argument("PSL: m >= 2 required");
      long long p = require_prime_power(qi, "PSL");
      (void)p;
      if (m == 2 && (qi == 2 || qi == 3))
        throw std::invalid_argument("PSL: PSL_2(2), PSL_2(3) are not simple");
      BigNat r = qpow(q, m * (m - 1) / 2);
      BigNat qp = q;
      for (long long i = 2; i <= m; ++i) {
        qp *= q;
        r *= qp - 1;
      }
      return r / std::gcd(m, qi - 1);
    }
    case Family::B:
    case Family::C: {
      long long mmin = f == Family::B ? 2 : 3;
      if (m < mmin) throw std::invalid_argument("B/C: rank below range");
      require_prime_power(qi, "B/C");
      if (f == Family::B && m == 2 && qi == 2)
        throw std::invalid_argument("B: B_2(2) is not simple");
      BigNat r = qpow(q, m * m);
      for (long long i = 1; i <= m; ++i) r *= qpow(q, 2 * i) - 1;
      return r / std::gcd(2LL, qi - 1);
    }
    case Family::D: {
      if (m < 4) throw std::invalid_argument("D: m >= 4 required");
      require_prime_power(qi, "D");
      BigNat r = qpow(q, m * (m - 1)) * (qpow(q, m) - 1);
      for (long long i = 1; i < m; ++i) r *= qpow(q, 2 * i) - 1;
      BigNat g = boost::multiprecision::gcd(BigNat(4), qpow(q, m) - 1);
      return r / g;
    }
    case Family::TwoA: {
      if (m < 2) throw std::invalid_argument("2A: m >= 2 required");
      require_prime_power(qi, "2A");
      if (m == 2 && qi == 2)
        throw std::invalid_argument("2A: PSU_3(2) is not simple");
      BigNat r = qpow(q, m * (m + 1) / 2);
      for (long long i = 2; i <= m + 1; ++i)
        r *= qpow(q, i) - (i % 2 == 0 ? 1 : -1);
      return r / std::gcd(m + 1, qi + 1);
    }
    case Family::TwoD: {
      if (m < 4) throw std::invalid_argument("2D: m >= 4 required");
      require_prime_power(qi, "2D");
      BigNat r = qpow(q, m * (m - 1)) * (qpow(q, m) + 1);
      for (long long i = 1; i < m; ++i) r *= qpow(q, 2 * i) - 1;
      BigNat g = boost::multiprecision::gcd(BigNat(4), qpow(q, m) + 1);
      return r / g;
    }
    case Family::E6: {
      require_prime_power(qi, "E6");
      BigNat r = qpow(q, 36);
      for (int e : {12, 9, 8, 6, 5, 2}) r *= qpow(q, e) - 1;
      return r / std::gcd(3LL, qi - 1);
    }
    case Family::E7: {
      require_prime_power(qi, "E7");
      BigNat r = qpow(q, 63);
      for (int e : {18, 14, 12, 10, 8, 6, 2}) r *= qpow(q, e) - 1;
      return r / std::gcd(2LL, qi - 1);
    }
    case Family::E8: {
      require_prime_power(qi, "E8");
      BigNat r = qpow(q, 120);
      for (int e : {30, 24, 20, 18, 14, 12, 8, 2}) r *= qpow(q, e) - 1;
      return r;
    }
    case Family::F4: {
      require_prime_power(qi, "F4");
      BigNat r = qpow(q, 24);
      for (int e : {12, 8, 6, 2}) r *= qpow(q, e) - 1;
      return r;
    }
    case Family::G2: {
      require_prime_power(qi, "G2");
      if (qi == 2) throw std::invalid_argument("G2: G2(2) is not simple");
      return qpow(q, 6) * (qpow(q, 6) - 1) * (qpow(q, 2) - 1);
    }
    case Family::TwoE6: {
      require_prime_power(qi, "2E6");
      BigNat r = qpow(q, 36);
      r *= qpow(q, 12) - 1;
      r *= qpow(q, 9) + 1;
      r *= qpow(q, 8) - 1;
      r *= qpow(q, 6) - 1;
      r *= qpow(q, 5) + 1;
      r *= qpow(q, 2) - 1;
      return r / std::gcd(3LL, qi + 1);
    }
    case Family::ThreeD4: {
      require_prime_power(qi, "3D4");
      return qpow(q, 12) * (qpow(q, 8) + qpow(q, 4) + 1) * (qpow(q, 6) - 1) *
             (qpow(q, 2) - 1);
    }
    case Family::TwoB2: {
      // q = 2^{2k+1} >= 8
      long long t = qi;
      int e = 0;
      while (t > 1 && t % 2 == 0) {
        t /= 2;
        ++e;
      }
      if (t != 1 || e < 3 || e % 2 == 0)
        throw std::invalid_argument("2B2: q must be an odd power of 2, q >= 8");
      return qpow(q, 2) * (qpow(q, 2) + 1) * (q - 1);
    }
    case Family::TwoG2: {
      long long t = qi;
      int e = 0;
      while (t > 1 && t % 3 == 0) {
        t /= 3;
        ++e;
      }
      if (t != 1 || e < 3 || e % 2 == 0)
        throw std::invalid_argument("2G2: q must be an odd power of 3, q >= 27");
      return qpow(q, 3) * (qpow(q, 3) + 1) * (q - 1);
    }
    case Family::TwoF4: {
      long long t = qi;
      int e = 0;
      while (t > 1 && t % 2 == 0) {
        t /= 2;
        ++e;
      }
      if (t != 1 || e < 3 || e % 2 == 0)
        throw std::invalid_argument("2F4: q must be an odd power of 2, q >= 8");
      return qpow(q, 12) * (qpow(q, 6) + 1) * (qpow(q, 4) - 1) *
             (qpow(q, 3) + 1) * (q - 1);
    }
    case Family::Sporadic:
      throw std::invalid_argument("order_of: sporadic orders come from the table");
  }
  throw std::logic_error("order_of: unhandled family");
}

std::optional<int> out_order_of(Family f, long long m, long long q) {
  if (f == Family::Alternating) return m == 6 ? 4 : 2;
  if (f == Family::PSL) {
    auto [p, a] = prime_power_decompose(static_cast<uint64_t>(q));
    if (p == 0) throw std::invalid_argument("out_order_of: bad q");
    long long d = std::gcd(m, q - 1);
    long long graph = m >= 3 ? 2 : 1;
    return static_cast<int>(d * a * graph);
  }
  return std::nullopt;
}

namespace {

std::string lie_name(Family f, long long m, long long q) {
  std::string base = family_tag(f);
  bool two_param = f == Family::PSL || f == Family::B || f == Family::C ||
                   f == Family::D || f == Family::TwoA || f == Family::TwoD;
  if (two_param) base += std::to_string(m);
  return base + "(" + std::to_string(q) + ")";
}

constexpr uint64_t kConstructibleCap = 1'000'000;

bool constructible_of(Family f, long long m, long long q, const BigNat& order) {
  if (f == Family::Cyclic) return m <= 65535;
  if (order > kConstructibleCap) return false;
  if (f == Family::Alternating) return true;
  if (f == Family::PSL) return q <= 1024;
  return false;
}

}  // namespace

SimpleGroupDescriptor describe(Family f, long long m, long long q) {
  // exceptional-isomorphism canonicalization (alternating > PSL > others;
  // within PSL the smaller rank, then smaller field)
  if (f == Family::PSL) {
    if (m == 2 && (q == 4 || q == 5)) return describe(Family::Alternating, 5, 0);
    if (m == 2 && q == 9) return describe(Family::Alternating, 6, 0);
    if (m == 3 && q == 2) return describe(Family::PSL, 2, 7);
    if (m == 4 && q == 2) return describe(Family::Alternating, 8, 0);
  }
  if (f == Family::TwoA && m == 3 && q == 2) return describe(Family::B, 2, 3);
  if (f == Family::C && q % 2 == 0) return describe(Family::B, m, q);

  SimpleGroupDescriptor d;
  d.family = f;
  d.m = m;
  d.q = q;
  switch (f) {
    case Family::Cyclic:
      d.order = order_of(f, m, 0);
      d.name = "Z" + std::to_string(m);
      d.min_index = BigNat(m);  // the trivial subgroup is the maximal one
      break;
    case Family::Alternating:
      d.order = order_of(f, m, 0);
      d.name = "A" + std::to_string(m);
      d.min_index = BigNat(m);
      break;
    case Family::Sporadic:
      throw std::invalid_argument("describe: sporadic entries come from the table");
    default:
      d.order = order_of(f, m, q);
      d.name = lie_name(f, m, q);
      break;
  }
  d.out_order = out_order_of(d.family, d.m, d.q);
  if (f == Family::PSL) {
    // classical smallest faithful actions; exceptions for small q
    if (m == 2 && q == 5) d.min_index = BigNat(5);
    else if (m == 2 && q == 7) d.min_index = BigNat(7);
    else if (m == 2 && q == 9) d.min_index = BigNat(6);
    else if (m == 2 && q == 11) d.min_index = BigNat(11);
    else d.min_index = (qpow(BigNat(q), m) - 1) / (q - 1);
  } else if (family_is_lie(f)) {
    // leading-term value from the classification table, flagged approximate
    int e = 0;
    switch (f) {
      case Family::B:
      case Family::C: e = static_cast<int>(2 * m - 1); break;
      case Family::D:
      case Family::TwoD: e = static_cast<int>(2 * m); break;
      case Family::TwoA: e = static_cast<int>(m); break;
      case Family::E6:
      case Family::TwoE6: e = 16; break;
      case Family::E7: e = 27; break;
      case Family::E8: e = 57; break;
      case Family::F4: e = 15; break;
      case Family::G2: e = 7; break;
      case Family::ThreeD4: e = 8; break;
      case Family::TwoB2: e = 2; break;
      case Family::TwoG2: e = 3; break;
      case Family::TwoF4: e = 10; break;
      default: break;
    }
    d.min_index = qpow(BigNat(q), e);
    d.min_index_approx = true;
  }
  d.constructible = constructible_of(d.family, d.m, d.q, d.order);
  return d;
}

std::optional<BigNat> min_max_subgroup_index(const SimpleGroupDescriptor& d,
                                             bool* approx) {
  if (approx) *approx = d.min_index_approx;
  return d.min_index;
}

namespace {

// Ascending prime powers via trial decomposition; orders grow so fast that
// the scan never goes far.
long long next_prime_power(long long q) {
  for (long long c = q + 1;; ++c)
    if (prime_power_decompose(static_cast<uint64_t>(c)).first != 0) return c;
}

bool canonical_params(Family f, long long m, long long q) {
  if (f == Family::PSL) {
    if (m == 2 && (q == 4 || q == 5 || q == 9)) return false;
    if (m == 3 && q == 2) return false;
    if (m == 4 && q == 2) return false;
  }
  if (f == Family::TwoA && m == 3 && q == 2) return false;
  if (f == Family::C && q % 2 == 0) return false;  // C_m(2^a) = B_m(2^a)
  return true;
}

long long min_q(Family f, long long m) {
  switch (f) {
    case Family::PSL: return m == 2 ? 4 : 2;
    case Family::B: return m == 2 ? 3 : 2;
    case Family::TwoA: return m == 2 ? 3 : 2;
    case Family::G2: return 3;
    case Family::TwoB2:
    case Family::TwoF4: return 8;
    case Family::TwoG2: return 27;
    default: return 2;
  }
}

long long next_q(Family f, long long q) {
  if (f == Family::TwoB2 || f == Family::TwoF4) return q * 4;
  if (f == Family::TwoG2) return q * 9;
  return next_prime_power(q);
}

}  // namespace

CensusSlice enumerate_simple(const BigNat& bound, bool include_abelian,
                             bool include_sporadic) {
  if (bound < 1) throw std::invalid_argument("enumerate_simple: bound >= 1");
  CensusSlice slice;
  slice.bound = bound;

  if (include_abelian) {
    if (bound > BigNat(10'000'000))
      throw CapExceeded(
          "enumerate_simple: abelian entries are only materialized up to 10^7");
    uint64_t nb = bound.convert_to<uint64_t>();
    for (uint64_t p : primes_up_to(nb))
      slice.entries.push_back(describe(Family::Cyclic, static_cast<long long>(p), 0));
  }

  // alternating
  for (long long m = 5;; ++m) {
    BigNat o = order_of(Family::Alternating, m, 0);
    if (o > bound) break;
    slice.entries.push_back(describe(Family::Alternating, m, 0));
  }

  // two-parameter Lie rows
  struct TwoParam {
    Family f;
    long long m0;
  };
  for (auto [f, m0] : {TwoParam{Family::PSL, 2}, TwoParam{Family::B, 2},
                       TwoParam{Family::C, 3}, TwoParam{Family::D, 4},
                       TwoParam{Family::TwoA, 2}, TwoParam{Family::TwoD, 4}}) {
    for (long long m = m0;; ++m) {
      long long q0 = min_q(f, m);
      bool any_fit = false;
      for (long long q = q0;; q = next_q(f, q)) {
        BigNat o;
        try {
          o = order_of(f, m, q);
        } catch (const std::invalid_argument&) {
          continue;  // excluded small parameter inside the range
        }
        if (o > bound) break;
        any_fit = true;
        if (canonical_params(f, m, q))
          slice.entries.push_back(describe(f, m, q));
      }
      if (!any_fit) break;
    }
  }

  // one-parameter Lie rows
  for (Family f : {Family::E6, Family::E7, Family::E8, Family::F4, Family::G2,
                   Family::TwoE6, Family::ThreeD4, Family::TwoB2, Family::TwoG2,
                   Family::TwoF4}) {
    for (long long q = min_q(f, 0);; q = next_q(f, q)) {
      BigNat o;
      try {
        o = order_of(f, 0, q);
      } catch (const std::invalid_argument&) {
        continue;
      }
      if (o > bound) break;
      slice.entries.push_back(describe(f, 0, q));
    }
  }

  if (include_sporadic) {
    for (size_t i = 0; i < kSporadic.size(); ++i) {
      BigNat o = from_decimal(kSporadic[i].order);
      if (o > bound) continue;
      SimpleGroupDescriptor d;
      d.family = Family::Sporadic;
      d.m = static_cast<long long>(i);
      d.name = kSporadic[i].name;
      d.order = o;
      slice.entries.push_back(std::move(d));
    }
  }

  std::sort(slice.entries.begin(), slice.entries.end(),
            [](const SimpleGroupDescriptor& a, const SimpleGroupDescriptor& b) {
              if (a.order != b.order) return a.order < b.order;
              return a.name < b.name;
            });
  return slice;
}

CensusSlice enumerate_simple_by_min_index(uint64_t bound) {
  CensusSlice slice;
  slice.bound = bound;
  auto fits = [&](const SimpleGroupDescriptor& d) {
    return d.min_index && *d.min_index <= bound;
  };

  for (long long m = 5; m <= static_cast<long long>(bound); ++m)
    slice.entries.push_back(describe(Family::Alternating, m, 0));

  struct TwoParam {
    Family f;
    long long m0;
  };
  for (auto [f, m0] : {TwoParam{Family::PSL, 2}, TwoParam{Family::B, 2},
                       TwoParam{Family::C, 3}, TwoParam{Family::D, 4},
                       TwoParam{Family::TwoA, 2}, TwoParam{Family::TwoD, 4}}) {
    for (long long m = m0;; ++m) {
      long long q0 = min_q(f, m);
      bool any_fit = false;
      for (long long q = q0;; q = next_q(f, q)) {
        SimpleGroupDescriptor d;
        try {
          d = describe(f, m, q);
        } catch (const std::invalid_argument&) {
          continue;
        }
        if (!fits(d)) break;
        any_fit = true;
        if (canonical_params(f, m, q)) slice.entries.push_back(std::move(d));
      }
      if (!any_fit) break;
    }
  }

  for (Family f : {Family::E6, Family::E7, Family::E8, Family::F4, Family::G2,
                   Family::TwoE6, Family::ThreeD4, Family::TwoB2, Family::TwoG2,
                   Family::TwoF4}) {
    for (long long q = min_q(f, 0);; q = next_q(f, q)) {
      SimpleGroupDescriptor d;
      try {
        d = describe(f, 0, q);
      } catch (const std::invalid_argument&) {
        continue;
      }
      if (!fits(d)) break;
      slice.entries.push_back(std::move(d));
    }
  }

  std::sort(slice.entries.begin(), slice.entries.end(),
            [](const SimpleGroupDescriptor& a, const SimpleGroupDescriptor& b) {
              if (*a.min_index != *b.min_index)
                return *a.min_index < *b.min_index;
              return a.name < b.name;
            });
  return slice;
}

std::string census_to_json(const CensusSlice& slice) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& d : slice.entries) {
    nlohmann::json e;
    e["family"] = family_tag(d.family);
    e["name"] = d.name;
    e["params"] = {{"m", d.m}, {"q", d.q}};
    e["order"] = to_decimal(d.order);
    if (d.out_order) e["out_order"] = *d.out_order;
    else e["out_order"] = nullptr;
    if (d.min_index) e["min_index"] = to_decimal(*d.min_index);
    else e["min_index"] = nullptr;
    e["flags"] = nlohmann::json::array();
    if (d.min_index_approx) e["flags"].push_back("approximate-min-index");
    if (d.constructible) e["flags"].push_back("constructible");
    arr.push_back(std::move(e));
  }
  nlohmann::json root;
  root["bound"] = to_decimal(slice.bound);
  root["entries"] = std::move(arr);
  return root.dump(2);
}

}  // namespace growthlab
