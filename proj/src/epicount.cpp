#include "growthlab/epicount.hpp"

#include <algorithm>
#include <stdexcept>

#include "growthlab/budget.hpp"
#include "growthlab/omp_util.hpp"

namespace growthlab {

namespace {

struct Bitset {
  std::vector<uint64_t> w;
  explicit Bitset(size_t n) : w((n + 63) / 64, 0) {}
  void set(uint32_t i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
  bool test(uint32_t i) const { return w[i >> 6] >> (i & 63) & 1; }
  bool operator==(const Bitset& o) const { return w == o.w; }
};

struct BitsetHash {
  size_t operator()(const Bitset& b) const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t x : b.w) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

// Per-thread memory of proper subgroups already seen; a tuple inside one of
// them cannot generate.
struct SubgroupCache {
  std::vector<Bitset> subgroups;

  bool covered(const std::vector<uint32_t>& tuple) const {
    for (const auto& s : subgroups) {
      bool all = true;
      for (uint32_t t : tuple)
        if (!s.test(t)) {
          all = false;
          break;
        }
      if (all) return true;
    }
    return false;
  }

  void remember(const Bitset& b) {
    for (const auto& s : subgroups)
      if (s == b) return;
    subgroups.push_back(b);
  }
};

// closure over element indices with the multiplication table
bool generates(const ConcreteGroup& g, uint32_t n,
               const std::vector<uint32_t>& tuple, SubgroupCache* cache) {
  if (cache && cache->covered(tuple)) return false;
  Bitset bits(n);
  std::vector<uint32_t> list;
  bits.set(g.identity_index());
  list.push_back(g.identity_index());
  for (uint32_t t : tuple)
    if (!bits.test(t)) {
      bits.set(t);
      list.push_back(t);
    }
  for (size_t head = 0; head < list.size(); ++head) {
    uint32_t x = list[head];
    for (uint32_t t : tuple) {
      uint32_t y = g.mul(x, t);
      if (!bits.test(y)) {
        bits.set(y);
        list.push_back(y);
      }
    }
  }
  if (list.size() == n) return true;
  if (cache) cache->remember(bits);
  return false;
}

uint32_t checked_size(const ConcreteGroup& g, int k) {
  if (k < 1) throw std::invalid_argument("tuple counting: k >= 1 required");
  if (k > kExactKMax)
    throw CapExceeded("tuple counting: exact mode is capped at k <= 3");
  if (g.order() > kEnumerationCap)
    throw CapExceeded("tuple counting: |G| above the enumeration cap");
  return static_cast<uint32_t>(g.order().convert_to<uint64_t>());
}

}  // namespace

BigNat count_generating_tuples_naive(const ConcreteGroup& g, int k) {
  uint32_t n = checked_size(g, k);
  uint64_t total = 0;
  std::vector<uint32_t> tuple(k, 0);
  // odometer over all |G|^k tuples
  while (true) {
    budget::check("count_generating_tuples_naive");
    if (generates(g, n, tuple, nullptr)) ++total;
    int pos = k - 1;
    while (pos >= 0 && tuple[pos] + 1 == n) tuple[pos--] = 0;
    if (pos < 0) break;
    ++tuple[pos];
  }
  return BigNat(total);
}

BigNat count_generating_tuples(const ConcreteGroup& g, int k) {
  uint32_t n = checked_size(g, k);
  const auto& classes = g.conjugacy_classes();

  if (k == 1) {
    uint64_t total = 0;
    for (const auto& c : classes) {
      std::vector<uint32_t> tuple{c.representative};
      if (generates(g, n, tuple, nullptr)) total += c.size;
    }
    return BigNat(total);
  }

  // flatten (class representative, second slot) pairs for balanced scheduling
  struct Task {
    uint32_t rep;
    uint64_t weight;
    uint32_t second;
  };
  std::vector<Task> tasks;
  tasks.reserve(static_cast<size_t>(classes.size()) * n);
  for (const auto& c : classes)
    for (uint32_t s = 0; s < n; ++s) tasks.push_back({c.representative, c.size, s});

  uint64_t grand = 0;
  OmpExceptionGuard guard;
#pragma omp parallel reduction(+ : grand)
  {
    SubgroupCache cache;
#pragma omp for schedule(dynamic, 64)
    for (int64_t t = 0; t < static_cast<int64_t>(tasks.size()); ++t) {
      guard.run([&] {
        budget::check("count_generating_tuples");
        const Task& task = tasks[t];
        if (k == 2) {
          std::vector<uint32_t> tuple{task.rep, task.second};
          if (generates(g, n, tuple, &cache)) grand += task.weight;
          return;
        }
        // k == 3: sweep the third slot here
        std::vector<uint32_t> tuple{task.rep, task.second, 0};
        for (uint32_t third = 0; third < n; ++third) {
          tuple[2] = third;
          if (generates(g, n, tuple, &cache)) grand += task.weight;
        }
      });
    }
  }
  guard.rethrow();
  return BigNat(grand);
}

BigNat d_of(const ConcreteGroup& g, const SimpleGroupDescriptor& desc, int k) {
  if (!desc.out_order)
    throw Unsupported("d_of: |Out| unknown for " + desc.name);
  BigNat gen = count_generating_tuples(g, k);
  BigNat aut = desc.order * *desc.out_order;
  if (gen % aut != 0)
    throw std::logic_error(
        "d_of: |Aut| does not divide the generating-tuple count for " +
        desc.name + " (internal consistency failure)");
  return gen / aut;
}

BigNat d_estimate(const SimpleGroupDescriptor& desc, int k) {
  if (desc.abelian())
    throw std::invalid_argument("d_estimate: nonabelian descriptor required");
  if (!desc.out_order)
    throw Unsupported("d_estimate: |Out| unknown for " + desc.name);
  if (k < 2) throw std::invalid_argument("d_estimate: k >= 2 required");
  BigNat pw = 1;
  for (int i = 0; i < k - 1; ++i) pw *= desc.order;
  return pw / *desc.out_order;
}

EpiCount epi_count(const ConcreteGroup& g, const SimpleGroupDescriptor& desc,
                   int k) {
  EpiCount e;
  e.group = desc;
  e.k = k;
  e.mode = CountMode::Exact;
  e.gen_tuples = count_generating_tuples(g, k);
  if (!desc.out_order)
    throw Unsupported("epi_count: |Out| unknown for " + desc.name);
  BigNat aut = desc.order * *desc.out_order;
  if (e.gen_tuples % aut != 0)
    throw std::logic_error("epi_count: non-integral d for " + desc.name);
  e.d = e.gen_tuples / aut;
  BigNat den = 1;
  for (int i = 0; i < k; ++i) den *= desc.order;
  BigNat gcd = boost::multiprecision::gcd(e.gen_tuples, den);
  e.p_num = gcd == 0 ? BigNat(0) : e.gen_tuples / gcd;
  e.p_den = gcd == 0 ? BigNat(1) : den / gcd;
  return e;
}

std::variant<BigNat, LogValue> i_factor(const SimpleGroupDescriptor& desc,
                                        int k, CountMode mode) {
  if (desc.abelian()) {
    BigNat r = 1;
    for (int i = 0; i < k; ++i) r *= desc.order;
    return r;
  }
  if (mode == CountMode::Exact) {
    auto g = realize(desc);
    if (!g) throw CapExceeded("i_factor: " + desc.name + " not constructible");
    unsigned d = d_of(*g, desc, k).convert_to<unsigned>();
    return boost::multiprecision::pow(desc.order, d);
  }
  BigNat d = d_estimate(desc, k);
  return LogValue{d.convert_to<double>() * log_of(desc.order)};
}

std::optional<ConcreteGroup> realize(const SimpleGroupDescriptor& desc) {
  if (!desc.constructible) return std::nullopt;
  switch (desc.family) {
    case Family::Cyclic:
      return ConcreteGroup::cyclic(static_cast<int>(desc.m));
    case Family::Alternating:
      return ConcreteGroup::alternating(static_cast<int>(desc.m));
    case Family::PSL:
      return ConcreteGroup::psl(static_cast<int>(desc.m),
                                static_cast<int>(desc.q));
    default:
      return std::nullopt;
  }
}

}  // namespace growthlab
