#include "growthlab/laws.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include <json.hpp>

#include "growthlab/budget.hpp"
#include "growthlab/epicount.hpp"
#include "growthlab/omp_util.hpp"

namespace growthlab {

std::string law_to_json(const LawCertificate& c) {
  nlohmann::json j;
  j["word"] = c.word.text();
  j["n"] = c.n;
  j["groups"] = c.groups;
  j["length"] = c.length;
  j["method"] = c.method;
  j["zero_exponent_sums"] = c.zero_exponent_sums;
  return j.dump(2);
}

namespace {

std::vector<SimpleGroupDescriptor> constructible_slice(uint64_t n) {
  auto slice = enumerate_simple(BigNat(n), false, true);
  std::vector<SimpleGroupDescriptor> out;
  for (auto& d : slice.entries) {
    if (!d.constructible)
      throw Unsupported("census_exponent: " + d.name +
                        " has no permutation realization under the cap");
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

BigNat census_exponent(uint64_t n) {
  if (n < 1) throw std::invalid_argument("census_exponent: n >= 1");
  BigNat acc = 1;
  for (const auto& d : constructible_slice(n)) {
    auto g = realize(d);
    if (!g) throw Unsupported("census_exponent: cannot realize " + d.name);
    acc = boost::multiprecision::lcm(acc, g->exponent());
  }
  return acc;
}

namespace {

// Word evaluation over element indices through the multiplication table.
uint32_t evaluate_idx(const ConcreteGroup& g, const Word& w,
                      const std::vector<uint32_t>& images,
                      const std::vector<uint32_t>& inverses) {
  uint32_t acc = g.identity_index();
  for (int16_t l : w.letters())
    acc = g.mul(acc, l > 0 ? images[l - 1] : inverses[-l - 1]);
  return acc;
}

}  // namespace

bool is_law_naive(const Word& w, const ConcreteGroup& g) {
  if (!g.elements_available())
    throw CapExceeded("is_law: element table cap exceeded");
  uint32_t n = static_cast<uint32_t>(g.order().convert_to<uint64_t>());
  int k = w.rank();
  std::vector<uint32_t> tuple(k, 0), inv(k, 0);
  while (true) {
    budget::check("is_law_naive");
    for (int i = 0; i < k; ++i) inv[i] = g.inverse_of(tuple[i]);
    if (evaluate_idx(g, w, tuple, inv) != g.identity_index()) return false;
    int pos = k - 1;
    while (pos >= 0 && tuple[pos] + 1 == n) tuple[pos--] = 0;
    if (pos < 0) break;
    ++tuple[pos];
  }
  return true;
}

bool is_law(const Word& w, const ConcreteGroup& g) {
  if (!g.elements_available())
    throw CapExceeded("is_law: element table cap exceeded");
  uint32_t n = static_cast<uint32_t>(g.order().convert_to<uint64_t>());
  int k = w.rank();
  if (k == 0) return true;
  const auto& classes = g.conjugacy_classes();

  // (class representative, second slot) pairs; deeper slots are swept inside.
  struct Task {
    uint32_t first, second;
  };
  std::vector<Task> tasks;
  if (k == 1) {
    for (const auto& c : classes) tasks.push_back({c.representative, 0});
  } else {
    for (const auto& c : classes)
      for (uint32_t s = 0; s < n; ++s) tasks.push_back({c.representative, s});
  }

  std::atomic<bool> ok{true};
  OmpExceptionGuard guard;
#pragma omp parallel
  {
    std::vector<uint32_t> tuple(k, 0), inv(k, 0);
#pragma omp for schedule(dynamic, 32)
    for (int64_t t = 0; t < static_cast<int64_t>(tasks.size()); ++t) {
      guard.run([&] {
        if (!ok.load(std::memory_order_relaxed)) return;
        budget::check("is_law");
        tuple[0] = tasks[t].first;
        if (k >= 2) tuple[1] = tasks[t].second;
        for (int i = 2; i < k; ++i) tuple[i] = 0;
        while (true) {
          for (int i = 0; i < k; ++i) inv[i] = g.inverse_of(tuple[i]);
          if (evaluate_idx(g, w, tuple, inv) != g.identity_index()) {
            ok.store(false, std::memory_order_relaxed);
            return;
          }
          int pos = k - 1;
          while (pos >= 2 && tuple[pos] + 1 == n) tuple[pos--] = 0;
          if (pos < 2) break;
          ++tuple[pos];
        }
      });
    }
  }
  guard.rethrow();
  return ok.load();
}

LawCertificate commutator_law(uint64_t n) {
  BigNat e = census_exponent(n);
  if (e > 1'000'000)
    throw Unsupported("commutator_law: exponent too large to expand");
  long ei = e.convert_to<long>();
  Word x = Word::generator(1, 2), y = Word::generator(2, 2);
  Word w = Word::commutator(x.pow(ei), y.pow(ei));

  LawCertificate cert;
  cert.word = w;
  cert.n = n;
  cert.length = w.length();
  cert.method = "commutator";
  auto sums = w.exponent_sums();
  cert.zero_exponent_sums =
      std::all_of(sums.begin(), sums.end(), [](long long s) { return s == 0; });

  for (const auto& d : constructible_slice(n)) {
    auto g = realize(d);
    if (!is_law(w, *g))
      throw std::logic_error("commutator_law: verification failed on " + d.name);
    cert.groups.push_back(d.name);
  }
  return cert;
}

namespace {

// Serial fail-fast check used by the BFS: (class representative, arbitrary)
// pairs through the multiplication table, stopping at the first witness.
bool law_check_fast(const Word& w, const ConcreteGroup& g) {
  uint32_t n = static_cast<uint32_t>(g.order().convert_to<uint64_t>());
  const auto& classes = g.conjugacy_classes();
  std::vector<uint32_t> tuple(2), inv(2);
  for (const auto& c : classes) {
    tuple[0] = c.representative;
    inv[0] = g.inverse_of(tuple[0]);
    for (uint32_t s = 0; s < n; ++s) {
      tuple[1] = s;
      inv[1] = g.inverse_of(s);
      if (evaluate_idx(g, w, tuple, inv) != g.identity_index()) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<LawCertificate> bfs_shortest_law(
    const std::vector<ConcreteGroup>& groups, int max_radius) {
  if (max_radius > 14)
    throw std::invalid_argument("bfs_shortest_law: radius capped at 14");
  for (const auto& g : groups)
    if (!g.elements_available())
      throw CapExceeded("bfs_shortest_law: element table cap exceeded");
  BallEnumerator en(2, max_radius);
  Word w;
  uint64_t scanned = 0;
  while (en.next(w)) {
    if (++scanned % 4096 == 0) budget::check("bfs_shortest_law");
    if (w.empty()) continue;
    auto sums = w.exponent_sums();
    if (!std::all_of(sums.begin(), sums.end(),
                     [](long long s) { return s == 0; }))
      continue;
    bool all = true;
    for (const auto& g : groups)
      if (!law_check_fast(w, g)) {
        all = false;
        break;
      }
    if (!all) continue;
    LawCertificate cert;
    cert.word = w;
    cert.n = 0;
    cert.length = w.length();
    cert.method = "bfs-search";
    cert.zero_exponent_sums = true;
    for (const auto& g : groups) cert.groups.push_back(g.name());
    return cert;
  }
  return std::nullopt;
}

DepthBound rf_lower_bound(uint64_t n, const GrowthValue& i_at_n) {
  DepthBound d;
  d.n = n;
  d.i_value = i_at_n;
  if (i_at_n.kind == GrowthValue::Kind::Exact) {
    if (i_at_n.exact < 1)
      throw std::invalid_argument("rf_lower_bound: i >= 1 required");
    if (i_at_n.exact == 1) {
      d.degenerate = true;
      return d;
    }
    uint64_t t = 0;
    while (ball_size(2, static_cast<int>(t)) < i_at_n.exact) ++t;
    d.f_n = t;
  } else {
    // log-space value: ball_size(2, t) = 2 * 3^t - 1
    double lg = i_at_n.log_low();
    if (lg <= 0) {
      d.degenerate = true;
      return d;
    }
    double t = (lg - std::log(2.0)) / std::log(3.0);
    uint64_t cand = t < 0 ? 0 : static_cast<uint64_t>(t);
    while (std::log(2.0) + static_cast<double>(cand) * std::log(3.0) < lg)
      ++cand;
    d.f_n = cand;
  }
  d.length_bound = 2 * d.f_n;
  return d;
}

std::string depth_bound_to_json(const DepthBound& d) {
  nlohmann::json j;
  j["n"] = d.n;
  j["i"] = d.i_value.value_text();
  j["f"] = d.f_n;
  j["length_bound"] = d.length_bound;
  j["degenerate"] = d.degenerate;
  j["conclusion"] = d.degenerate
                        ? "no information (i = 1)"
                        : "depth exceeds " + std::to_string(d.n) +
                              " at word length " + std::to_string(d.length_bound);
  return j.dump(2);
}

}  // namespace growthlab
