#include "growthlab/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "growthlab/budget.hpp"
#include "growthlab/omp_util.hpp"

namespace growthlab {

namespace {

// Row-style Hermite form: upper triangular, positive diagonal, entries above
// each diagonal reduced modulo it.  `rows` is m x k row-major and must span a
// rank-k lattice; returns the k x k canonical basis.
std::vector<BigNat> hnf_rows(std::vector<BigNat> rows, int m, int k) {
  auto at = [&](int i, int j) -> BigNat& { return rows[i * k + j]; };
  auto row_sub = [&](int dst, int src, const BigNat& f) {
    for (int j = 0; j < k; ++j) at(dst, j) -= f * at(src, j);
  };
  auto row_swap = [&](int a, int b) {
    for (int j = 0; j < k; ++j) std::swap(at(a, j), at(b, j));
  };

  int r = 0;
  for (int j = 0; j < k && r < m; ++j) {
    // make row r the unique nonzero in column j among rows >= r
    while (true) {
      int piv = -1;
      for (int i = r; i < m; ++i)
        if (at(i, j) != 0 &&
            (piv < 0 || abs(at(i, j)) < abs(at(piv, j))))
          piv = i;
      if (piv < 0) break;
      if (piv != r) row_swap(piv, r);
      bool done = true;
      for (int i = r + 1; i < m; ++i)
        if (at(i, j) != 0) {
          BigNat f = at(i, j) / at(r, j);  // truncated division is fine here
          row_sub(i, r, f);
          if (at(i, j) != 0) done = false;
        }
      if (done) break;
    }
    if (at(r, j) == 0) continue;
    if (at(r, j) < 0)
      for (int t = 0; t < k; ++t) at(r, t) = -at(r, t);
    // reduce entries above the new diagonal
    for (int i = 0; i < r; ++i) {
      BigNat f = at(i, j) / at(r, j);
      if (at(i, j) - f * at(r, j) < 0) f -= 1;  // floor division
      row_sub(i, r, f);
    }
    ++r;
  }
  if (r != k) throw std::invalid_argument("hnf_rows: input does not span rank k");
  rows.resize(static_cast<size_t>(k) * k);
  return rows;
}

}  // namespace

Lattice Lattice::full(int rank) {
  Lattice l;
  l.rank = rank;
  l.basis.assign(static_cast<size_t>(rank) * rank, 0);
  for (int i = 0; i < rank; ++i) l.at(i, i) = 1;
  return l;
}

Lattice Lattice::from_rows(int rank, std::vector<BigNat> rows) {
  if (rows.size() % rank != 0)
    throw std::invalid_argument("Lattice: ragged row data");
  int m = static_cast<int>(rows.size()) / rank;
  Lattice l;
  l.rank = rank;
  l.basis = hnf_rows(std::move(rows), m, rank);
  return l;
}

BigNat Lattice::index() const {
  BigNat d = 1;
  for (int i = 0; i < rank; ++i) d *= at(i, i);
  return d;
}

bool Lattice::contains(const std::vector<BigNat>& v) const {
  if (static_cast<int>(v.size()) != rank)
    throw std::invalid_argument("Lattice::contains: dimension mismatch");
  std::vector<BigNat> rem = v;
  for (int i = 0; i < rank; ++i) {
    if (rem[i] % at(i, i) != 0) return false;
    BigNat c = rem[i] / at(i, i);
    for (int j = i; j < rank; ++j) rem[j] -= c * at(i, j);
  }
  return true;
}

std::vector<Lattice> enumerate_sublattices(int k, uint64_t m) {
  if (k < 1 || k > 3)
    throw std::invalid_argument("enumerate_sublattices: rank 1..3 supported");
  if (m < 1) throw std::invalid_argument("enumerate_sublattices: m >= 1");
  std::vector<Lattice> out;
  auto make = [&](std::vector<BigNat> rows) {
    Lattice l;
    l.rank = k;
    l.basis = std::move(rows);
    out.push_back(std::move(l));
  };
  if (k == 1) {
    make({BigNat(m)});
    return out;
  }
  if (k == 2) {
    for (uint64_t d1 = 1; d1 <= m; ++d1) {
      if (m % d1) continue;
      uint64_t d2 = m / d1;
      for (uint64_t b = 0; b < d2; ++b)
        make({BigNat(d1), BigNat(b), BigNat(0), BigNat(d2)});
    }
    return out;
  }
  for (uint64_t d1 = 1; d1 <= m; ++d1) {
    if (m % d1) continue;
    for (uint64_t d2 = 1; d2 <= m / d1; ++d2) {
      if ((m / d1) % d2) continue;
      uint64_t d3 = m / d1 / d2;
      for (uint64_t b12 = 0; b12 < d2; ++b12)
        for (uint64_t b13 = 0; b13 < d3; ++b13)
          for (uint64_t b23 = 0; b23 < d3; ++b23)
            make({BigNat(d1), BigNat(b12), BigNat(b13),  //
                  BigNat(0), BigNat(d2), BigNat(b23),    //
                  BigNat(0), BigNat(0), BigNat(d3)});
    }
  }
  return out;
}

Lattice intersect_lattices(const Lattice& a, const Lattice& b) {
  if (a.rank != b.rank)
    throw std::invalid_argument("intersect_lattices: rank mismatch");
  int k = a.rank;
  // Left kernel of the stacked matrix [A; B]: rows (u, v) with uA + vB = 0.
  // The vectors uA then run over A meet B.  Track the transform on an
  // augmented identity.
  int m = 2 * k;
  std::vector<BigNat> mat(static_cast<size_t>(m) * k);
  std::vector<BigNat> u(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      mat[i * k + j] = a.at(i, j);
      mat[(k + i) * k + j] = b.at(i, j);
    }
  for (int i = 0; i < m; ++i) u[i * m + i] = 1;

  auto row_sub = [&](int dst, int src, const BigNat& f) {
    for (int j = 0; j < k; ++j) mat[dst * k + j] -= f * mat[src * k + j];
    for (int j = 0; j < m; ++j) u[dst * m + j] -= f * u[src * m + j];
  };
  auto row_swap = [&](int x, int y) {
    for (int j = 0; j < k; ++j) std::swap(mat[x * k + j], mat[y * k + j]);
    for (int j = 0; j < m; ++j) std::swap(u[x * m + j], u[y * m + j]);
  };

  int r = 0;
  for (int j = 0; j < k; ++j) {
    while (true) {
      int piv = -1;
      for (int i = r; i < m; ++i)
        if (mat[i * k + j] != 0 &&
            (piv < 0 || abs(mat[i * k + j]) < abs(mat[piv * k + j])))
          piv = i;
      if (piv < 0) break;
      if (piv != r) row_swap(piv, r);
      bool done = true;
      for (int i = r + 1; i < m; ++i)
        if (mat[i * k + j] != 0) {
          row_sub(i, r, mat[i * k + j] / mat[r * k + j]);
          if (mat[i * k + j] != 0) done = false;
        }
      if (done) break;
    }
    if (mat[r * k + j] != 0) ++r;
  }
  if (r != k) throw std::logic_error("intersect_lattices: unexpected rank");

  // rows r..m-1 of u are a kernel basis; map u-halves through A
  std::vector<BigNat> rows(static_cast<size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      BigNat acc = 0;
      for (int t = 0; t < k; ++t) acc += u[(r + i) * m + t] * a.at(t, j);
      rows[i * k + j] = acc;
    }
  return Lattice::from_rows(k, std::move(rows));
}

Lattice brute_lambda_zk(uint64_t n, int k) {
  if (k != 1 && k != 2)
    throw std::invalid_argument("brute_lambda_zk: k in {1,2}");
  if ((k == 1 && n > 10000) || (k == 2 && n > 30))
    throw BudgetExceeded("brute_lambda_zk: n beyond brute-force budget");
  if (n < 1) throw std::invalid_argument("brute_lambda_zk: n >= 1");
  Lattice acc = Lattice::full(k);
  for (uint64_t m = 2; m <= n; ++m) {
    budget::check("brute_lambda_zk");
    for (const auto& l : enumerate_sublattices(k, m))
      acc = intersect_lattices(acc, l);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Q-invariant sublattices of Z^2

namespace {

// membership of (x, y) in rows (d1, b; 0, d2), all int64
inline bool member(int64_t x, int64_t y, int64_t d1, int64_t b, int64_t d2) {
  if (x % d1) return false;
  int64_t c = x / d1;
  return (y - c * b) % d2 == 0;
}

// invariance under [[0,-1],[1,0]] and [[0,1],[1,0]] applied to both basis rows
inline bool q_invariant(int64_t d1, int64_t b, int64_t d2) {
  // images of (d1, b): (-b, d1) and (b, d1); of (0, d2): (-d2, 0) and (d2, 0)
  return member(-b, d1, d1, b, d2) && member(b, d1, d1, b, d2) &&
         member(-d2, 0, d1, b, d2) && member(d2, 0, d1, b, d2);
}

}  // namespace

std::vector<QInvariantLattice> q_invariant_scan_serial(uint64_t n) {
  std::vector<QInvariantLattice> out;
  for (uint64_t d1 = 1; d1 <= n; ++d1) {
    budget::check("q_invariant_scan");
    for (uint64_t d2 = 1; d2 * d1 <= n; ++d2)
      for (uint64_t b = 0; b < d2; ++b)
        if (q_invariant(static_cast<int64_t>(d1), static_cast<int64_t>(b),
                        static_cast<int64_t>(d2)))
          out.push_back({d1, d2, b, d1 * d2});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.index, x.d1, x.b) < std::tie(y.index, y.d1, y.b);
  });
  return out;
}

std::vector<QInvariantLattice> q_invariant_scan(uint64_t n) {
  std::vector<std::vector<QInvariantLattice>> per_d1(n + 1);
  OmpExceptionGuard guard;
#pragma omp parallel for schedule(dynamic, 16)
  for (int64_t d1 = 1; d1 <= static_cast<int64_t>(n); ++d1) {
    guard.run([&] {
      budget::check("q_invariant_scan");
      auto& local = per_d1[d1];
      for (uint64_t d2 = 1; d2 * d1 <= n; ++d2)
        for (uint64_t b = 0; b < d2; ++b)
          if (q_invariant(d1, static_cast<int64_t>(b), static_cast<int64_t>(d2)))
            local.push_back({static_cast<uint64_t>(d1), d2, b,
                             static_cast<uint64_t>(d1) * d2});
    });
  }
  guard.rethrow();
  std::vector<QInvariantLattice> out;
  for (auto& v : per_d1) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.index, x.d1, x.b) < std::tie(y.index, y.d1, y.b);
  });
  return out;
}

Lattice fold_q_invariant(const std::vector<QInvariantLattice>& found,
                         uint64_t m) {
  Lattice acc = Lattice::full(2);
  for (const auto& f : found) {
    if (f.index > m) continue;
    Lattice l;
    l.rank = 2;
    l.basis = {BigNat(f.d1), BigNat(f.b), BigNat(0), BigNat(f.d2)};
    acc = intersect_lattices(acc, l);
  }
  return acc;
}

QInvariantResult q_invariant_lambda(uint64_t n) {
  if (n > 10000)
    throw BudgetExceeded("q_invariant_lambda: n beyond brute-force budget");
  QInvariantResult r;
  r.found = q_invariant_scan(n);
  r.inner = fold_q_invariant(r.found, n / 8);
  r.outer = fold_q_invariant(r.found, n);
  return r;
}

// ---------------------------------------------------------------------------
// Subgroups of small finite groups

namespace {

struct BitsetHash {
  size_t operator()(const std::vector<uint64_t>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : v) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

bool subset(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

}  // namespace

std::vector<SubgroupSet> brute_subgroups(const ConcreteGroup& g, uint64_t n) {
  if (g.order() > 400)
    throw CapExceeded("brute_subgroups: |G| <= 400 required");
  uint32_t size = static_cast<uint32_t>(g.order().convert_to<uint64_t>());
  g.elements();
  size_t words = (size + 63) / 64;

  auto set_bit = [&](std::vector<uint64_t>& bits, uint32_t i) {
    bits[i >> 6] |= uint64_t{1} << (i & 63);
  };
  auto test_bit = [&](const std::vector<uint64_t>& bits, uint32_t i) {
    return bits[i >> 6] >> (i & 63) & 1;
  };

  // closure of a set of element indices under the multiplication table
  auto close_idx = [&](std::vector<uint32_t> seed) {
    std::vector<uint64_t> bits(words, 0);
    std::vector<uint32_t> list;
    for (uint32_t s : seed)
      if (!test_bit(bits, s)) {
        set_bit(bits, s);
        list.push_back(s);
      }
    if (!test_bit(bits, g.identity_index())) {
      set_bit(bits, g.identity_index());
      list.push_back(g.identity_index());
    }
    for (size_t head = 0; head < list.size(); ++head)
      for (size_t t = 0; t < list.size(); ++t) {
        uint32_t p1 = g.mul(list[head], list[t]);
        if (!test_bit(bits, p1)) {
          set_bit(bits, p1);
          list.push_back(p1);
        }
        uint32_t p2 = g.mul(list[t], list[head]);
        if (!test_bit(bits, p2)) {
          set_bit(bits, p2);
          list.push_back(p2);
        }
      }
    return std::pair(std::move(bits), std::move(list));
  };

  // cyclic-extension sweep
  std::unordered_map<std::vector<uint64_t>, size_t, BitsetHash> seen;
  std::vector<std::pair<std::vector<uint64_t>, std::vector<uint32_t>>> groups;
  {
    auto triv = close_idx({g.identity_index()});
    seen.emplace(triv.first, 0);
    groups.push_back(std::move(triv));
  }
  for (size_t head = 0; head < groups.size(); ++head) {
    budget::check("brute_subgroups");
    if (groups[head].second.size() == size) continue;
    auto members = groups[head].second;  // copy: groups vector reallocates
    for (uint32_t e = 0; e < size; ++e) {
      if (test_bit(groups[head].first, e)) continue;
      auto seed = members;
      seed.push_back(e);
      auto ext = close_idx(std::move(seed));
      if (seen.emplace(ext.first, groups.size()).second)
        groups.push_back(std::move(ext));
    }
  }

  // flags
  std::vector<SubgroupSet> out(groups.size());
  std::vector<uint32_t> gen_idx;
  for (const auto& gen : g.generators()) gen_idx.push_back(g.element_index(gen));
  for (size_t i = 0; i < groups.size(); ++i) {
    auto& s = out[i];
    s.bits = groups[i].first;
    s.size = groups[i].second.size();
    s.index = g.order() / BigNat(s.size);
    s.normal = true;
    for (uint32_t gi : gen_idx) {
      uint32_t gin = g.inverse_of(gi);
      for (uint32_t h : groups[i].second)
        if (!test_bit(s.bits, g.mul(g.mul(gi, h), gin))) {
          s.normal = false;
          break;
        }
      if (!s.normal) break;
    }
  }
  for (size_t i = 0; i < out.size(); ++i) {
    if (out[i].size == size) continue;  // whole group: not maximal-anything
    bool max_all = true, max_norm = out[i].normal;
    for (size_t j = 0; j < out.size(); ++j) {
      if (i == j || out[j].size == size || out[j].size <= out[i].size) continue;
      if (subset(out[i].bits, out[j].bits)) {
        max_all = false;
        if (out[j].normal) max_norm = false;
      }
    }
    out[i].maximal = max_all;
    out[i].maximal_normal = max_norm;
  }

  // filter by index
  std::vector<SubgroupSet> filtered;
  for (auto& s : out)
    if (s.index <= BigNat(n)) filtered.push_back(std::move(s));
  std::sort(filtered.begin(), filtered.end(),
            [](const SubgroupSet& a, const SubgroupSet& b) {
              return a.size > b.size;
            });
  return filtered;
}

BigNat brute_ig_from(const std::vector<SubgroupSet>& subs,
                     const BigNat& group_order, uint64_t n,
                     SubgroupClass flavor) {
  uint32_t size = static_cast<uint32_t>(group_order.convert_to<uint64_t>());
  size_t words = (size + 63) / 64;
  std::vector<uint64_t> acc(words, ~uint64_t{0});
  // mask off bits past the group size
  if (size & 63) acc[words - 1] = (uint64_t{1} << (size & 63)) - 1;
  for (const auto& s : subs) {
    if (s.index > n) continue;
    bool take = false;
    switch (flavor) {
      case SubgroupClass::All: take = true; break;
      case SubgroupClass::Normal: take = s.normal; break;
      case SubgroupClass::Max: take = s.maximal; break;
      case SubgroupClass::MaxNormal: take = s.maximal_normal; break;
    }
    if (!take) continue;
    for (size_t w = 0; w < words; ++w) acc[w] &= s.bits[w];
  }
  uint64_t count = 0;
  for (uint64_t w : acc) count += __builtin_popcountll(w);
  return group_order / BigNat(count);
}

BigNat brute_ig(const ConcreteGroup& g, uint64_t n, SubgroupClass flavor) {
  return brute_ig_from(brute_subgroups(g, n), g.order(), n, flavor);
}

}  // namespace growthlab
