#include "growthlab/fingroup.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "growthlab/budget.hpp"
#include "growthlab/numtheory.hpp"

namespace growthlab {

Perm Perm::identity(int degree) {
  Perm p;
  p.map.resize(degree);
  std::iota(p.map.begin(), p.map.end(), 0);
  return p;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < map.size(); ++i)
    if (map[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& o) const {
  if (map.size() != o.map.size())
    throw std::invalid_argument("Perm: degree mismatch");
  Perm r;
  r.map.resize(map.size());
  for (size_t i = 0; i < map.size(); ++i) r.map[i] = map[o.map[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.map.resize(map.size());
  for (size_t i = 0; i < map.size(); ++i) r.map[map[i]] = static_cast<uint16_t>(i);
  return r;
}

uint64_t Perm::order() const {
  std::vector<uint8_t> seen(map.size(), 0);
  uint64_t ord = 1;
  for (size_t i = 0; i < map.size(); ++i) {
    if (seen[i]) continue;
    uint64_t len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = map[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image bytes
  uint64_t h = 1469598103934665603ull;
  for (uint16_t v : p.map) {
    h ^= static_cast<uint64_t>(v) + 1;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

std::optional<std::vector<Perm>> closure(const std::vector<Perm>& generators,
                                         size_t cap) {
  if (generators.empty())
    throw std::invalid_argument("closure: need at least one element");
  int deg = generators[0].degree();
  for (const auto& g : generators)
    if (g.degree() != deg)
      throw std::invalid_argument("closure: mixed parent degrees");

  std::unordered_map<Perm, uint32_t, PermHash> index;
  std::vector<Perm> elems;
  auto push = [&](const Perm& p) -> bool {
    if (index.emplace(p, static_cast<uint32_t>(elems.size())).second) {
      elems.push_back(p);
      return true;
    }
    return false;
  };
  push(Perm::identity(deg));
  for (const auto& g : generators) push(g);
  size_t head = 0;
  while (head < elems.size()) {
    if (elems.size() > cap) return std::nullopt;
    budget::check("closure");
    Perm cur = elems[head++];
    for (const auto& g : generators) {
      Perm next = cur * g;
      push(next);
    }
  }
  if (elems.size() > cap) return std::nullopt;
  return elems;
}

// ---------------------------------------------------------------------------
// GF(p^f)

namespace {

// Multiplies polynomials over GF(p) modulo `mod` (coefficients little-endian).
std::vector<int> polymul_mod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& mod, int p) {
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  // reduce by mod (monic, degree f)
  int f = static_cast<int>(mod.size()) - 1;
  for (int d = static_cast<int>(r.size()) - 1; d >= f; --d) {
    int c = r[d];
    if (c == 0) continue;
    for (int i = 0; i <= f; ++i) {
      int pos = d - f + i;
      r[pos] = ((r[pos] - c * mod[i]) % p + p) % p;
    }
  }
  r.resize(f);
  return r;
}

bool poly_is_irreducible(const std::vector<int>& poly, int p) {
  // trial division by all monic polynomials of degree <= deg/2
  int f = static_cast<int>(poly.size()) - 1;
  for (int d = 1; 2 * d <= f; ++d) {
    // iterate monic candidates of degree d
    std::vector<int> cand(d + 1, 0);
    cand[d] = 1;
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (long long code = 0; code < total; ++code) {
      long long c = code;
      for (int i = 0; i < d; ++i) {
        cand[i] = static_cast<int>(c % p);
        c /= p;
      }
      // polynomial long division remainder of poly by cand
      std::vector<int> rem = poly;
      for (int dd = static_cast<int>(rem.size()) - 1; dd >= d; --dd) {
        int lead = rem[dd] % p;
        if (lead == 0) continue;
        for (int i = 0; i <= d; ++i) {
          int pos = dd - d + i;
          rem[pos] = ((rem[pos] - lead * cand[i]) % p + p) % p;
        }
      }
      bool zero = true;
      for (int i = 0; i < d; ++i)
        if (rem[i] % p != 0) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

GaloisField::GaloisField(int q) : q_(q) {
  auto [p, f] = prime_power_decompose(static_cast<uint64_t>(q));
  if (p == 0) throw std::invalid_argument("GaloisField: q must be a prime power");
  p_ = static_cast<int>(p);
  f_ = static_cast<int>(f);
  if (q_ > 1024) throw std::invalid_argument("GaloisField: q too large");

  // Elements are base-p digit strings of length f (little-endian coefficients).
  std::vector<int> mod;
  if (f_ == 1) {
    mod = {0, 1};
  } else {
    // find a monic irreducible polynomial of degree f over GF(p)
    std::vector<int> cand(f_ + 1, 0);
    cand[f_] = 1;
    long long total = 1;
    for (int i = 0; i < f_; ++i) total *= p_;
    bool found = false;
    for (long long code = 0; code < total && !found; ++code) {
      long long c = code;
      for (int i = 0; i < f_; ++i) {
        cand[i] = static_cast<int>(c % p_);
        c /= p_;
      }
      if (poly_is_irreducible(cand, p_)) found = true;
    }
    if (!found) throw std::logic_error("GaloisField: no irreducible polynomial");
    mod = cand;
  }

  auto decode = [&](int v) {
    std::vector<int> poly(f_, 0);
    for (int i = 0; i < f_; ++i) {
      poly[i] = v % p_;
      v /= p_;
    }
    return poly;
  };
  auto encode = [&](const std::vector<int>& poly) {
    int v = 0;
    for (int i = f_ - 1; i >= 0; --i) v = v * p_ + poly[i];
    return v;
  };

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    auto pa = decode(a);
    std::vector<int> na(f_);
    for (int i = 0; i < f_; ++i) na[i] = (p_ - pa[i]) % p_;
    neg_[a] = encode(na);
    for (int b = 0; b < q_; ++b) {
      auto pb = decode(b);
      std::vector<int> s(f_);
      for (int i = 0; i < f_; ++i) s[i] = (pa[i] + pb[i]) % p_;
      add_[a * q_ + b] = encode(s);
      mul_[a * q_ + b] = encode(polymul_mod(pa, pb, mod, p_));
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
}

int GaloisField::inv(int a) const {
  if (a == 0) throw std::domain_error("GaloisField: inverse of zero");
  return inv_[a];
}

// ---------------------------------------------------------------------------
// ConcreteGroup

struct ConcreteGroup::Data {
  Kind kind = Kind::Custom;
  std::string name;
  int degree = 0;
  std::vector<Perm> generators;
  BigNat order;

  std::once_flag elems_once;
  std::vector<Perm> elems;
  std::unordered_map<Perm, uint32_t, PermHash> index;
  uint32_t identity_idx = 0;

  std::once_flag table_once;
  std::vector<uint32_t> table;  // n*n when order <= kTableCap
  std::vector<uint32_t> inv;

  std::once_flag classes_once;
  std::vector<ConjugacyClass> classes;

  void build_elements() {
    auto res = closure(generators, kElementCap);
    if (!res)
      throw CapExceeded("ConcreteGroup: element table cap exceeded for " + name);
    elems = std::move(*res);
    // canonical order: sort images lexicographically so the table layout is
    // independent of generator order
    std::sort(elems.begin(), elems.end(),
              [](const Perm& a, const Perm& b) { return a.map < b.map; });
    index.reserve(elems.size() * 2);
    for (uint32_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
    identity_idx = index.at(Perm::identity(degree));
    if (order == 0) order = BigNat(elems.size());
    if (order != BigNat(elems.size()))
      throw std::logic_error("ConcreteGroup: closure disagrees with order formula for " + name);
  }

  const std::vector<Perm>& elements() {
    std::call_once(elems_once, [&] { build_elements(); });
    return elems;
  }

  void build_table() {
    elements();
    size_t n = elems.size();
    if (n > kTableCap) return;
    table.resize(n * n);
    inv.resize(n);
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = 0; b < n; ++b) {
        uint32_t c = index.at(elems[a] * elems[b]);
        table[a * n + b] = c;
        if (c == identity_idx) inv[a] = static_cast<uint32_t>(b);
      }
    }
  }
};

ConcreteGroup::Kind ConcreteGroup::kind() const { return d_->kind; }
const std::string& ConcreteGroup::name() const { return d_->name; }
int ConcreteGroup::degree() const { return d_->degree; }
const std::vector<Perm>& ConcreteGroup::generators() const { return d_->generators; }

const BigNat& ConcreteGroup::order() const {
  if (d_->order == 0) d_->elements();
  return d_->order;
}

bool ConcreteGroup::elements_available() const {
  return order() <= BigNat(kElementCap);
}

const std::vector<Perm>& ConcreteGroup::elements() const { return d_->elements(); }

uint32_t ConcreteGroup::element_index(const Perm& p) const {
  d_->elements();
  auto it = d_->index.find(p);
  if (it == d_->index.end())
    throw std::invalid_argument("element_index: not a member of " + d_->name);
  return it->second;
}

uint32_t ConcreteGroup::identity_index() const {
  d_->elements();
  return d_->identity_idx;
}

bool ConcreteGroup::mult_table_available() const {
  return order() <= BigNat(kTableCap);
}

uint32_t ConcreteGroup::mul(uint32_t a, uint32_t b) const {
  std::call_once(d_->table_once, [&] { d_->build_table(); });
  if (!d_->table.empty())
    return d_->table[static_cast<size_t>(a) * d_->elems.size() + b];
  return d_->index.at(d_->elems[a] * d_->elems[b]);
}

uint32_t ConcreteGroup::inverse_of(uint32_t a) const {
  std::call_once(d_->table_once, [&] { d_->build_table(); });
  if (!d_->inv.empty()) return d_->inv[a];
  return d_->index.at(d_->elems[a].inverse());
}

uint64_t ConcreteGroup::element_order(uint32_t idx) const {
  return d_->elements()[idx].order();
}

BigNat ConcreteGroup::exponent() const {
  const auto& elems = d_->elements();
  uint64_t acc = 1;
  for (const auto& e : elems) acc = std::lcm(acc, e.order());
  return BigNat(acc);
}

const std::vector<ConjugacyClass>& ConcreteGroup::conjugacy_classes() const {
  std::call_once(d_->classes_once, [&] {
    const auto& elems = d_->elements();
    size_t n = elems.size();
    std::vector<uint8_t> seen(n, 0);
    std::vector<std::pair<Perm, Perm>> conj;  // (g, g^-1) for generators
    for (const auto& g : d_->generators) conj.emplace_back(g, g.inverse());
    for (uint32_t i = 0; i < n; ++i) {
      if (seen[i]) continue;
      // orbit of elems[i] under conjugation by the generators
      std::vector<uint32_t> stack{i};
      seen[i] = 1;
      uint32_t size = 0;
      while (!stack.empty()) {
        uint32_t x = stack.back();
        stack.pop_back();
        ++size;
        for (const auto& [g, gi] : conj) {
          uint32_t y = d_->index.at(g * (elems[x] * gi));
          if (!seen[y]) {
            seen[y] = 1;
            stack.push_back(y);
          }
        }
      }
      d_->classes.push_back({i, size});
    }
  });
  return d_->classes;
}

namespace {

Perm cycle_perm(int degree, const std::vector<int>& cycle) {
  Perm p = Perm::identity(degree);
  for (size_t i = 0; i < cycle.size(); ++i)
    p.map[cycle[i]] = static_cast<uint16_t>(cycle[(i + 1) % cycle.size()]);
  return p;
}

BigNat factorial(int m) {
  BigNat r = 1;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

std::shared_ptr<ConcreteGroup::Data> make_data(ConcreteGroup::Kind kind,
                                               std::string name, int degree,
                                               std::vector<Perm> gens,
                                               BigNat order) {
  auto d = std::make_shared<ConcreteGroup::Data>();
  d->kind = kind;
  d->name = std::move(name);
  d->degree = degree;
  d->generators = std::move(gens);
  d->order = std::move(order);
  return d;
}

}  // namespace

ConcreteGroup ConcreteGroup::alternating(int m) {
  if (m < 3) throw std::invalid_argument("alternating: m >= 3 required");
  std::vector<Perm> gens;
  for (int i = 2; i < m; ++i) gens.push_back(cycle_perm(m, {0, 1, i}));
  return ConcreteGroup(make_data(Kind::Alternating, "A" + std::to_string(m), m,
                                 std::move(gens), factorial(m) / 2));
}

ConcreteGroup ConcreteGroup::symmetric(int m) {
  if (m < 2) throw std::invalid_argument("symmetric: m >= 2 required");
  std::vector<Perm> gens{cycle_perm(m, {0, 1})};
  if (m > 2) {
    std::vector<int> full(m);
    std::iota(full.begin(), full.end(), 0);
    gens.push_back(cycle_perm(m, full));
  }
  return ConcreteGroup(make_data(Kind::Symmetric, "S" + std::to_string(m), m,
                                 std::move(gens), factorial(m)));
}

ConcreteGroup ConcreteGroup::cyclic(int m) {
  if (m < 1) throw std::invalid_argument("cyclic: m >= 1 required");
  std::vector<int> full(m);
  std::iota(full.begin(), full.end(), 0);
  std::vector<Perm> gens{m == 1 ? Perm::identity(1) : cycle_perm(m, full)};
  return ConcreteGroup(make_data(Kind::Cyclic, "Z" + std::to_string(m),
                                 std::max(m, 1), std::move(gens), BigNat(m)));
}

ConcreteGroup ConcreteGroup::dihedral(int m) {
  if (m < 3) throw std::invalid_argument("dihedral: m >= 3 required");
  std::vector<int> full(m);
  std::iota(full.begin(), full.end(), 0);
  Perm rot = cycle_perm(m, full);
  Perm flip = Perm::identity(m);
  for (int i = 0; i < m; ++i) flip.map[i] = static_cast<uint16_t>((m - i) % m);
  return ConcreteGroup(make_data(Kind::Dihedral, "D" + std::to_string(2 * m), m,
                                 {rot, flip}, BigNat(2 * m)));
}

ConcreteGroup ConcreteGroup::direct_product(const ConcreteGroup& a,
                                            const ConcreteGroup& b) {
  int deg = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const auto& g : a.generators()) {
    Perm p = Perm::identity(deg);
    for (int i = 0; i < a.degree(); ++i) p.map[i] = g.map[i];
    gens.push_back(p);
  }
  for (const auto& g : b.generators()) {
    Perm p = Perm::identity(deg);
    for (int i = 0; i < b.degree(); ++i)
      p.map[a.degree() + i] = static_cast<uint16_t>(a.degree() + g.map[i]);
    gens.push_back(p);
  }
  return ConcreteGroup(make_data(Kind::Product, a.name() + "x" + b.name(), deg,
                                 std::move(gens), a.order() * b.order()));
}

ConcreteGroup ConcreteGroup::from_generators(std::string name,
                                             std::vector<Perm> generators) {
  if (generators.empty())
    throw std::invalid_argument("from_generators: need generators");
  int deg = generators[0].degree();
  return ConcreteGroup(
      make_data(Kind::Custom, std::move(name), deg, std::move(generators), 0));
}

namespace {

BigNat sl_order(int k, int q) {
  // |SL_k(q)| = q^{k(k-1)/2} * prod_{i=2..k} (q^i - 1)
  BigNat r = 1;
  BigNat qb = q;
  for (int i = 0; i < k * (k - 1) / 2; ++i) r *= qb;
  BigNat qp = qb;
  for (int i = 2; i <= k; ++i) {
    qp *= qb;
    r *= (qp - 1);
  }
  return r;
}

}  // namespace

ConcreteGroup ConcreteGroup::psl(int k, int q, bool force) {
  if (k < 2) throw std::invalid_argument("psl: k >= 2 required");
  auto [p, f] = prime_power_decompose(static_cast<uint64_t>(q));
  if (p == 0) throw std::invalid_argument("psl: q must be a prime power");
  if (!force && k == 2 && (q == 2 || q == 3))
    throw std::invalid_argument("psl: PSL_2(2) and PSL_2(3) are not simple");

  GaloisField F(q);

  // Projective points: nonzero vectors in GF(q)^k with first nonzero
  // coordinate scaled to 1, enumerated in lexicographic order.
  std::vector<std::vector<int>> points;
  std::vector<int> v(k, 0);
  auto is_canonical = [&](const std::vector<int>& w) {
    for (int c : w) {
      if (c == 0) continue;
      return c == 1;
    }
    return false;
  };
  while (true) {
    int i = k - 1;
    while (i >= 0 && v[i] == q - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
    if (is_canonical(v)) points.push_back(v);
  }
  std::unordered_map<uint64_t, uint32_t> point_index;
  auto key_of = [&](const std::vector<int>& w) {
    uint64_t key = 0;
    for (int c : w) key = key * static_cast<uint64_t>(q) + c;
    return key;
  };
  for (uint32_t i = 0; i < points.size(); ++i)
    point_index.emplace(key_of(points[i]), i);

  auto canonicalize = [&](std::vector<int>& w) {
    for (int c : w) {
      if (c == 0) continue;
      if (c != 1) {
        int s = F.inv(c);
        for (int& x : w) x = F.mul(x, s);
      }
      return;
    }
    throw std::logic_error("psl: zero vector image");
  };

  // Permutation induced on projective points by a k x k matrix (row-major).
  auto matrix_perm = [&](const std::vector<int>& mat) {
    Perm perm;
    perm.map.resize(points.size());
    std::vector<int> w(k);
    for (uint32_t idx = 0; idx < points.size(); ++idx) {
      for (int r = 0; r < k; ++r) {
        int acc = 0;
        for (int c = 0; c < k; ++c)
          acc = F.add(acc, F.mul(mat[r * k + c], points[idx][c]));
        w[r] = acc;
      }
      canonicalize(w);
      perm.map[idx] = static_cast<uint16_t>(point_index.at(key_of(w)));
    }
    return perm;
  };

  // Elementary transvections E_{ij}(alpha^m) for 0 <= m < f generate SL_k(q);
  // their images generate the projective action, i.e. PSL_k(q).
  std::vector<Perm> gens;
  int alpha = F.primitive_poly_root();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      int val = 1;
      for (int m = 0; m < static_cast<int>(f); ++m) {
        std::vector<int> mat(k * k, 0);
        for (int t = 0; t < k; ++t) mat[t * k + t] = 1;
        mat[i * k + j] = val;
        gens.push_back(matrix_perm(mat));
        val = F.mul(val, alpha);
      }
    }

  BigNat order = sl_order(k, q) / std::gcd(k, q - 1);
  std::string name = "PSL" + std::to_string(k) + "(" + std::to_string(q) + ")";
  return ConcreteGroup(make_data(Kind::PSL, std::move(name),
                                 static_cast<int>(points.size()),
                                 std::move(gens), std::move(order)));
}

Perm evaluate(const Word& w, const std::vector<Perm>& images) {
  if (static_cast<int>(images.size()) != w.rank())
    throw std::invalid_argument("evaluate: rank mismatch");
  int deg = images.empty() ? 1 : images[0].degree();
  for (const auto& g : images)
    if (g.degree() != deg) throw std::invalid_argument("evaluate: mixed degrees");
  std::vector<Perm> inv;
  inv.reserve(images.size());
  for (const auto& g : images) inv.push_back(g.inverse());
  Perm acc = Perm::identity(deg);
  for (int16_t l : w.letters())
    acc = acc * (l > 0 ? images[l - 1] : inv[-l - 1]);
  return acc;
}

bool is_generating(const std::vector<Perm>& tuple, const ConcreteGroup& g) {
  if (tuple.empty()) return g.order() == 1;
  for (const auto& t : tuple)
    if (t.degree() != g.degree())
      throw std::invalid_argument("is_generating: degree mismatch");
  size_t cap = g.order().convert_to<size_t>();
  auto cl = closure(tuple, cap);
  return cl && BigNat(cl->size()) == g.order();
}

}  // namespace growthlab
