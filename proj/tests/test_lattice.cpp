#include <doctest.h>

#include <random>
#include <set>

#include "growthlab/budget.hpp"
#include "growthlab/lattice.hpp"

using namespace growthlab;

namespace {

uint64_t sigma(uint64_t m) {
  uint64_t s = 0;
  for (uint64_t d = 1; d <= m; ++d)
    if (m % d == 0) s += d;
  return s;
}

Lattice diag(std::vector<uint64_t> d) {
  int k = static_cast<int>(d.size());
  Lattice l = Lattice::full(k);
  for (int i = 0; i < k; ++i) l.at(i, i) = d[i];
  return l;
}

}  // namespace

TEST_SUITE_BEGIN("lattice");

TEST_CASE("enumerate_sublattices rank 1 and 2") {
  auto r1 = enumerate_sublattices(1, 7);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].at(0, 0) == 7);

  CHECK(enumerate_sublattices(2, 2).size() == 3);
  CHECK(enumerate_sublattices(2, 6).size() == 12);
  for (uint64_t m = 1; m <= 40; ++m) {
    auto ls = enumerate_sublattices(2, m);
    CHECK(ls.size() == sigma(m));
    std::set<std::vector<BigNat>> seen;
    for (const auto& l : ls) {
      CHECK(l.index() == m);
      seen.insert(l.basis);
    }
    CHECK(seen.size() == ls.size());  // canonical forms are distinct
  }
}

TEST_CASE("enumerate_sublattices rank 3 count") {
  for (uint64_t m = 1; m <= 12; ++m) {
    uint64_t expect = 0;
    for (uint64_t d1 = 1; d1 <= m; ++d1) {
      if (m % d1) continue;
      for (uint64_t d2 = 1; d2 <= m / d1; ++d2) {
        if ((m / d1) % d2) continue;
        uint64_t d3 = m / d1 / d2;
        expect += d2 * d3 * d3;
      }
    }
    CHECK(enumerate_sublattices(3, m).size() == expect);
  }
  CHECK_THROWS_AS(enumerate_sublattices(4, 2), std::invalid_argument);
}

TEST_CASE("intersect_lattices basics") {
  Lattice full = Lattice::full(2);
  Lattice l = Lattice::from_rows(2, {BigNat(3), BigNat(1), BigNat(0), BigNat(2)});
  CHECK(intersect_lattices(l, full) == l);

  Lattice two = diag({2}), three = diag({3});
  CHECK(intersect_lattices(two, three) == diag({6}));

  // (2Z)^2 meet span{(1,1),(0,2)}
  Lattice a = diag({2, 2});
  Lattice b = Lattice::from_rows(2, {BigNat(1), BigNat(1), BigNat(0), BigNat(2)});
  Lattice meet = intersect_lattices(a, b);
  CHECK(meet.index() == 4);
  for (int i = 0; i < 2; ++i) {
    std::vector<BigNat> row{meet.at(i, 0), meet.at(i, 1)};
    CHECK(a.contains(row));
    CHECK(b.contains(row));
  }
}

TEST_CASE("intersection is commutative, associative, idempotent") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<uint64_t> mdist(1, 24);
  for (int trial = 0; trial < 40; ++trial) {
    auto pick = [&] {
      auto ls = enumerate_sublattices(2, mdist(rng));
      std::uniform_int_distribution<size_t> i(0, ls.size() - 1);
      return ls[i(rng)];
    };
    Lattice a = pick(), b = pick(), c = pick();
    CHECK(intersect_lattices(a, b) == intersect_lattices(b, a));
    CHECK(intersect_lattices(a, a) == a);
    CHECK(intersect_lattices(intersect_lattices(a, b), c) ==
          intersect_lattices(a, intersect_lattices(b, c)));
  }
}

TEST_CASE("brute_lambda_zk") {
  CHECK(brute_lambda_zk(1, 2) == Lattice::full(2));
  CHECK(brute_lambda_zk(6, 1) == diag({60}));
  CHECK(brute_lambda_zk(6, 2) == diag({60, 60}));
  CHECK_THROWS_AS(brute_lambda_zk(31, 2), BudgetExceeded);
}

TEST_CASE("q-invariant scan finds exactly the two canonical shapes") {
  auto found = q_invariant_scan(512);
  CHECK(!found.empty());
  for (const auto& f : found) {
    bool shape_a = f.b == 0 && f.d1 == f.d2;
    bool shape_b = f.d2 == 2 * f.d1 && f.b == f.d1;
    CHECK((shape_a || shape_b));
  }
  // both shapes occur
  CHECK(std::any_of(found.begin(), found.end(),
                    [](const auto& f) { return f.b == 0; }));
  CHECK(std::any_of(found.begin(), found.end(),
                    [](const auto& f) { return f.b != 0; }));
}

TEST_CASE("q-invariant parallel scan equals serial reference") {
  auto a = q_invariant_scan(1500);
  auto b = q_invariant_scan_serial(1500);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].d1 == b[i].d1);
    CHECK(a[i].d2 == b[i].d2);
    CHECK(a[i].b == b[i].b);
  }
}

TEST_CASE("q_invariant_lambda small thresholds") {
  auto res = q_invariant_lambda(7);
  CHECK(res.inner == Lattice::full(2));  // floor(7/8) = 0 clamps to Z^2
  auto res32 = q_invariant_lambda(32);
  CHECK(res32.outer.index() > 1);
  CHECK(res32.inner.index() >= 1);
  // inner intersects fewer lattices, so its index divides the outer index
  CHECK(res32.outer.index() % res32.inner.index() == 0);
}

TEST_CASE("brute_subgroups counts") {
  CHECK(brute_subgroups(ConcreteGroup::cyclic(6), 6).size() == 4);
  CHECK(brute_subgroups(ConcreteGroup::alternating(4), 12).size() == 10);

  auto s3z2 = ConcreteGroup::direct_product(ConcreteGroup::symmetric(3),
                                            ConcreteGroup::cyclic(2));
  auto idx2 = brute_subgroups(s3z2, 2);
  CHECK(idx2.size() == 4);  // whole group and the three index-2 kernels
  for (const auto& s : idx2) CHECK(s.index <= 2);
}

TEST_CASE("subgroup flags") {
  auto a4 = ConcreteGroup::alternating(4);
  auto subs = brute_subgroups(a4, 12);
  int normal = 0, maximal = 0, maxnormal = 0;
  for (const auto& s : subs) {
    normal += s.normal;
    maximal += s.maximal;
    maxnormal += s.maximal_normal;
  }
  // A4: normal subgroups 1, V4, A4; maximal: V4 and four Z3; V4 is the
  // unique maximal normal one
  CHECK(normal == 3);
  CHECK(maximal == 5);
  CHECK(maxnormal == 1);
}

TEST_CASE("brute_ig basics") {
  auto a5 = ConcreteGroup::alternating(5);
  CHECK(brute_ig(a5, 1, SubgroupClass::All) == 1);
  CHECK(brute_ig(a5, 60, SubgroupClass::MaxNormal) == 60);

  auto z4z9 = ConcreteGroup::direct_product(ConcreteGroup::cyclic(4),
                                            ConcreteGroup::cyclic(9));
  auto z4 = ConcreteGroup::cyclic(4);
  auto z9 = ConcreteGroup::cyclic(9);
  for (uint64_t n = 1; n <= 36; ++n)
    CHECK(brute_ig(z4z9, n, SubgroupClass::All) ==
          brute_ig(z4, n, SubgroupClass::All) *
              brute_ig(z9, n, SubgroupClass::All));
}

TEST_CASE("finite-index subgroup inequalities, one pair") {
  // S4 over A4 with index j = 2: i_G(n) <= j i_D(n) <= i_G(j n) and the
  // normal variant with (j n)^j
  auto s4 = ConcreteGroup::symmetric(4);
  auto a4 = ConcreteGroup::alternating(4);
  uint64_t j = 2;
  for (uint64_t n = 1; n <= 24; ++n) {
    auto ig = brute_ig(s4, n, SubgroupClass::All);
    auto id = brute_ig(a4, n, SubgroupClass::All);
    CHECK(ig <= j * id);
    CHECK(j * id <= brute_ig(s4, j * n, SubgroupClass::All));
    auto ign = brute_ig(s4, n, SubgroupClass::Normal);
    auto idn = brute_ig(a4, n, SubgroupClass::Normal);
    CHECK(ign <= j * idn);
    CHECK(j * idn <= brute_ig(s4, (j * n) * (j * n), SubgroupClass::Normal));
  }
}

TEST_SUITE_END();
