#include <doctest.h>

#include "growthlab/budget.hpp"
#include "growthlab/laws.hpp"

using namespace growthlab;

TEST_SUITE_BEGIN("laws");

TEST_CASE("census_exponent") {
  CHECK(census_exponent(59) == 1);
  CHECK(census_exponent(60) == 30);
  CHECK(census_exponent(168) == 420);
  CHECK(census_exponent(660) == 13860);
}

TEST_CASE("is_law basics on A5") {
  auto a5 = ConcreteGroup::alternating(5);
  CHECK(is_law(Word(2), a5));
  CHECK(is_law(Word::generator(1, 1).pow(30), a5));
  CHECK(!is_law(Word::generator(1, 1).pow(29), a5));
  Word comm = Word::commutator(Word::generator(1, 2), Word::generator(2, 2));
  CHECK(!is_law(comm, a5));
}

TEST_CASE("is_law equals the exhaustive reference") {
  auto a5 = ConcreteGroup::alternating(5);
  std::vector<Word> samples{
      Word::generator(1, 2).pow(30),
      Word::commutator(Word::generator(1, 2), Word::generator(2, 2)),
      Word::commutator(Word::generator(1, 2).pow(30),
                       Word::generator(2, 2).pow(30)),
      Word::parse("abAB", 2).pow(2),
  };
  for (const auto& w : samples) CHECK(is_law(w, a5) == is_law_naive(w, a5));
}

TEST_CASE("is_law invariant under conjugation and inversion of the word") {
  auto a5 = ConcreteGroup::alternating(5);
  Word w = Word::commutator(Word::generator(1, 2).pow(30),
                            Word::generator(2, 2).pow(30));
  Word conj = Word::parse("ab", 2)
                  .concat(w)
                  .concat(Word::parse("ab", 2).inverse());
  CHECK(is_law(w, a5));
  CHECK(is_law(conj, a5));
  CHECK(is_law(w.inverse(), a5));

  Word bad = Word::parse("abab", 2);
  CHECK(is_law(bad, a5) == is_law(bad.inverse(), a5));
}

TEST_CASE("commutator law at 60") {
  auto cert = commutator_law(60);
  CHECK(cert.length == 120);
  CHECK(cert.method == "commutator");
  CHECK(cert.zero_exponent_sums);
  CHECK(cert.groups == std::vector<std::string>{"A5"});
  // the word really is [x^30, y^30]
  Word expect = Word::commutator(Word::generator(1, 2).pow(30),
                                 Word::generator(2, 2).pow(30));
  CHECK(cert.word == expect);
  // certificate re-verifies
  auto a5 = ConcreteGroup::alternating(5);
  CHECK(is_law(cert.word, a5));
}

TEST_CASE("commutator law below 60 degenerates to [x, y]") {
  auto cert = commutator_law(59);
  CHECK(cert.length == 4);
  CHECK(cert.groups.empty());
  CHECK(cert.word == Word::parse("abAB", 2));
}

TEST_CASE("commutator law at 168") {
  auto cert = commutator_law(168);
  CHECK(cert.length == 1680);
  CHECK(cert.groups == std::vector<std::string>{"A5", "PSL2(7)"});
}

TEST_CASE("bfs shortest law") {
  // vacuous group list: the first nontrivial zero-exponent-sum word
  auto vac = bfs_shortest_law({}, 4);
  REQUIRE(vac.has_value());
  CHECK(vac->word == Word::parse("abAB", 2));
  CHECK(vac->length == 4);

  // Z/2: x^2 is a law but carries a nonzero exponent sum, so [x,y] wins
  auto z2 = bfs_shortest_law({ConcreteGroup::cyclic(2)}, 6);
  REQUIRE(z2.has_value());
  CHECK(z2->word == Word::parse("abAB", 2));

  // A5 admits no law within radius 14; regression-frozen search outcome
  auto a5 = bfs_shortest_law({ConcreteGroup::alternating(5)}, 14);
  CHECK(!a5.has_value());

  CHECK_THROWS_AS(bfs_shortest_law({}, 15), std::invalid_argument);
}

TEST_CASE("rf lower bound") {
  auto one = rf_lower_bound(10, GrowthValue::exact_value(BigNat(1)));
  CHECK(one.degenerate);

  auto five = rf_lower_bound(10, GrowthValue::exact_value(BigNat(5)));
  CHECK(five.f_n == 1);  // ball_size(2,1) = 5
  CHECK(five.length_bound == 2);

  auto six = rf_lower_bound(10, GrowthValue::exact_value(BigNat(6)));
  CHECK(six.f_n == 2);

  // monotone in the growth value
  uint64_t prev = 0;
  for (long long v : {2, 10, 100, 10000, 1000000}) {
    auto d = rf_lower_bound(10, GrowthValue::exact_value(BigNat(v)));
    CHECK(d.f_n >= prev);
    prev = d.f_n;
  }
}

TEST_SUITE_END();
