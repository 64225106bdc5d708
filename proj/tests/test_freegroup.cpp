#include <doctest.h>

#include <random>
#include <set>

#include "growthlab/fingroup.hpp"
#include "growthlab/freegroup.hpp"

using namespace growthlab;

TEST_SUITE_BEGIN("freegroup");

TEST_CASE("reduce") {
  std::vector<int> a{1, -1};
  CHECK(Word::reduce(a, 2).empty());
  std::vector<int> b{1, 2, -2, 1};
  CHECK(Word::reduce(b, 2).letters() == std::vector<int16_t>{1, 1});
  std::vector<int> c{1, 2, -1, -2, 1, 2, -1, -2};
  CHECK(Word::reduce(c, 2).letters() ==
        std::vector<int16_t>{1, 2, -1, -2, 1, 2, -1, -2});
  std::vector<int> bad{1, 3};
  CHECK_THROWS_AS(Word::reduce(bad, 2), std::out_of_range);
}

TEST_CASE("reduce is idempotent on random raw sequences") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> raw;
    for (int i = 0; i < 50; ++i) {
      int l = letter(rng);
      raw.push_back(l < 2 ? l + 1 : -(l - 1));
    }
    Word w = Word::reduce(raw, 2);
    std::vector<int> again(w.letters().begin(), w.letters().end());
    CHECK(Word::reduce(again, 2) == w);
    // exponent sums survive reduction
    std::vector<long long> sums(2, 0);
    for (int l : raw) sums[std::abs(l) - 1] += l > 0 ? 1 : -1;
    CHECK(w.exponent_sums() == sums);
  }
}

TEST_CASE("ball_size") {
  CHECK(ball_size(2, 0) == 1);
  CHECK(ball_size(2, 1) == 5);
  CHECK(ball_size(2, 3) == 53);
  CHECK(ball_size(2, 6) == 1457);
  CHECK(ball_size(1, 2) == 5);
  CHECK(ball_size(1, 7) == 15);
  CHECK(ball_size(3, 2) == 1 + 6 + 30);
}

TEST_CASE("enumerate_ball rank 1") {
  auto words = enumerate_ball(1, 2);
  REQUIRE(words.size() == 5);
  CHECK(words[0].text() == "1");
  CHECK(words[1].text() == "a");
  CHECK(words[2].text() == "A");
  CHECK(words[3].text() == "aa");
  CHECK(words[4].text() == "AA");
}

TEST_CASE("ball stream is restartable") {
  BallEnumerator en(2, 3);
  Word w;
  size_t first_pass = 0;
  while (en.next(w)) ++first_pass;
  en.reset();
  size_t second_pass = 0;
  while (en.next(w)) ++second_pass;
  CHECK(first_pass == 53);
  CHECK(second_pass == 53);
}

TEST_CASE("enumerate_ball counts and uniqueness") {
  for (int t = 0; t <= 8; ++t) {
    auto words = enumerate_ball(2, t);
    CHECK(BigNat(words.size()) == ball_size(2, t));
    std::set<std::string> texts;
    size_t prev_len = 0;
    for (const auto& w : words) {
      texts.insert(w.text());
      CHECK(w.length() >= prev_len);  // shortest first
      prev_len = w.length();
    }
    CHECK(texts.size() == words.size());
  }
}

TEST_CASE("enumeration order is lexicographic within a length") {
  auto words = enumerate_ball(2, 2);
  std::vector<std::string> expect{"1",  "a",  "A",  "b",  "B",  "aa", "ab",
                                  "aB", "AA", "Ab", "AB", "ba", "bA", "bb",
                                  "Ba", "BA", "BB"};
  std::vector<std::string> got;
  for (const auto& w : words) got.push_back(w.text());
  CHECK(got == expect);
}

TEST_CASE("exponent sums") {
  CHECK(Word(2).exponent_sums() == std::vector<long long>{0, 0});
  std::vector<int> raw{1, 1, -2};
  CHECK(Word::reduce(raw, 2).exponent_sums() == std::vector<long long>{2, -1});
  Word u = Word::parse("abA", 2), v = Word::parse("Bab", 2);
  auto comm = Word::commutator(u, v);
  for (long long s : comm.exponent_sums()) CHECK(s == 0);
}

TEST_CASE("text round trip") {
  for (const char* s : {"1", "a", "AbBa", "aaaBBc"}) {
    Word w = Word::parse(s, 3);
    CHECK(Word::parse(w.text(), 3) == w);
  }
  Word big = Word::parse("x3 X2 x1", 30);
  CHECK(big.letters() == std::vector<int16_t>{3, -2, 1});
  CHECK(Word::parse(big.text(), 30) == big);
}

TEST_CASE("evaluate into A5") {
  auto a5 = ConcreteGroup::alternating(5);
  const auto& elems = a5.elements();
  std::mt19937 rng(99);
  std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);

  // identity word
  std::vector<Perm> imgs{elems[pick(rng)], elems[pick(rng)]};
  CHECK(evaluate(Word(2), imgs).is_identity());

  // x^2 with an order-2 image
  Perm invol;
  for (const auto& e : elems)
    if (e.order() == 2) {
      invol = e;
      break;
    }
  CHECK(evaluate(Word::parse("aa", 1), {invol}).is_identity());

  // commutator equals the direct computation
  for (int trial = 0; trial < 25; ++trial) {
    Perm g = elems[pick(rng)], h = elems[pick(rng)];
    Perm direct = g * h * g.inverse() * h.inverse();
    Word comm = Word::commutator(Word::generator(1, 2), Word::generator(2, 2));
    CHECK(evaluate(comm, {g, h}) == direct);
  }

  // homomorphism property on random words
  std::uniform_int_distribution<int> letter(0, 3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<int> ra, rb;
    for (int i = 0; i < 12; ++i) {
      int l = letter(rng);
      ra.push_back(l < 2 ? l + 1 : -(l - 1));
      l = letter(rng);
      rb.push_back(l < 2 ? l + 1 : -(l - 1));
    }
    Word u = Word::reduce(ra, 2), v = Word::reduce(rb, 2);
    std::vector<Perm> im{elems[pick(rng)], elems[pick(rng)]};
    CHECK(evaluate(u.concat(v), im) == evaluate(u, im) * evaluate(v, im));
  }

  // rank mismatch
  CHECK_THROWS_AS(evaluate(Word::parse("ab", 2), {invol}),
                  std::invalid_argument);
}

TEST_SUITE_END();
