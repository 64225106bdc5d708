#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "growthlab/bignum.hpp"

namespace growthlab {

// Freely reduced word in the rank-k free group.  Letters are signed
// generator indices: +i is the i-th generator, -i its inverse (1-based).
class Word {
 public:
  Word() = default;
  explicit Word(int rank) : rank_(rank) {}

  // Reduces an arbitrary letter sequence; throws on an out-of-range index.
  static Word reduce(std::span<const int> letters, int rank);

  int rank() const { return rank_; }
  const std::vector<int16_t>& letters() const { return letters_; }
  size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word concat(const Word& other) const;  // reduced concatenation
  Word pow(long e) const;

  std::vector<long long> exponent_sums() const;

  bool operator==(const Word& o) const = default;

  // `a b A B` style for rank <= 26 (uppercase = inverse), `x3 X3` tokens
  // above that.
  std::string text() const;
  static Word parse(const std::string& text, int rank);

  // Commutator convenience: [u, v] = u v u^-1 v^-1, reduced.
  static Word commutator(const Word& u, const Word& v);
  static Word generator(int i, int rank);

 private:
  std::vector<int16_t> letters_;
  int rank_ = 0;
};

// Number of reduced words of length <= t in rank k.
BigNat ball_size(int k, int t);

// Streams every reduced word of length <= t exactly once, shortest first and
// lexicographic within a length (x1 < x1^-1 < x2 < x2^-1 < ...).  Restartable.
class BallEnumerator {
 public:
  BallEnumerator(int k, int t);

  // Returns false when the stream is exhausted.
  bool next(Word& out);
  void reset();

 private:
  int k_, t_;
  bool at_start_ = true;
  std::vector<int16_t> cur_;  // current letter sequence (already reduced)

  bool advance();
};

// Collects the ball into a vector; intended for small radii.
std::vector<Word> enumerate_ball(int k, int t);

}  // namespace growthlab
