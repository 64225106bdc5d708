#include "growthlab/freegroup.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace growthlab {

namespace {

// Letter ordering used for lexicographic enumeration:
// x1 < x1^-1 < x2 < x2^-1 < ...
int16_t ordinal_to_letter(int ord) {
  int gen = ord / 2 + 1;
  return static_cast<int16_t>(ord % 2 == 0 ? gen : -gen);
}

}  // namespace

Word Word::reduce(std::span<const int> letters, int rank) {
  if (rank < 1) throw std::invalid_argument("Word: rank >= 1 required");
  Word w(rank);
  for (int l : letters) {
    if (l == 0 || l > rank || l < -rank)
      throw std::out_of_range("Word: letter index out of range");
    if (!w.letters_.empty() && w.letters_.back() == -l)
      w.letters_.pop_back();
    else
      w.letters_.push_back(static_cast<int16_t>(l));
  }
  return w;
}

Word Word::inverse() const {
  Word w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(static_cast<int16_t>(-*it));
  return w;
}

Word Word::concat(const Word& other) const {
  if (rank_ != other.rank_) throw std::invalid_argument("Word: rank mismatch");
  Word w(rank_);
  w.letters_ = letters_;
  for (int16_t l : other.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == -l)
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

Word Word::pow(long e) const {
  Word base = e < 0 ? inverse() : *this;
  long reps = e < 0 ? -e : e;
  Word acc(rank_);
  for (long i = 0; i < reps; ++i) acc = acc.concat(base);
  return acc;
}

Word Word::commutator(const Word& u, const Word& v) {
  return u.concat(v).concat(u.inverse()).concat(v.inverse());
}

Word Word::generator(int i, int rank) {
  int letters[1] = {i};
  return reduce(letters, rank);
}

std::vector<long long> Word::exponent_sums() const {
  std::vector<long long> sums(rank_, 0);
  for (int16_t l : letters_) sums[std::abs(l) - 1] += l > 0 ? 1 : -1;
  return sums;
}

std::string Word::text() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  if (rank_ <= 26) {
    for (int16_t l : letters_) {
      char c = static_cast<char>('a' + std::abs(l) - 1);
      os << (l > 0 ? c : static_cast<char>(std::toupper(c)));
    }
  } else {
    bool first = true;
    for (int16_t l : letters_) {
      if (!first) os << ' ';
      os << (l > 0 ? 'x' : 'X') << std::abs(l);
      first = false;
    }
  }
  return os.str();
}

Word Word::parse(const std::string& text, int rank) {
  std::vector<int> letters;
  if (text == "1" || text.empty()) return reduce(letters, rank);
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if ((c == 'x' || c == 'X') && i + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      size_t j = i + 1;
      int idx = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        idx = idx * 10 + (text[j++] - '0');
      letters.push_back(c == 'x' ? idx : -idx);
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      int idx = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
      letters.push_back(std::islower(static_cast<unsigned char>(c)) ? idx : -idx);
      ++i;
    } else {
      throw std::invalid_argument("Word::parse: bad character");
    }
  }
  return reduce(letters, rank);
}

BigNat ball_size(int k, int t) {
  if (k < 1 || t < 0) throw std::invalid_argument("ball_size: k >= 1, t >= 0");
  if (k == 1) return BigNat(2 * static_cast<long long>(t) + 1);
  // 1 + 2k ((2k-1)^t - 1) / (2k - 2)
  BigNat base = 2 * k - 1;
  BigNat powed = 1;
  for (int i = 0; i < t; ++i) powed *= base;
  return 1 + BigNat(2 * k) * (powed - 1) / BigNat(2 * k - 2);
}

BallEnumerator::BallEnumerator(int k, int t) : k_(k), t_(t) {
  if (k < 1 || t < 0)
    throw std::invalid_argument("BallEnumerator: k >= 1, t >= 0");
}

void BallEnumerator::reset() {
  at_start_ = true;
  cur_.clear();
}

// Odometer over reduced words: next word of the same length in
// letter-ordinal order, rolling over to the first word of length + 1.
bool BallEnumerator::advance() {
  int max_ord = 2 * k_ - 1;
  size_t len = cur_.size();
  auto fill_smallest = [&](size_t target) {
    while (cur_.size() < target) {
      int16_t last = cur_.empty() ? int16_t{0} : cur_.back();
      for (int o = 0; o <= max_ord; ++o) {
        int16_t cand = ordinal_to_letter(o);
        if (last == 0 || cand != -last) {
          cur_.push_back(cand);
          break;
        }
      }
    }
  };
  while (!cur_.empty()) {
    int16_t prev = cur_.size() >= 2 ? cur_[cur_.size() - 2] : int16_t{0};
    int ord = (std::abs(cur_.back()) - 1) * 2 + (cur_.back() < 0 ? 1 : 0);
    for (int o = ord + 1; o <= max_ord; ++o) {
      int16_t cand = ordinal_to_letter(o);
      if (prev != 0 && cand == -prev) continue;  // keep reduced
      cur_.back() = cand;
      fill_smallest(len);
      return true;
    }
    cur_.pop_back();
  }
  if (static_cast<int>(len) + 1 > t_) return false;
  fill_smallest(len + 1);
  return true;
}

bool BallEnumerator::next(Word& out) {
  if (at_start_) {
    at_start_ = false;
    cur_.clear();
    out = Word(k_);
    return true;  // empty word
  }
  if (!advance()) return false;
  std::vector<int> letters(cur_.begin(), cur_.end());
  out = Word::reduce(letters, k_);
  return true;
}

std::vector<Word> enumerate_ball(int k, int t) {
  std::vector<Word> out;
  BallEnumerator e(k, t);
  Word w;
  while (e.next(w)) out.push_back(w);
  return out;
}

}  // namespace growthlab
