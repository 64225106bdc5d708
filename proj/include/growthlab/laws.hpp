#pragma once

#include <optional>
#include <string>
#include <vector>

#include "growthlab/bignum.hpp"
#include "growthlab/census.hpp"
#include "growthlab/fingroup.hpp"
#include "growthlab/freegroup.hpp"
#include "growthlab/growth.hpp"

namespace growthlab {

struct LawCertificate {
  Word word;
  uint64_t n = 0;                    // the order bound the law covers
  std::vector<std::string> groups;   // nonabelian groups verified by evaluation
  size_t length = 0;
  std::string method;                // "commutator" | "bfs-search"
  // abelian quotients are covered symbolically when true
  bool zero_exponent_sums = false;
};

std::string law_to_json(const LawCertificate& c);

// lcm of exponent(S) over the constructible nonabelian simple S of order <= n.
// Throws Unsupported if the census holds a nonconstructible nonabelian entry.
BigNat census_exponent(uint64_t n);

// True iff w evaluates to the identity on every tuple from G.  The first slot
// runs over conjugacy class representatives only (evaluation commutes with
// simultaneous conjugation); remaining slots are exhaustive.  OpenMP kernel.
bool is_law(const Word& w, const ConcreteGroup& g);

// Fully exhaustive serial sweep, kept as the reference implementation.
bool is_law_naive(const Word& w, const ConcreteGroup& g);

// [x^e, y^e] with e = census_exponent(n); verified on every constructible
// nonabelian simple group of order <= n, and on all Z/p by the
// zero-exponent-sum argument.
LawCertificate commutator_law(uint64_t n);

// Shortest nontrivial zero-exponent-sum word (canonical enumeration order)
// that is a law in every listed group; nullopt when none exists within the
// radius.
std::optional<LawCertificate> bfs_shortest_law(
    const std::vector<ConcreteGroup>& groups, int max_radius);

struct DepthBound {
  uint64_t n = 0;
  GrowthValue i_value;
  uint64_t f_n = 0;        // least t with ball_size(2, t) >= i(n)
  uint64_t length_bound = 0;  // 2 f(n): some word of this length has depth > n
  bool degenerate = false;    // i(n) = 1 carries no information
};

// Turns an intersection-growth value at n into a residual-finiteness-growth
// lower bound: a word of length <= 2 f(n) whose depth exceeds n.
DepthBound rf_lower_bound(uint64_t n, const GrowthValue& i_at_n);

std::string depth_bound_to_json(const DepthBound& d);

}  // namespace growthlab
