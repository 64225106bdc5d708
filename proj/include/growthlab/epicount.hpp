#pragma once

#include <optional>
#include <variant>

#include "growthlab/bignum.hpp"
#include "growthlab/census.hpp"
#include "growthlab/fingroup.hpp"

namespace growthlab {

enum class CountMode { Exact, Estimate };

struct EpiCount {
  SimpleGroupDescriptor group;
  int k = 0;
  BigNat gen_tuples;  // number of generating k-tuples (exact mode)
  BigNat d;           // gen_tuples / |Aut(S)|
  BigNat p_num, p_den;  // p(k,S) as a reduced fraction
  CountMode mode = CountMode::Exact;
};

// |G|^k enumeration caps for exact tuple counting; k > 3 always estimates.
constexpr uint64_t kEnumerationCap = 1000;
constexpr int kExactKMax = 3;

// Exact count of generating k-tuples by fixing the first slot on conjugacy
// class representatives (generation is conjugation-invariant) and weighting
// by class size.  Parallel over the remaining slots; non-generating closures
// are remembered as proper-subgroup bitsets so repeated tuples short-circuit.
BigNat count_generating_tuples(const ConcreteGroup& g, int k);

// Literal |G|^k sweep, serial, no caching: the independent oracle.
BigNat count_generating_tuples_naive(const ConcreteGroup& g, int k);

// d(k,S) = gen_tuples / (|S| * |Out(S)|); the division must be exact.
BigNat d_of(const ConcreteGroup& g, const SimpleGroupDescriptor& desc, int k);

// floor(|S|^{k-1} / out): the p := 1 asymptotic stand-in.
BigNat d_estimate(const SimpleGroupDescriptor& desc, int k);

// Assembles the full record (exact mode; throws CapExceeded above the cap).
EpiCount epi_count(const ConcreteGroup& g, const SimpleGroupDescriptor& desc,
                   int k);

// Builds the permutation realization of a census descriptor when possible.
std::optional<ConcreteGroup> realize(const SimpleGroupDescriptor& desc);

// Per-group factor of the free-group census product: p^k for Z/p,
// |S|^{d(k,S)} exactly, or |S|^{d_estimate} in log space.
std::variant<BigNat, LogValue> i_factor(const SimpleGroupDescriptor& desc,
                                        int k, CountMode mode);

}  // namespace growthlab
