#pragma once

#include <optional>
#include <string>
#include <vector>

#include "growthlab/bignum.hpp"

namespace growthlab {

// Infinite families of finite simple groups plus the sporadic bucket.
enum class Family {
  Cyclic,       // Z/p
  Alternating,  // A_m, m >= 5
  PSL,          // PSL_m(q), m >= 2
  B,            // B_m(q) = O_{2m+1}(q), m >= 2 (m = 2 covers C_2)
  C,            // C_m(q) = PSp_{2m}(q), m >= 3
  D,            // D_m(q), m >= 4
  TwoA,         // 2A_m(q^2) = PSU_{m+1}(q), m >= 2
  TwoD,         // 2D_m(q^2), m >= 4
  E6,
  E7,
  E8,
  F4,
  G2,
  TwoE6,
  ThreeD4,
  TwoB2,  // Suzuki, q = 2^{2k+1} >= 8
  TwoG2,  // Ree, q = 3^{2k+1} >= 27
  TwoF4,  // Ree, q = 2^{2k+1} >= 8
  Sporadic,
};

const char* family_tag(Family f);
std::optional<Family> family_from_tag(const std::string& tag);
bool family_is_lie(Family f);
// Rows of the classification table carrying both a rank and a field size.
bool two_param_family(Family f);
// Order of the group as a polynomial in q: |G(q)| ~ q^dim.  The exponent
// doubles as the Lie dimension in the growth-rate statements.
int family_dimension(Family f, long long m = 0);

struct SimpleGroupDescriptor {
  Family family;
  long long m = 0;  // rank parameter or alternating degree; sporadic table row
  long long q = 0;  // field size (0 where not applicable)
  std::string name;
  BigNat order;
  std::optional<int> out_order;       // |Out(S)|; set for alternating and PSL
  std::optional<BigNat> min_index;    // least index of a maximal subgroup
  bool min_index_approx = false;      // true when taken from the leading-term table
  bool constructible = false;         // a permutation realization fits the cap

  bool abelian() const { return family == Family::Cyclic; }
};

struct CensusSlice {
  BigNat bound;
  std::vector<SimpleGroupDescriptor> entries;  // sorted by order, then name
};

// Exact classical order of the family member; throws on parameters outside
// the family's simple range.
BigNat order_of(Family f, long long m, long long q);

// Every isomorphism class of finite simple group of order <= bound, once.
// Exceptional isomorphisms are deduplicated (canonical representative:
// alternating over PSL over the rest; within PSL, the smaller rank).
CensusSlice enumerate_simple(const BigNat& bound, bool include_abelian,
                             bool include_sporadic);

// Every nonabelian entry whose least maximal-subgroup index is <= bound
// (table values for the flagged families).  Sporadic groups carry no index
// column and are omitted.  Orders here grow factorially, so the slice is
// sorted by min_index instead.
CensusSlice enumerate_simple_by_min_index(uint64_t bound);

// Least index of a maximal subgroup.  Exact for alternating and PSL
// (including the classical small-q exceptions); the leading-order table value
// with the approx flag for other Lie families; unavailable for sporadics.
std::optional<BigNat> min_max_subgroup_index(const SimpleGroupDescriptor& d,
                                             bool* approx = nullptr);

// |Out(S)| for alternating and PSL; nullopt for everything else.
std::optional<int> out_order_of(Family f, long long m, long long q);

// Builds a single descriptor (with dedup canonicalization applied).
SimpleGroupDescriptor describe(Family f, long long m, long long q);

std::string census_to_json(const CensusSlice& slice);

}  // namespace growthlab
