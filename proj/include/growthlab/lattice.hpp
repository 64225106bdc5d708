#pragma once

#include <cstdint>
#include <vector>

#include "growthlab/bignum.hpp"
#include "growthlab/fingroup.hpp"

namespace growthlab {

// Finite-index sublattice of Z^k in canonical form: basis vectors are the
// rows of an upper-triangular matrix with positive diagonal, and every entry
// above a diagonal d_j is reduced modulo d_j.  The form is unique per
// sublattice; the determinant is the index.
struct Lattice {
  int rank = 0;
  std::vector<BigNat> basis;  // row-major rank x rank

  static Lattice full(int rank);
  static Lattice from_rows(int rank, std::vector<BigNat> rows);  // canonicalizes

  BigNat& at(int i, int j) { return basis[i * rank + j]; }
  const BigNat& at(int i, int j) const { return basis[i * rank + j]; }
  BigNat index() const;  // product of the diagonal
  bool contains(const std::vector<BigNat>& v) const;

  bool operator==(const Lattice& o) const = default;
};

// All sublattices of Z^k of index exactly m, canonical form, k in {1,2,3}.
std::vector<Lattice> enumerate_sublattices(int k, uint64_t m);

Lattice intersect_lattices(const Lattice& a, const Lattice& b);

// Intersection of every sublattice of index <= n; equals lcm(1..n) Z^k.
// Budgets: k = 1 up to n = 10^4, k = 2 up to n = 30.
Lattice brute_lambda_zk(uint64_t n, int k);

// The order-8 matrix group <[[0,-1],[1,0]], [[0,1],[1,0]]> acting on Z^2.
struct QInvariantLattice {
  uint64_t d1, d2, b;  // rows (d1, b; 0, d2)
  uint64_t index;      // d1 * d2
};

struct QInvariantResult {
  Lattice inner;   // I(floor(n/8))
  Lattice outer;   // I(n)
  std::vector<QInvariantLattice> found;  // all invariant sublattices, index <= n
};

// Enumerates every sublattice of Z^2 of index <= n and filters for
// Q-invariance; folds the invariant ones into I(floor(n/8)) and I(n).
QInvariantResult q_invariant_lambda(uint64_t n);

// Serial reference scan (no OpenMP), for testing the parallel kernel.
std::vector<QInvariantLattice> q_invariant_scan_serial(uint64_t n);
std::vector<QInvariantLattice> q_invariant_scan(uint64_t n);

// Intersection of the invariant lattices of index <= m from a scan result.
Lattice fold_q_invariant(const std::vector<QInvariantLattice>& found, uint64_t m);

// ---------------------------------------------------------------------------
// Finite-group ground truth

enum class SubgroupClass { All, Normal, Max, MaxNormal };

struct SubgroupSet {
  std::vector<uint64_t> bits;  // one bit per element index of the parent
  uint64_t size = 0;
  BigNat index;
  bool normal = false;
  bool maximal = false;
  bool maximal_normal = false;

  bool test(uint32_t i) const { return bits[i >> 6] >> (i & 63) & 1; }
};

// Every subgroup of G of index <= n, found by cyclic-extension sweep.
// Requires |G| <= 400.
std::vector<SubgroupSet> brute_subgroups(const ConcreteGroup& g, uint64_t n);

// Index of the intersection of all subgroups of index <= n in the class.
BigNat brute_ig(const ConcreteGroup& g, uint64_t n, SubgroupClass flavor);

// Same, over an already-computed sweep (one sweep serves every n).
BigNat brute_ig_from(const std::vector<SubgroupSet>& subs,
                     const BigNat& group_order, uint64_t n,
                     SubgroupClass flavor);

}  // namespace growthlab
