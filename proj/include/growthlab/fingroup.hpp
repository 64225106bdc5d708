#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "growthlab/bignum.hpp"
#include "growthlab/freegroup.hpp"

namespace growthlab {

// Dense permutation of {0..degree-1}.
struct Perm {
  std::vector<uint16_t> map;

  static Perm identity(int degree);
  int degree() const { return static_cast<int>(map.size()); }
  bool is_identity() const;

  // (a * b)(x) = a(b(x)): apply b first.  Matches the convention used when
  // converting matrix actions to permutations.
  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  uint64_t order() const;  // lcm of cycle lengths

  bool operator==(const Perm& o) const = default;
};

struct PermHash {
  size_t operator()(const Perm& p) const;
};

// Breadth-first closure of a generator set.  Returns nullopt once the closure
// grows past `cap`.  All elements must share a degree.
std::optional<std::vector<Perm>> closure(const std::vector<Perm>& generators,
                                         size_t cap);

// Arithmetic in GF(p^f) for small prime powers; elements are 0..q-1.
class GaloisField {
 public:
  explicit GaloisField(int q);  // throws if q is not a prime power

  int q() const { return q_; }
  int p() const { return p_; }
  int degree() const { return f_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;
  // The generator of GF(q) over GF(p) used internally (the class of x).
  int primitive_poly_root() const { return f_ == 1 ? 1 % q_ : p_; }

 private:
  int q_, p_, f_;
  std::vector<int> add_, mul_, neg_, inv_;
};

struct ConjugacyClass {
  uint32_t representative;  // element index
  uint32_t size;
};

// Immutable finite permutation group.  Element tables, index maps,
// multiplication tables and conjugacy classes are built lazily (write-once)
// and only below the respective caps.
class ConcreteGroup {
 public:
  enum class Kind { Alternating, Symmetric, Cyclic, Dihedral, PSL, Product, Custom };

  static constexpr size_t kElementCap = 1'000'000;  // element-table cap
  static constexpr size_t kTableCap = 2048;         // multiplication-table cap

  static ConcreteGroup alternating(int m);
  static ConcreteGroup symmetric(int m);
  static ConcreteGroup cyclic(int m);
  static ConcreteGroup dihedral(int m);  // order 2m, m >= 3
  // PSL_k(q) acting on the projective space over GF(q); rejects parameters
  // where the group is not simple unless force is set.
  static ConcreteGroup psl(int k, int q, bool force = false);
  static ConcreteGroup direct_product(const ConcreteGroup& a,
                                      const ConcreteGroup& b);
  static ConcreteGroup from_generators(std::string name,
                                       std::vector<Perm> generators);

  Kind kind() const;
  const std::string& name() const;
  int degree() const;
  const std::vector<Perm>& generators() const;
  const BigNat& order() const;  // classical formula for named kinds

  bool elements_available() const;       // order <= kElementCap
  const std::vector<Perm>& elements() const;
  uint32_t element_index(const Perm& p) const;
  uint32_t identity_index() const;

  bool mult_table_available() const;
  // Index arithmetic; falls back to composing permutations when no table.
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inverse_of(uint32_t a) const;

  uint64_t element_order(uint32_t idx) const;
  BigNat exponent() const;  // lcm of element orders; needs the element table

  const std::vector<ConjugacyClass>& conjugacy_classes() const;
  uint32_t class_count() const { return static_cast<uint32_t>(conjugacy_classes().size()); }

  struct Data;  // implementation detail, defined in fingroup.cpp

 private:
  std::shared_ptr<Data> d_;
  explicit ConcreteGroup(std::shared_ptr<Data> d) : d_(std::move(d)) {}
};

// True iff the tuple generates the whole group.
bool is_generating(const std::vector<Perm>& tuple, const ConcreteGroup& g);

// Image of w under the homomorphism x_i -> images[i-1].
Perm evaluate(const Word& w, const std::vector<Perm>& images);

}  // namespace growthlab
