#pragma once

// Pierce-theoretic analysis of finite commutative rings: idempotents, the
// Boolean ring B(k) with e (+) f = e + f - 2ef, atoms of its spectrum,
// stalks k/P-bar, and the local / von Neumann regular / exchange predicates
// with Monk's equivalence as an executable check.

#include <cstdint>
#include <string>
#include <vector>

namespace vrw {

// A finite commutative unital ring with enumerable elements 0..size-1.
// Presentations: Z/n, a finite product of Z/n_i, or an explicit table ring.
class FiniteRing {
 public:
  static FiniteRing zn(unsigned long n);
  static FiniteRing product(const std::vector<unsigned long>& moduli);
  // Tables are validated at construction: commutativity, identities,
  // additive inverses, and associativity/distributivity (exhaustive up to
  // size 128, deterministically sampled beyond).
  static FiniteRing from_tables(const std::vector<std::vector<unsigned long>>& add,
                                const std::vector<std::vector<unsigned long>>& mul);
  static constexpr size_t kMaxTableSize = 4096;

  size_t size() const { return size_; }
  size_t zero() const { return zero_; }
  size_t one() const { return one_; }
  size_t add(size_t a, size_t b) const;
  size_t mul(size_t a, size_t b) const;
  size_t neg(size_t a) const;
  size_t sub(size_t a, size_t b) const { return add(a, neg(b)); }

  bool is_unit_element(size_t a) const;
  std::string name() const;
  std::string element_str(size_t a) const;

 private:
  enum class Kind { zn, product, table };
  FiniteRing() = default;
  void decode(size_t a, std::vector<unsigned long>& out) const;
  size_t encode(const std::vector<unsigned long>& t) const;

  Kind kind_ = Kind::zn;
  size_t size_ = 0, zero_ = 0, one_ = 0;
  unsigned long n_ = 0;                    // zn
  std::vector<unsigned long> moduli_;      // product
  std::vector<uint16_t> add_t_, mul_t_;    // table
};

// All e with e*e = e, ascending.
std::vector<size_t> idempotents(const FiniteRing& r);

// The Boolean ring on idempotents(r): meet = ring product, sum = e+f-2ef.
// Axioms are verified at construction (exhaustively for <= 128 elements,
// sampled beyond).
class BooleanRing {
 public:
  explicit BooleanRing(const FiniteRing& r);

  // Parent element ids of the Boolean elements, ascending.
  const std::vector<size_t>& elements() const { return elems_; }
  size_t count() const { return elems_.size(); }
  // Operations on indices into elements().
  size_t xor_op(size_t i, size_t j) const { return xor_[i * count() + j]; }
  size_t meet_op(size_t i, size_t j) const { return meet_[i * count() + j]; }
  size_t zero_index() const { return zero_i_; }
  size_t one_index() const { return one_i_; }
  // Indices of the minimal nonzero idempotents.
  const std::vector<size_t>& atom_indices() const { return atoms_; }
  bool axioms_verified() const { return verified_; }

 private:
  std::vector<size_t> elems_;
  std::vector<size_t> xor_, meet_;
  std::vector<size_t> atoms_;
  size_t zero_i_ = 0, one_i_ = 0;
  bool verified_ = false;
};

BooleanRing boolean_ring(const FiniteRing& r);

struct PierceStalk {
  size_t atom;                      // parent element id of the atom
  std::vector<size_t> ideal;        // P-bar = (1 - atom) k, parent ids
  FiniteRing ring;                  // the quotient k / P-bar
  std::vector<size_t> projection;   // parent element -> stalk element
  std::string description;          // "Z/m" when the stalk is cyclic
};

struct PierceBundle {
  BooleanRing boolean;
  std::vector<PierceStalk> stalks;
  bool section_map_is_isomorphism = false;
};

// Base points from the atoms of B(r); stalks as quotients; the section map
// k -> prod stalks checked to be a ring isomorphism.
PierceBundle pierce_decompose(const FiniteRing& r);

// True iff the non-units form an ideal (unique maximal ideal).
bool is_local(const FiniteRing& r);

// True iff every principal ideal aR equals eR for an idempotent e.
bool is_von_neumann_regular(const FiniteRing& r);

// True iff every element is idempotent + unit (exhaustive search).
bool is_exchange(const FiniteRing& r);

struct MonkVerdict {
  bool exchange_check = false;
  bool all_stalks_local = false;
  bool agree = false;
};

// Runs is_exchange against "every Pierce stalk is local" and reports both.
MonkVerdict monk_verdict(const FiniteRing& r);

// Distinct prime factor count (for the 2^omega(n) idempotent-count check).
int distinct_prime_factors(unsigned long n);

}  // namespace vrw
