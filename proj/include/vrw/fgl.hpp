#pragma once

// One-dimensional commutative formal group laws: construction, axiom
// verification, formal inverses, and the F-addition a +_F b on series with
// zero constant term.

#include "vrw/exact_algebra.hpp"

namespace vrw {

enum class BuiltinFgl { additive, multiplicative };

struct FglAxiomFailure {
  std::string axiom;           // "identity", "associativity", "commutativity"
  std::vector<int> monomial;   // exponents of the first failing monomial
  Rational lhs, rhs;
};

struct FglAxiomReport {
  bool identity_ok = false;
  bool associativity_ok = false;
  bool commutativity_ok = false;
  int order = 0;
  std::optional<FglAxiomFailure> first_failure;
  bool pass() const { return identity_ok && associativity_ok && commutativity_ok; }
};

// A formal group law F(X, Y) = X + Y + sum c_ij X^i Y^j, held to a fixed
// truncation order. Construction validates the axioms.
class FormalGroupLaw {
 public:
  // Validates the axioms to the series' order; throws std::invalid_argument
  // with the first failure if they do not hold.
  static FormalGroupLaw from_series(const BivariateSeries& body);

  const BivariateSeries& body() const { return body_; }
  const Ring& ring() const { return body_.ring(); }
  int order() const { return body_.order(); }

 private:
  explicit FormalGroupLaw(BivariateSeries body) : body_(std::move(body)) {}
  BivariateSeries body_;
  friend FormalGroupLaw builtin_fgl(BuiltinFgl, Ring, int);
  friend FormalGroupLaw fgl_from_log(const TruncSeries&);
};

// F_a = X + Y or F_m = X + Y + XY at the given order (order >= 1).
FormalGroupLaw builtin_fgl(BuiltinFgl kind, Ring ring, int order);

BuiltinFgl parse_builtin_fgl(const std::string& name);

// Checks identity, associativity (as a total-degree-truncated trivariate
// identity), and commutativity up to F.order. Failures are data, not errors.
FglAxiomReport check_fgl_axioms(const BivariateSeries& f);

// The series iota with iota(0) = 0 and F(X, iota(X)) = 0 up to order,
// solved degree by degree. Works over any coefficient ring.
TruncSeries formal_inverse(const FormalGroupLaw& f);

// a +_F b := F(a, b) for series with zero constant term.
TruncSeries f_add(const FormalGroupLaw& f, const TruncSeries& a,
                  const TruncSeries& b);

// z +_F w itself, as a bivariate series (the generators case of f_add).
BivariateSeries f_add_generators(const FormalGroupLaw& f);

// F(X,Y) = l_inv(l(X) + l(Y)) where l_inv is the compositional reversion.
// Requires a Q-algebra and a unit linear coefficient in l.
FormalGroupLaw fgl_from_log(const TruncSeries& l);

// Compositional reversion: the series m with m(l(X)) = X to truncation
// order. Requires a unit linear coefficient.
TruncSeries series_reversion(const TruncSeries& l);

}  // namespace vrw
