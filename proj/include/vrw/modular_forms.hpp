#pragma once

// Exact q-expansions with a rational leading exponent and integer-step tail:
// Eisenstein series, eta powers, Delta, j, and the modular (Serre)
// derivative D_k = q d/dq - (k/12) E_2.

#include <complex>

#include "vrw/exact_algebra.hpp"

namespace vrw {

// q^x * (a_0 + a_1 q + ... + a_N q^N) with exact rational x and a_n.
// Canonical form: a_0 != 0 unless identically zero.
class QExpansion {
 public:
  // The zero expansion, known through q^known_order.
  static QExpansion zero(int known_order);
  static QExpansion constant(const Rational& c, int order);
  // q^x * (tail), tail given from a_0 up.
  static QExpansion make(const Rational& leading_exponent,
                         std::vector<Rational> tail);

  const Rational& leading_exponent() const { return x_; }
  // Number of tail terms beyond a_0.
  int order() const { return static_cast<int>(a_.size()) - 1; }
  // Largest exponent whose coefficient is known: x + order.
  Rational known_through() const { return x_ + order(); }
  // a_n (relative index); zero outside the stored range.
  const Rational& coeff(int n) const;
  // Coefficient of q^e; throws if e is below the known range is fine to be
  // zero, but above the known range it is unknown and throws.
  Rational coeff_at(const Rational& e) const;
  bool is_zero() const;

  std::optional<int> weight() const { return weight_; }
  QExpansion with_weight(std::optional<int> w) const;
  bool quasimodular() const { return quasimodular_; }
  QExpansion with_quasimodular(bool q) const;

  QExpansion add(const QExpansion& o) const;
  QExpansion sub(const QExpansion& o) const;
  QExpansion neg() const;
  QExpansion scale(const Rational& c) const;
  QExpansion mul(const QExpansion& o) const;
  // Requires a_0 != 0.
  QExpansion invert() const;
  // Integer powers, negative allowed (via invert).
  QExpansion pow(int r) const;
  // q d/dq: multiplies a_n by (x + n).
  QExpansion q_derivative() const;
  // Keep only tail terms a_0..a_n.
  QExpansion truncated(int n) const;
  // Substitute q = u^k: the same expansion viewed in the variable u.
  QExpansion stretched(int k) const;

  std::string str() const;
  // Equality on the overlapping known range (and equal leading exponents
  // unless both zero).
  bool operator==(const QExpansion& o) const;
  bool operator!=(const QExpansion& o) const { return !(*this == o); }

  // Default-constructed: the zero expansion known through q^0.
  QExpansion() = default;

 private:
  void canonicalize();
  Rational x_ = Rational(0);
  std::vector<Rational> a_ = {Rational(0)};
  std::optional<int> weight_;
  bool quasimodular_ = false;
};

// Normalized Eisenstein series E_2, E_4, E_6 to q^N (weight tag set;
// E_2 carries the quasimodular flag).
QExpansion eisenstein(int k, int n_terms);

// eta(tau)^r = q^{r/24} prod (1-q^n)^r, any integer r.
QExpansion eta_power(int r, int n_terms);

// Delta = (E_4^3 - E_6^2)/1728, weight 12, leading exponent 1.
QExpansion delta_cusp_form(int n_terms);

// j = E_4^3 / Delta, with coefficients through q^N (N >= -1).
QExpansion j_invariant(int n_terms);

// D_k f = q df/dq - (k/12) E_2 f; weight tag becomes k + 2.
QExpansion serre_derivative(const QExpansion& f, int k);

// D_0^n = D_{2n-2} o ... o D_2 o D_0.
QExpansion iterate_D0(const QExpansion& f, int n);

struct EvalResult {
  std::complex<double> value;
  // |a_N| |q|^{N+1} / (1-|q|), reported only when the trailing coefficient
  // magnitudes look monotone; a heuristic, not a guarantee.
  std::optional<double> tail_bound;
};

// Partial sum at q = e^{2 pi i tau}, Im(tau) > 0, using tail terms a_0..a_terms.
EvalResult evaluate(const QExpansion& f, std::complex<double> tau, int terms);

}  // namespace vrw
