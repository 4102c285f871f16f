#pragma once

// Exact coefficient rings and truncated formal power series in one and
// two variables. Everything here is integer/rational arithmetic via GMP;
// no floating point.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vrw {

using Rational = mpq_class;

// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

// Canonical "p" or "p/q" rendering (no decimals).
std::string rational_str(const Rational& r);

// num/den in lowest terms. The two-argument mpq_class constructor does not
// canonicalize, which silently breaks mpq equality; always build fractions
// through here.
inline Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

mpz_class binomial(unsigned long n, unsigned long k);

enum class RingKind { rationals, integers, mod_n };

// A scalar ring: Q, Z, or Z/n. Elements are carried as mpq_class values;
// for Z and Z/n the canonical form has denominator 1, and mod-n values lie
// in [0, n).
class Ring {
 public:
  static Ring rationals() { return Ring(RingKind::rationals, 0); }
  static Ring integers() { return Ring(RingKind::integers, 0); }
  static Ring mod(const mpz_class& n);
  // Parses "Q", "Z", or "Z/n".
  static Ring parse(const std::string& s);

  RingKind kind() const { return kind_; }
  const mpz_class& modulus() const { return modulus_; }
  bool operator==(const Ring& o) const {
    return kind_ == o.kind_ && modulus_ == o.modulus_;
  }
  bool operator!=(const Ring& o) const { return !(*this == o); }

  bool is_q_algebra() const { return kind_ == RingKind::rationals; }
  std::string name() const;

  // Reduces a value to canonical form. For mod-n inputs with a denominator,
  // the denominator is inverted mod n (it must be a unit).
  Rational canon(const Rational& v) const;

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  // Division by a unit; throws std::domain_error otherwise.
  Rational div(const Rational& a, const Rational& b) const;
  bool is_unit(const Rational& a) const;
  bool is_zero(const Rational& a) const { return canon(a) == 0; }

  Rational zero() const { return Rational(0); }
  Rational one() const { return canon(Rational(1)); }
  Rational from_long(long v) const { return canon(Rational(v)); }

 private:
  Ring(RingKind k, const mpz_class& n) : kind_(k), modulus_(n) {}
  RingKind kind_;
  mpz_class modulus_;
};

void require_same_ring(const Ring& a, const Ring& b, const char* where);

// Truncated univariate power series over a Ring: terms of degree > order
// are discarded. Immutable value type; all operations are pure.
class TruncSeries {
 public:
  TruncSeries(Ring ring, int order);
  static TruncSeries zero(Ring ring, int order) { return TruncSeries(ring, order); }
  static TruncSeries constant(Ring ring, int order, const Rational& c);
  static TruncSeries x(Ring ring, int order);
  static TruncSeries from_coeffs(Ring ring, int order,
                                 const std::vector<Rational>& coeffs);

  const Ring& ring() const { return ring_; }
  int order() const { return order_; }
  // Coefficient of X^d; zero for d > order.
  const Rational& coeff(int d) const;
  TruncSeries with_coeff(int d, const Rational& v) const;
  TruncSeries truncated(int new_order) const;

  bool is_zero() const;
  bool zero_constant_term() const { return ring_.is_zero(coeff(0)); }

  TruncSeries add(const TruncSeries& o) const;
  TruncSeries sub(const TruncSeries& o) const;
  TruncSeries neg() const;
  TruncSeries scale(const Rational& c) const;
  std::string str(const std::string& var = "X") const;

  // Equality = coefficients agree at every degree <= min(orders).
  bool operator==(const TruncSeries& o) const;
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }

 private:
  Ring ring_;
  int order_;
  std::vector<Rational> c_;  // size order_+1, canonical values
  friend TruncSeries series_mul(const TruncSeries&, const TruncSeries&);
  friend TruncSeries series_compose(const TruncSeries&, const TruncSeries&);
  friend TruncSeries series_invert_unit(const TruncSeries&);
};

// Truncated Cauchy product at order min(a.order, b.order).
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

// outer(inner(X)); inner must have zero constant term.
TruncSeries series_compose(const TruncSeries& outer, const TruncSeries& inner);

// Multiplicative inverse; constant term must be a unit.
TruncSeries series_invert_unit(const TruncSeries& a);

// a^k for k >= 0.
TruncSeries series_pow(const TruncSeries& a, int k);

// Truncated bivariate power series; truncation is by total degree
// (monomials X^i Y^j with i + j > order are discarded).
class BivariateSeries {
 public:
  BivariateSeries(Ring ring, int order);
  static BivariateSeries zero(Ring ring, int order) { return BivariateSeries(ring, order); }
  static BivariateSeries x(Ring ring, int order);
  static BivariateSeries y(Ring ring, int order);
  static BivariateSeries constant(Ring ring, int order, const Rational& c);

  const Ring& ring() const { return ring_; }
  int order() const { return order_; }
  const Rational& coeff(int i, int j) const;
  BivariateSeries with_coeff(int i, int j, const Rational& v) const;
  BivariateSeries truncated(int new_order) const;

  bool is_zero() const;
  BivariateSeries add(const BivariateSeries& o) const;
  BivariateSeries sub(const BivariateSeries& o) const;
  BivariateSeries neg() const;
  BivariateSeries scale(const Rational& c) const;
  BivariateSeries mul(const BivariateSeries& o) const;
  BivariateSeries pow(int k) const;

  // Swap the roles of X and Y.
  BivariateSeries transposed() const;
  // Set Y = 0 (or X = 0), leaving a univariate series.
  TruncSeries at_y_zero() const;
  TruncSeries at_x_zero() const;

  // F(a(X), b(X)) for univariate a, b with zero constant term.
  TruncSeries substitute(const TruncSeries& a, const TruncSeries& b) const;

  std::string str(const std::string& vx = "X", const std::string& vy = "Y") const;

  bool operator==(const BivariateSeries& o) const;
  bool operator!=(const BivariateSeries& o) const { return !(*this == o); }

 private:
  int idx(int i, int j) const { return i * (order_ + 1) + j; }
  Ring ring_;
  int order_;
  std::vector<Rational> c_;  // (order+1)^2 slots, only i+j<=order used
};

// Univariate composition of outer into a bivariate inner series with zero
// constant term: outer(inner(X, Y)).
BivariateSeries compose_into_bivariate(const TruncSeries& outer,
                                       const BivariateSeries& inner);

}  // namespace vrw
