#include "vrw/exact_algebra.hpp"

#include <cctype>
#include <sstream>

namespace vrw {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/' && ch != '-' &&
        ch != '+')
      throw std::invalid_argument("malformed rational literal: " + s);
  }
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Ring Ring::mod(const mpz_class& n) {
  if (n < 2) throw std::invalid_argument("modulus must be >= 2");
  return Ring(RingKind::mod_n, n);
}

Ring Ring::parse(const std::string& s) {
  if (s == "Q") return rationals();
  if (s == "Z") return integers();
  if (s.rfind("Z/", 0) == 0) {
    mpz_class n;
    if (n.set_str(s.substr(2), 10) != 0 || n < 2)
      throw std::invalid_argument("bad ring spec: " + s);
    return mod(n);
  }
  throw std::invalid_argument("bad ring spec (want Q, Z, or Z/n): " + s);
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::rationals: return "Q";
    case RingKind::integers: return "Z";
    case RingKind::mod_n: return "Z/" + modulus_.get_str();
  }
  return "?";
}

Rational Ring::canon(const Rational& v) const {
  switch (kind_) {
    case RingKind::rationals:
      return v;
    case RingKind::integers:
      if (v.get_den() != 1)
        throw std::domain_error("non-integer value in Z: " + v.get_str());
      return v;
    case RingKind::mod_n: {
      mpz_class num = v.get_num(), den = v.get_den();
      mpz_class dinv;
      if (den != 1) {
        if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t()) == 0)
          throw std::domain_error("denominator " + den.get_str() +
                                  " not invertible mod " + modulus_.get_str());
        num *= dinv;
      }
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), modulus_.get_mpz_t());
      return Rational(r);
    }
  }
  return v;
}

Rational Ring::add(const Rational& a, const Rational& b) const { return canon(a + b); }
Rational Ring::sub(const Rational& a, const Rational& b) const { return canon(a - b); }
Rational Ring::mul(const Rational& a, const Rational& b) const { return canon(a * b); }
Rational Ring::neg(const Rational& a) const { return canon(-a); }

bool Ring::is_unit(const Rational& a) const {
  Rational v = canon(a);
  switch (kind_) {
    case RingKind::rationals: return v != 0;
    case RingKind::integers: return v == 1 || v == -1;
    case RingKind::mod_n: {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), v.get_num().get_mpz_t(), modulus_.get_mpz_t());
      return g == 1;
    }
  }
  return false;
}

Rational Ring::div(const Rational& a, const Rational& b) const {
  Rational bv = canon(b);
  switch (kind_) {
    case RingKind::rationals:
      if (bv == 0) throw std::domain_error("division by zero");
      return a / bv;
    case RingKind::integers: {
      if (bv == 0) throw std::domain_error("division by zero");
      Rational q = canon(a) / bv;
      if (q.get_den() != 1)
        throw std::domain_error("inexact division in Z");
      return q;
    }
    case RingKind::mod_n: {
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), bv.get_num().get_mpz_t(),
                     modulus_.get_mpz_t()) == 0)
        throw std::domain_error(bv.get_str() + " not invertible mod " +
                                modulus_.get_str());
      return mul(a, Rational(inv));
    }
  }
  throw std::domain_error("unreachable");
}

void require_same_ring(const Ring& a, const Ring& b, const char* where) {
  if (a != b)
    throw std::invalid_argument(std::string(where) + ": ring mismatch (" +
                                a.name() + " vs " + b.name() + ")");
}

// ---------------------------------------------------------------------------
// TruncSeries

TruncSeries::TruncSeries(Ring ring, int order) : ring_(ring), order_(order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  c_.assign(order_ + 1, Rational(0));
}

TruncSeries TruncSeries::constant(Ring ring, int order, const Rational& c) {
  TruncSeries s(ring, order);
  s.c_[0] = ring.canon(c);
  return s;
}

TruncSeries TruncSeries::x(Ring ring, int order) {
  TruncSeries s(ring, order);
  if (order >= 1) s.c_[1] = ring.one();
  return s;
}

TruncSeries TruncSeries::from_coeffs(Ring ring, int order,
                                     const std::vector<Rational>& coeffs) {
  TruncSeries s(ring, order);
  for (size_t d = 0; d < coeffs.size() && d <= static_cast<size_t>(order); ++d)
    s.c_[d] = ring.canon(coeffs[d]);
  return s;
}

const Rational& TruncSeries::coeff(int d) const {
  static const Rational kZero(0);
  if (d < 0 || d > order_) return kZero;
  return c_[d];
}

TruncSeries TruncSeries::with_coeff(int d, const Rational& v) const {
  if (d < 0 || d > order_) throw std::out_of_range("coefficient degree out of range");
  TruncSeries s(*this);
  s.c_[d] = ring_.canon(v);
  return s;
}

TruncSeries TruncSeries::truncated(int new_order) const {
  TruncSeries s(ring_, new_order);
  for (int d = 0; d <= std::min(order_, new_order); ++d) s.c_[d] = c_[d];
  return s;
}

bool TruncSeries::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

TruncSeries TruncSeries::add(const TruncSeries& o) const {
  require_same_ring(ring_, o.ring_, "series add");
  TruncSeries r(ring_, std::min(order_, o.order_));
  for (int d = 0; d <= r.order_; ++d) r.c_[d] = ring_.add(c_[d], o.c_[d]);
  return r;
}

TruncSeries TruncSeries::sub(const TruncSeries& o) const {
  require_same_ring(ring_, o.ring_, "series sub");
  TruncSeries r(ring_, std::min(order_, o.order_));
  for (int d = 0; d <= r.order_; ++d) r.c_[d] = ring_.sub(c_[d], o.c_[d]);
  return r;
}

TruncSeries TruncSeries::neg() const {
  TruncSeries r(*this);
  for (auto& v : r.c_) v = ring_.neg(v);
  return r;
}

TruncSeries TruncSeries::scale(const Rational& c) const {
  TruncSeries r(*this);
  for (auto& v : r.c_) v = ring_.mul(v, c);
  return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
  if (ring_ != o.ring_) return false;
  int n = std::min(order_, o.order_);
  for (int d = 0; d <= n; ++d)
    if (c_[d] != o.c_[d]) return false;
  return true;
}

std::string TruncSeries::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= order_; ++d) {
    if (c_[d] == 0) continue;
    if (!first) os << " + ";
    os << rational_str(c_[d]);
    if (d >= 1) os << "*" << var << "^" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
  require_same_ring(a.ring(), b.ring(), "series_mul");
  int n = std::min(a.order(), b.order());
  TruncSeries r(a.ring(), n);
  for (int i = 0; i <= n; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.c_[j] == 0) continue;
      r.c_[i + j] = a.ring().add(r.c_[i + j], a.ring().mul(a.c_[i], b.c_[j]));
    }
  }
  return r;
}

TruncSeries series_compose(const TruncSeries& outer, const TruncSeries& inner) {
  require_same_ring(outer.ring(), inner.ring(), "series_compose");
  if (!inner.zero_constant_term())
    throw std::invalid_argument("series_compose: inner constant term must be zero");
  int n = std::min(outer.order(), inner.order());
  // Horner from the top coefficient down.
  TruncSeries acc = TruncSeries::constant(outer.ring(), n, outer.coeff(n));
  for (int d = n - 1; d >= 0; --d) {
    acc = series_mul(acc, inner.truncated(n));
    acc = acc.with_coeff(0, outer.ring().add(acc.coeff(0), outer.coeff(d)));
  }
  return acc;
}

TruncSeries series_invert_unit(const TruncSeries& a) {
  const Ring& k = a.ring();
  if (!k.is_unit(a.coeff(0)))
    throw std::domain_error("series_invert_unit: constant term is not a unit");
  TruncSeries r(k, a.order());
  Rational inv0 = k.div(k.one(), a.coeff(0));
  r.c_[0] = inv0;
  for (int d = 1; d <= a.order(); ++d) {
    Rational s(0);
    for (int j = 1; j <= d; ++j) s = k.add(s, k.mul(a.coeff(j), r.c_[d - j]));
    r.c_[d] = k.neg(k.mul(inv0, s));
  }
  return r;
}

TruncSeries series_pow(const TruncSeries& a, int k) {
  if (k < 0) throw std::invalid_argument("series_pow: negative exponent");
  TruncSeries r = TruncSeries::constant(a.ring(), a.order(), a.ring().one());
  for (int i = 0; i < k; ++i) r = series_mul(r, a);
  return r;
}

// ---------------------------------------------------------------------------
// BivariateSeries

BivariateSeries::BivariateSeries(Ring ring, int order)
    : ring_(ring), order_(order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  c_.assign(static_cast<size_t>(order_ + 1) * (order_ + 1), Rational(0));
}

BivariateSeries BivariateSeries::x(Ring ring, int order) {
  BivariateSeries s(ring, order);
  if (order >= 1) s.c_[s.idx(1, 0)] = ring.one();
  return s;
}

BivariateSeries BivariateSeries::y(Ring ring, int order) {
  BivariateSeries s(ring, order);
  if (order >= 1) s.c_[s.idx(0, 1)] = ring.one();
  return s;
}

BivariateSeries BivariateSeries::constant(Ring ring, int order, const Rational& c) {
  BivariateSeries s(ring, order);
  s.c_[0] = ring.canon(c);
  return s;
}

const Rational& BivariateSeries::coeff(int i, int j) const {
  static const Rational kZero(0);
  if (i < 0 || j < 0 || i + j > order_) return kZero;
  return c_[idx(i, j)];
}

BivariateSeries BivariateSeries::with_coeff(int i, int j, const Rational& v) const {
  if (i < 0 || j < 0 || i + j > order_)
    throw std::out_of_range("bivariate coefficient out of truncation range");
  BivariateSeries s(*this);
  s.c_[idx(i, j)] = ring_.canon(v);
  return s;
}

BivariateSeries BivariateSeries::truncated(int new_order) const {
  BivariateSeries s(ring_, new_order);
  for (int i = 0; i <= std::min(order_, new_order); ++i)
    for (int j = 0; i + j <= std::min(order_, new_order); ++j)
      s.c_[s.idx(i, j)] = coeff(i, j);
  return s;
}

bool BivariateSeries::is_zero() const {
  for (int i = 0; i <= order_; ++i)
    for (int j = 0; i + j <= order_; ++j)
      if (c_[idx(i, j)] != 0) return false;
  return true;
}

BivariateSeries BivariateSeries::add(const BivariateSeries& o) const {
  require_same_ring(ring_, o.ring_, "bivariate add");
  BivariateSeries r(ring_, std::min(order_, o.order_));
  for (int i = 0; i <= r.order_; ++i)
    for (int j = 0; i + j <= r.order_; ++j)
      r.c_[r.idx(i, j)] = ring_.add(coeff(i, j), o.coeff(i, j));
  return r;
}

BivariateSeries BivariateSeries::sub(const BivariateSeries& o) const {
  require_same_ring(ring_, o.ring_, "bivariate sub");
  BivariateSeries r(ring_, std::min(order_, o.order_));
  for (int i = 0; i <= r.order_; ++i)
    for (int j = 0; i + j <= r.order_; ++j)
      r.c_[r.idx(i, j)] = ring_.sub(coeff(i, j), o.coeff(i, j));
  return r;
}

BivariateSeries BivariateSeries::neg() const {
  BivariateSeries r(*this);
  for (auto& v : r.c_) v = ring_.neg(v);
  return r;
}

BivariateSeries BivariateSeries::scale(const Rational& c) const {
  BivariateSeries r(*this);
  for (auto& v : r.c_) v = ring_.mul(v, c);
  return r;
}

BivariateSeries BivariateSeries::mul(const BivariateSeries& o) const {
  require_same_ring(ring_, o.ring_, "bivariate mul");
  int n = std::min(order_, o.order_);
  BivariateSeries r(ring_, n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      const Rational& a = coeff(i, j);
      if (a == 0) continue;
      for (int p = 0; i + j + p <= n; ++p)
        for (int q = 0; i + j + p + q <= n; ++q) {
          const Rational& b = o.coeff(p, q);
          if (b == 0) continue;
          auto& slot = r.c_[r.idx(i + p, j + q)];
          slot = ring_.add(slot, ring_.mul(a, b));
        }
    }
  return r;
}

BivariateSeries BivariateSeries::pow(int k) const {
  if (k < 0) throw std::invalid_argument("bivariate pow: negative exponent");
  BivariateSeries r = constant(ring_, order_, ring_.one());
  for (int i = 0; i < k; ++i) r = r.mul(*this);
  return r;
}

BivariateSeries BivariateSeries::transposed() const {
  BivariateSeries r(ring_, order_);
  for (int i = 0; i <= order_; ++i)
    for (int j = 0; i + j <= order_; ++j) r.c_[r.idx(j, i)] = coeff(i, j);
  return r;
}

TruncSeries BivariateSeries::at_y_zero() const {
  TruncSeries r(ring_, order_);
  for (int i = 0; i <= order_; ++i) r = r.with_coeff(i, coeff(i, 0));
  return r;
}

TruncSeries BivariateSeries::at_x_zero() const {
  TruncSeries r(ring_, order_);
  for (int j = 0; j <= order_; ++j) r = r.with_coeff(j, coeff(0, j));
  return r;
}

TruncSeries BivariateSeries::substitute(const TruncSeries& a,
                                        const TruncSeries& b) const {
  require_same_ring(ring_, a.ring(), "bivariate substitute");
  require_same_ring(ring_, b.ring(), "bivariate substitute");
  if (!a.zero_constant_term() || !b.zero_constant_term())
    throw std::invalid_argument("substitute: arguments must have zero constant term");
  int n = std::min({order_, a.order(), b.order()});
  // Powers of a and b up to the truncation order.
  std::vector<TruncSeries> pa, pb;
  pa.reserve(n + 1);
  pb.reserve(n + 1);
  pa.push_back(TruncSeries::constant(ring_, n, ring_.one()));
  pb.push_back(TruncSeries::constant(ring_, n, ring_.one()));
  for (int d = 1; d <= n; ++d) {
    pa.push_back(series_mul(pa.back(), a.truncated(n)));
    pb.push_back(series_mul(pb.back(), b.truncated(n)));
  }
  TruncSeries r(ring_, n);
  for (int i = 0; i <= std::min(order_, n); ++i)
    for (int j = 0; i + j <= std::min(order_, n); ++j) {
      const Rational& cij = coeff(i, j);
      if (cij == 0) continue;
      r = r.add(series_mul(pa[i], pb[j]).scale(cij));
    }
  return r;
}

std::string BivariateSeries::str(const std::string& vx, const std::string& vy) const {
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= order_; ++d)
    for (int i = d; i >= 0; --i) {
      int j = d - i;
      const Rational& v = coeff(i, j);
      if (v == 0) continue;
      if (!first) os << " + ";
      os << rational_str(v);
      if (i) os << "*" << vx << "^" << i;
      if (j) os << "*" << vy << "^" << j;
      first = false;
    }
  if (first) os << "0";
  return os.str();
}

bool BivariateSeries::operator==(const BivariateSeries& o) const {
  if (ring_ != o.ring_) return false;
  int n = std::min(order_, o.order_);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j)
      if (coeff(i, j) != o.coeff(i, j)) return false;
  return true;
}

BivariateSeries compose_into_bivariate(const TruncSeries& outer,
                                       const BivariateSeries& inner) {
  require_same_ring(outer.ring(), inner.ring(), "compose_into_bivariate");
  if (inner.coeff(0, 0) != 0)
    throw std::invalid_argument("compose_into_bivariate: inner constant term must be zero");
  int n = std::min(outer.order(), inner.order());
  BivariateSeries acc =
      BivariateSeries::constant(outer.ring(), n, outer.coeff(n));
  for (int d = n - 1; d >= 0; --d) {
    acc = acc.mul(inner.truncated(n));
    acc = acc.with_coeff(0, 0, outer.ring().add(acc.coeff(0, 0), outer.coeff(d)));
  }
  return acc;
}

}  // namespace vrw
