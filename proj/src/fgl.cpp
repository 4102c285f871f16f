#include "vrw/fgl.hpp"

#include <sstream>

namespace vrw {

namespace {

// Dense trivariate series truncated by total degree; just enough support
// for the associativity check.
class Tri {
 public:
  Tri(Ring ring, int order) : ring_(ring), order_(order) {
    c_.assign(static_cast<size_t>(order + 1) * (order + 1) * (order + 1),
              Rational(0));
  }
  static Tri var(Ring ring, int order, int which) {
    Tri t(ring, order);
    if (order >= 1) {
      int e[3] = {0, 0, 0};
      e[which] = 1;
      t.at(e[0], e[1], e[2]) = ring.one();
    }
    return t;
  }
  Rational& at(int i, int j, int k) {
    return c_[(static_cast<size_t>(i) * (order_ + 1) + j) * (order_ + 1) + k];
  }
  const Rational& at(int i, int j, int k) const {
    return c_[(static_cast<size_t>(i) * (order_ + 1) + j) * (order_ + 1) + k];
  }
  int order() const { return order_; }

  Tri mul(const Tri& o) const {
    Tri r(ring_, order_);
    for (int i = 0; i <= order_; ++i)
      for (int j = 0; i + j <= order_; ++j)
        for (int k = 0; i + j + k <= order_; ++k) {
          const Rational& a = at(i, j, k);
          if (a == 0) continue;
          int rem = order_ - i - j - k;
          for (int p = 0; p <= rem; ++p)
            for (int q = 0; p + q <= rem; ++q)
              for (int s = 0; p + q + s <= rem; ++s) {
                const Rational& b = o.at(p, q, s);
                if (b == 0) continue;
                Rational& slot = r.at(i + p, j + q, k + s);
                slot = ring_.add(slot, ring_.mul(a, b));
              }
        }
    return r;
  }
  Tri add_scaled(const Tri& o, const Rational& c) const {
    Tri r(*this);
    for (int i = 0; i <= order_; ++i)
      for (int j = 0; i + j <= order_; ++j)
        for (int k = 0; i + j + k <= order_; ++k) {
          const Rational& b = o.at(i, j, k);
          if (b == 0) continue;
          r.at(i, j, k) = ring_.add(r.at(i, j, k), ring_.mul(b, c));
        }
    return r;
  }

 private:
  Ring ring_;
  int order_;
  std::vector<Rational> c_;
};

// F(U, V) for trivariate U, V with zero constant term.
Tri eval_bivariate(const BivariateSeries& f, const Tri& u, const Tri& v) {
  Ring k = f.ring();
  int n = f.order();
  std::vector<Tri> vpow;
  vpow.reserve(n + 1);
  Tri one(k, n);
  one.at(0, 0, 0) = k.one();
  vpow.push_back(one);
  for (int d = 1; d <= n; ++d) vpow.push_back(vpow.back().mul(v));
  // Horner in U: ((c_n(V)) U + c_{n-1}(V)) U + ...
  Tri acc(k, n);
  for (int i = n; i >= 0; --i) {
    if (i < n) acc = acc.mul(u);
    for (int j = 0; i + j <= n; ++j) {
      const Rational& cij = f.coeff(i, j);
      if (cij == 0) continue;
      acc = acc.add_scaled(vpow[j], cij);
    }
  }
  return acc;
}

}  // namespace

FormalGroupLaw builtin_fgl(BuiltinFgl kind, Ring ring, int order) {
  if (order < 1) throw std::invalid_argument("builtin_fgl: order must be >= 1");
  BivariateSeries f(ring, order);
  f = f.with_coeff(1, 0, ring.one()).with_coeff(0, 1, ring.one());
  if (kind == BuiltinFgl::multiplicative && order >= 2)
    f = f.with_coeff(1, 1, ring.one());
  return FormalGroupLaw(f);
}

BuiltinFgl parse_builtin_fgl(const std::string& name) {
  if (name == "additive") return BuiltinFgl::additive;
  if (name == "multiplicative") return BuiltinFgl::multiplicative;
  throw std::invalid_argument("unknown builtin FGL: " + name);
}

FormalGroupLaw FormalGroupLaw::from_series(const BivariateSeries& body) {
  FglAxiomReport rep = check_fgl_axioms(body);
  if (!rep.pass()) {
    std::ostringstream os;
    os << "not a formal group law: " << rep.first_failure->axiom
       << " fails at monomial (";
    for (size_t i = 0; i < rep.first_failure->monomial.size(); ++i)
      os << (i ? "," : "") << rep.first_failure->monomial[i];
    os << ")";
    throw std::invalid_argument(os.str());
  }
  return FormalGroupLaw(body);
}

FglAxiomReport check_fgl_axioms(const BivariateSeries& f) {
  FglAxiomReport rep;
  rep.order = f.order();
  Ring k = f.ring();
  int n = f.order();

  auto record = [&rep](const std::string& axiom, std::vector<int> mono,
                       const Rational& lhs, const Rational& rhs) {
    if (!rep.first_failure)
      rep.first_failure = FglAxiomFailure{axiom, std::move(mono), lhs, rhs};
  };

  // (a) F(X, 0) = X and F(0, Y) = Y.
  rep.identity_ok = true;
  TruncSeries xs = TruncSeries::x(k, n);
  TruncSeries fx0 = f.at_y_zero(), f0y = f.at_x_zero();
  for (int d = 0; d <= n && rep.identity_ok; ++d) {
    if (fx0.coeff(d) != xs.coeff(d)) {
      rep.identity_ok = false;
      record("identity", {d, 0}, fx0.coeff(d), xs.coeff(d));
    } else if (f0y.coeff(d) != xs.coeff(d)) {
      rep.identity_ok = false;
      record("identity", {0, d}, f0y.coeff(d), xs.coeff(d));
    }
  }

  // (c) F(X, Y) = F(Y, X).
  rep.commutativity_ok = true;
  for (int d = 0; d <= n && rep.commutativity_ok; ++d)
    for (int i = d; 2 * i >= d && rep.commutativity_ok; --i) {
      int j = d - i;
      if (f.coeff(i, j) != f.coeff(j, i)) {
        rep.commutativity_ok = false;
        record("commutativity", {i, j}, f.coeff(i, j), f.coeff(j, i));
      }
    }

  // (b) F(F(X,Y),Z) = F(X,F(Y,Z)) on total-degree-truncated trivariate
  // expansions. Skipped (reported failed) when the inner expansions are not
  // substitutable, i.e. when F has a constant term.
  rep.associativity_ok = true;
  if (f.coeff(0, 0) != 0) {
    rep.associativity_ok = false;
    record("associativity", {0, 0, 0}, f.coeff(0, 0), Rational(0));
  } else {
    Tri X = Tri::var(k, n, 0), Y = Tri::var(k, n, 1), Z = Tri::var(k, n, 2);
    Tri fxy = eval_bivariate(f, X, Y);
    Tri fyz = eval_bivariate(f, Y, Z);
    Tri lhs = eval_bivariate(f, fxy, Z);
    Tri rhs = eval_bivariate(f, X, fyz);
    for (int d = 0; d <= n && rep.associativity_ok; ++d)
      for (int i = 0; i <= d && rep.associativity_ok; ++i)
        for (int j = 0; i + j <= d && rep.associativity_ok; ++j) {
          int kk = d - i - j;
          if (lhs.at(i, j, kk) != rhs.at(i, j, kk)) {
            rep.associativity_ok = false;
            record("associativity", {i, j, kk}, lhs.at(i, j, kk),
                   rhs.at(i, j, kk));
          }
        }
  }
  return rep;
}

TruncSeries formal_inverse(const FormalGroupLaw& f) {
  Ring k = f.ring();
  int n = f.order();
  TruncSeries iota(k, n);
  // Degree-by-degree solve of F(X, iota(X)) = 0: the coefficient of X^d is
  // a_d plus terms involving only a_1..a_{d-1}, since the Y-linear part of
  // F is exactly Y.
  for (int d = 1; d <= n; ++d) {
    TruncSeries r = f.body().substitute(TruncSeries::x(k, n), iota);
    iota = iota.with_coeff(d, k.neg(r.coeff(d)));
  }
  return iota;
}

TruncSeries f_add(const FormalGroupLaw& f, const TruncSeries& a,
                  const TruncSeries& b) {
  if (!a.zero_constant_term() || !b.zero_constant_term())
    throw std::invalid_argument("f_add: arguments must have zero constant term");
  return f.body().substitute(a, b);
}

BivariateSeries f_add_generators(const FormalGroupLaw& f) { return f.body(); }

TruncSeries series_reversion(const TruncSeries& l) {
  Ring k = l.ring();
  int n = l.order();
  if (!l.zero_constant_term())
    throw std::invalid_argument("series_reversion: zero constant term required");
  if (!k.is_unit(l.coeff(1)))
    throw std::invalid_argument("series_reversion: linear coefficient must be a unit");
  TruncSeries m(k, n);
  m = m.with_coeff(1, k.div(k.one(), l.coeff(1)));
  for (int d = 2; d <= n; ++d) {
    // coefficient of X^d in m(l(X)) with the current partial m must vanish;
    // it is linear in m_d with factor l_1^d.
    TruncSeries comp = series_compose(m, l);
    Rational l1d = k.one();
    for (int i = 0; i < d; ++i) l1d = k.mul(l1d, l.coeff(1));
    m = m.with_coeff(d, k.neg(k.div(comp.coeff(d), l1d)));
  }
  return m;
}

FormalGroupLaw fgl_from_log(const TruncSeries& l) {
  Ring k = l.ring();
  if (!k.is_q_algebra())
    throw std::invalid_argument("fgl_from_log: ring must be a Q-algebra");
  if (!l.zero_constant_term() || !k.is_unit(l.coeff(1)))
    throw std::invalid_argument(
        "fgl_from_log: logarithm must be X + c2 X^2 + ... with unit linear term");
  int n = l.order();
  TruncSeries m = series_reversion(l);
  // l(X) + l(Y) as a bivariate series.
  BivariateSeries s(k, n);
  for (int d = 1; d <= n; ++d) {
    s = s.with_coeff(d, 0, l.coeff(d));
    s = s.with_coeff(0, d, l.coeff(d));
  }
  return FormalGroupLaw(compose_into_bivariate(m, s));
}

}  // namespace vrw
