#include <doctest.h>

#include "test_support.hpp"
#include "vrw/fgl.hpp"

using namespace vrw;
using vrw::testing::random_series;
using vrw::testing::series_from;

namespace {

// l = X - X^2/2 + X^3/3 - ... = log(1+X), whose group law is multiplicative.
TruncSeries log1p_series(int order) {
  TruncSeries l(Ring::rationals(), order);
  for (int d = 1; d <= order; ++d)
    l = l.with_coeff(d, Rational((d % 2) ? 1 : -1, d));
  return l;
}

}  // namespace

TEST_CASE("builtin formal group laws") {
  FormalGroupLaw fa = builtin_fgl(BuiltinFgl::additive, Ring::rationals(), 8);
  CHECK(fa.body().coeff(1, 0) == 1);
  CHECK(fa.body().coeff(0, 1) == 1);
  CHECK(fa.body().coeff(1, 1) == 0);

  FormalGroupLaw fm = builtin_fgl(BuiltinFgl::multiplicative, Ring::rationals(), 8);
  CHECK(fm.body().coeff(1, 1) == 1);
  CHECK(fm.body().coeff(2, 1) == 0);

  FormalGroupLaw fm5 = builtin_fgl(BuiltinFgl::multiplicative, Ring::mod(5), 8);
  CHECK(fm5.body().coeff(1, 1) == 1);
  CHECK(fm5.ring() == Ring::mod(5));

  CHECK_THROWS_AS(builtin_fgl(BuiltinFgl::additive, Ring::rationals(), 0),
                  std::invalid_argument);
}

TEST_CASE("axiom checker accepts the multiplicative law") {
  FormalGroupLaw fm = builtin_fgl(BuiltinFgl::multiplicative, Ring::rationals(), 10);
  FglAxiomReport rep = check_fgl_axioms(fm.body());
  CHECK(rep.pass());
  CHECK(rep.order == 10);
}

TEST_CASE("axiom checker pinpoints failures") {
  Ring Q = Ring::rationals();
  // X + Y + X^2 Y - X Y^2: commutativity fails at X^2 Y.
  BivariateSeries f = BivariateSeries::x(Q, 6).add(BivariateSeries::y(Q, 6));
  f = f.with_coeff(2, 1, Rational(1)).with_coeff(1, 2, Rational(-1));
  FglAxiomReport rep = check_fgl_axioms(f);
  CHECK(!rep.commutativity_ok);
  REQUIRE(rep.first_failure.has_value());
  CHECK(rep.first_failure->axiom == "commutativity");
  CHECK(rep.first_failure->monomial == std::vector<int>{2, 1});

  // X + Y + X^2: F(X, 0) = X + X^2 breaks the identity axiom.
  BivariateSeries g = BivariateSeries::x(Q, 6).add(BivariateSeries::y(Q, 6));
  g = g.with_coeff(2, 0, Rational(1));
  FglAxiomReport rep2 = check_fgl_axioms(g);
  CHECK(!rep2.identity_ok);
  CHECK(rep2.first_failure->axiom == "identity");

  CHECK_THROWS_AS(FormalGroupLaw::from_series(g), std::invalid_argument);
}

TEST_CASE("formal inverses") {
  Ring Q = Ring::rationals();
  FormalGroupLaw fa = builtin_fgl(BuiltinFgl::additive, Q, 8);
  CHECK(formal_inverse(fa) == series_from(Q, 8, {"0", "-1"}));

  FormalGroupLaw fm = builtin_fgl(BuiltinFgl::multiplicative, Q, 5);
  CHECK(formal_inverse(fm) ==
        series_from(Q, 5, {"0", "-1", "1", "-1", "1", "-1"}));

  // Over Z/2 the leading coefficient is forced to 1.
  FormalGroupLaw fm2 = builtin_fgl(BuiltinFgl::multiplicative, Ring::mod(2), 6);
  TruncSeries iota = formal_inverse(fm2);
  CHECK(iota.coeff(0) == 0);
  CHECK(iota.coeff(1) == 1);
  CHECK(f_add(fm2, TruncSeries::x(Ring::mod(2), 6), iota).is_zero());
}

TEST_CASE("f_add on zero-constant series") {
  Ring Q = Ring::rationals();
  FormalGroupLaw fa = builtin_fgl(BuiltinFgl::additive, Q, 6);
  FormalGroupLaw fm = builtin_fgl(BuiltinFgl::multiplicative, Q, 6);
  TruncSeries x = TruncSeries::x(Q, 6);
  CHECK(f_add(fa, x, x) == series_from(Q, 6, {"0", "2"}));
  CHECK(f_add(fm, x, x) == series_from(Q, 6, {"0", "2", "1"}));
  CHECK_THROWS_AS(f_add(fm, TruncSeries::constant(Q, 6, Rational(1)), x),
                  std::invalid_argument);
  CHECK(f_add_generators(fm) == fm.body());
}

TEST_CASE("fgl_from_log reproduces the built-in laws") {
  Ring Q = Ring::rationals();
  CHECK(fgl_from_log(TruncSeries::x(Q, 8)).body() ==
        builtin_fgl(BuiltinFgl::additive, Q, 8).body());
  CHECK(fgl_from_log(log1p_series(8)).body() ==
        builtin_fgl(BuiltinFgl::multiplicative, Q, 8).body());

  // l = X + X^5: no mixed terms below total degree 5.
  TruncSeries l = TruncSeries::x(Q, 6).with_coeff(5, Rational(1));
  FormalGroupLaw f = fgl_from_log(l);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; i + j < 5; ++j) CHECK(f.body().coeff(i, j) == 0);
  CHECK(check_fgl_axioms(f.body()).pass());

  CHECK_THROWS_AS(fgl_from_log(series_from(Ring::mod(7), 4, {"0", "1"})),
                  std::invalid_argument);
  CHECK_THROWS_AS(fgl_from_log(series_from(Q, 4, {"0", "0", "1"})),
                  std::invalid_argument);
}

TEST_CASE("series_reversion inverts composition") {
  std::mt19937_64 rng(11);
  Ring Q = Ring::rationals();
  for (int trial = 0; trial < 10; ++trial) {
    TruncSeries l = TruncSeries::x(Q, 8);
    for (int d = 2; d <= 8; ++d)
      l = l.with_coeff(d, vrw::testing::random_scalar(Q, rng));
    TruncSeries m = series_reversion(l);
    CHECK(series_compose(m, l) == TruncSeries::x(Q, 8));
    CHECK(series_compose(l, m) == TruncSeries::x(Q, 8));
  }
}

TEST_CASE("group laws of +_F on random series") {
  std::mt19937_64 rng(17);
  Ring Q = Ring::rationals();
  const int order = 6;

  std::vector<FormalGroupLaw> laws;
  laws.push_back(builtin_fgl(BuiltinFgl::additive, Q, order));
  laws.push_back(builtin_fgl(BuiltinFgl::multiplicative, Q, order));
  for (int k = 0; k < 3; ++k) {
    TruncSeries l = TruncSeries::x(Q, order);
    for (int d = 2; d <= order; ++d)
      l = l.with_coeff(d, vrw::testing::random_scalar(Q, rng));
    laws.push_back(fgl_from_log(l));
  }

  for (const auto& f : laws) {
    CHECK(check_fgl_axioms(f.body()).pass());
    TruncSeries iota = formal_inverse(f);
    CHECK(f_add(f, TruncSeries::x(Q, order), iota).is_zero());

    TruncSeries zero(Q, order);
    for (int trial = 0; trial < 5; ++trial) {
      TruncSeries a = random_series(Q, order, rng, true);
      TruncSeries b = random_series(Q, order, rng, true);
      TruncSeries c = random_series(Q, order, rng, true);
      CHECK(f_add(f, a, b) == f_add(f, b, a));
      CHECK(f_add(f, f_add(f, a, b), c) == f_add(f, a, f_add(f, b, c)));
      CHECK(f_add(f, a, zero) == a);
      CHECK(f_add(f, a, series_compose(iota, a)).is_zero());
    }
  }
}

TEST_CASE("f_add agrees with the logarithm route over Q") {
  std::mt19937_64 rng(23);
  Ring Q = Ring::rationals();
  const int order = 7;
  for (int trial = 0; trial < 5; ++trial) {
    TruncSeries l = TruncSeries::x(Q, order);
    for (int d = 2; d <= order; ++d)
      l = l.with_coeff(d, vrw::testing::random_scalar(Q, rng));
    FormalGroupLaw f = fgl_from_log(l);
    TruncSeries m = series_reversion(l);
    TruncSeries a = random_series(Q, order, rng, true);
    TruncSeries b = random_series(Q, order, rng, true);
    TruncSeries via_log =
        series_compose(m, series_compose(l, a).add(series_compose(l, b)));
    CHECK(f_add(f, a, b) == via_log);
  }
}
