#include <doctest.h>

#include "test_support.hpp"
#include "vrw/modular_forms.hpp"

using namespace vrw;
using vrw::testing::q;

namespace {

// Euler's product prod (1-q^n) by the pentagonal number theorem; an
// independent route to the eta tail.
std::vector<Rational> pentagonal_series(int n_terms) {
  std::vector<Rational> c(n_terms + 1, Rational(0));
  c[0] = 1;
  for (long k = 1;; ++k) {
    long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
    if (g1 > n_terms && g2 > n_terms) break;
    Rational sign((k % 2) ? -1 : 1);
    if (g1 <= n_terms) c[g1] = sign;
    if (g2 <= n_terms) c[g2] = sign;
  }
  return c;
}

// Partition counts by coin-style dynamic programming; independent of any
// series arithmetic.
std::vector<mpz_class> partition_counts(int n_terms) {
  std::vector<mpz_class> p(n_terms + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n_terms; ++part)
    for (int n = part; n <= n_terms; ++n) p[n] += p[n - part];
  return p;
}

}  // namespace

TEST_CASE("QExpansion canonical form and arithmetic") {
  QExpansion f = QExpansion::make(q("0"), {q("0"), q("0"), q("3"), q("1")});
  CHECK(f.leading_exponent() == 2);
  CHECK(f.coeff(0) == 3);

  QExpansion g = QExpansion::make(q("-1/2"), {q("1"), q("2")});
  QExpansion prod = f.mul(g);
  CHECK(prod.leading_exponent() == q("3/2"));
  CHECK(prod.coeff(0) == 3);
  CHECK(prod.coeff(1) == 7);

  CHECK(g.mul(g.invert()) == QExpansion::constant(Rational(1), 1));
  CHECK_THROWS_AS(QExpansion::zero(3).invert(), std::domain_error);

  // Adding expansions whose exponents differ by a non-integer is an error.
  CHECK_THROWS_AS(f.add(g), std::invalid_argument);

  QExpansion h = QExpansion::make(q("-1/2"), {q("-1"), q("0"), q("5")});
  CHECK(g.add(h).leading_exponent() == q("1/2"));
  CHECK(g.sub(g).is_zero());

  // q d/dq multiplies by the exponent.
  QExpansion d = g.q_derivative();
  CHECK(d.coeff(0) == q("-1/2"));
  CHECK(d.coeff(1) == q("1"));

  QExpansion s = g.stretched(2);
  CHECK(s.leading_exponent() == q("-1"));
  CHECK(s.coeff(2) == 2);
}

TEST_CASE("Eisenstein q-expansions") {
  QExpansion e2 = eisenstein(2, 3);
  CHECK(e2.coeff(0) == 1);
  CHECK(e2.coeff(1) == -24);
  CHECK(e2.coeff(2) == -72);
  CHECK(e2.coeff(3) == -96);
  CHECK(e2.weight() == 2);
  CHECK(e2.quasimodular());

  QExpansion e4 = eisenstein(4, 2);
  CHECK(e4.coeff(1) == 240);
  CHECK(e4.coeff(2) == 2160);
  CHECK(!e4.quasimodular());

  CHECK(eisenstein(6, 1).coeff(1) == -504);
  CHECK_THROWS_AS(eisenstein(8, 5), std::invalid_argument);
}

TEST_CASE("eta powers against pentagonal and partition oracles") {
  QExpansion eta = eta_power(1, 40);
  CHECK(eta.leading_exponent() == q("1/24"));
  auto pent = pentagonal_series(40);
  for (int n = 0; n <= 40; ++n) CHECK(eta.coeff(n) == pent[n]);

  QExpansion etainv = eta_power(-1, 40);
  CHECK(etainv.leading_exponent() == q("-1/24"));
  auto parts = partition_counts(40);
  for (int n = 0; n <= 40; ++n) CHECK(etainv.coeff(n) == Rational(parts[n]));

  QExpansion eta24 = eta_power(24, 1);
  CHECK(eta24.leading_exponent() == 1);
  CHECK(eta24.coeff(0) == 1);
  CHECK(eta24.coeff(1) == -24);
}

TEST_CASE("Delta equals eta^24") {
  QExpansion d = delta_cusp_form(60);
  QExpansion e = eta_power(24, 60);
  CHECK(d.leading_exponent() == 1);
  for (int n = 0; n <= 59; ++n) CHECK(d.coeff(n) == e.coeff(n));
  CHECK(d.coeff(1) == -24);     // tau(2)
  CHECK(d.coeff(2) == 252);     // tau(3)
  CHECK(d.coeff(10) == 534612); // tau(11)
}

TEST_CASE("j-invariant expansion") {
  QExpansion j = j_invariant(3);
  CHECK(j.leading_exponent() == -1);
  CHECK(j.coeff(0) == 1);
  CHECK(j.coeff(1) == 744);
  CHECK(j.coeff(2) == 196884);
  CHECK(j.coeff(3) == 21493760);
  CHECK(j_invariant(-1).coeff(0) == 1);
}

TEST_CASE("Serre derivative identities") {
  QExpansion e4 = eisenstein(4, 30), e6 = eisenstein(6, 30);
  CHECK(serre_derivative(e4, 4) == e6.scale(q("-1/3")));
  CHECK(serre_derivative(e6, 6) == e4.mul(e4).scale(q("-1/2")));
  CHECK(serre_derivative(e4, 4).weight() == 6);
  CHECK(serre_derivative(QExpansion::constant(Rational(1), 10), 0).is_zero());
}

TEST_CASE("Ramanujan system to high order") {
  const int N = 100;
  QExpansion e2 = eisenstein(2, N), e4 = eisenstein(4, N), e6 = eisenstein(6, N);
  CHECK(e2.q_derivative() == e2.mul(e2).sub(e4).scale(q("1/12")));
  CHECK(e4.q_derivative() == e2.mul(e4).sub(e6).scale(q("1/3")));
  CHECK(e6.q_derivative() == e2.mul(e6).sub(e4.mul(e4)).scale(q("1/2")));
}

TEST_CASE("iterate_D0 leading behavior") {
  QExpansion f = QExpansion::make(q("2/7"), {q("1"), q("0"), q("0")});
  CHECK(iterate_D0(f, 0) == f);
  CHECK(iterate_D0(f, 1).coeff(0) == q("2/7"));
  // Second factor is D_2 = q d/dq - (1/6) E_2.
  CHECK(iterate_D0(f, 2).coeff(0) == q("2/7") * (q("2/7") - q("1/6")));
}

TEST_CASE("weight bookkeeping") {
  QExpansion e4 = eisenstein(4, 10), e6 = eisenstein(6, 10);
  CHECK(e4.mul(e6).weight() == 10);
  CHECK(e4.pow(3).weight() == 12);
  CHECK(!eta_power(2, 10).weight().has_value());
}

TEST_CASE("numeric evaluation spot checks") {
  const std::complex<double> i(0.0, 1.0);
  QExpansion e4 = eisenstein(4, 30), e6 = eisenstein(6, 30);

  // Weight-6 form at the S-fixed point must vanish.
  CHECK(std::abs(evaluate(e6, i, 30).value) < 1e-8);
  // Period 1 in tau.
  CHECK(std::abs(evaluate(e4, i, 30).value - evaluate(e4, i + 1.0, 30).value) <
        1e-10);
  // E_6(i) = 0 forces j(i) = 1728.
  CHECK(std::abs(evaluate(j_invariant(30), i, 31).value - 1728.0) < 1e-4);

  CHECK_THROWS_AS(evaluate(e4, std::complex<double>(0.3, -1.0), 10),
                  std::invalid_argument);

  // Decaying coefficients report a tail bound.
  QExpansion geom = QExpansion::make(q("0"), {q("1"), q("1"), q("1"), q("1")});
  EvalResult r = evaluate(geom, i, 3);
  CHECK(r.tail_bound.has_value());
  CHECK(*r.tail_bound < 1e-7);
}

TEST_CASE("translation invariance of integer-exponent series") {
  std::mt19937_64 rng(4);
  QExpansion f = eisenstein(4, 25).mul(eisenstein(6, 25));
  for (int trial = 0; trial < 5; ++trial) {
    std::uniform_real_distribution<double> re(-1.0, 1.0), im(0.5, 1.5);
    std::complex<double> tau(re(rng), im(rng));
    auto a = evaluate(f, tau, 25), b = evaluate(f, tau + 1.0, 25);
    CHECK(std::abs(a.value - b.value) <= 1e-9 * (1.0 + std::abs(a.value)));
  }
}
