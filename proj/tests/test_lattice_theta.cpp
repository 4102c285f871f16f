#include <doctest.h>

#include "test_support.hpp"
#include "vrw/lattice_theta.hpp"

using namespace vrw;
using vrw::testing::q;

TEST_CASE("built-in lattices have the expected invariants") {
  Lattice a1 = Lattice::builtin("A1");
  CHECK(a1.rank() == 1);
  CHECK(a1.gram()[0][0] == 2);

  Lattice e8 = Lattice::builtin("E8");
  CHECK(e8.rank() == 8);
  CHECK(e8.determinant() == 1);
  CHECK(e8.is_even());

  Lattice d16 = Lattice::builtin("D16plus");
  CHECK(d16.rank() == 16);
  CHECK(d16.determinant() == 1);
  CHECK(d16.is_even());

  Lattice ee = Lattice::builtin("E8_plus_E8");
  CHECK(ee.rank() == 16);
  CHECK(ee.determinant() == 1);

  Lattice s2e8 = Lattice::builtin("sqrt2_E8");
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      CHECK(s2e8.gram()[i][j] == 2 * e8.gram()[i][j]);

  CHECK_THROWS_AS(Lattice::builtin("Leech"), std::invalid_argument);
  CHECK_THROWS_AS(Lattice::from_gram({{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Lattice::from_gram({{2, 1}, {0, 2}}), std::invalid_argument);
}

TEST_CASE("short vector counts") {
  ShortVectors a1 = short_vectors(Lattice::builtin("A1"), 8);
  CHECK(a1.counts == std::map<long, unsigned long long>{{0, 1}, {2, 2}, {8, 2}});

  ShortVectors z = short_vectors(Lattice::from_gram({{1}}), 4);
  CHECK(z.counts == std::map<long, unsigned long long>{{0, 1}, {1, 2}, {4, 2}});

  ShortVectors e8 = short_vectors(Lattice::builtin("E8"), 2);
  CHECK(e8.counts.at(2) == 240);
  CHECK(e8.counts.at(0) == 1);

  // D16+ has the 480 D16 roots at norm 2 (the glue coset starts at norm 4).
  // Norm 4: 32 + 29120 integral vectors plus 2^16/2 glue vectors = 61920,
  // which is also the q^2 coefficient of E_4^2.
  ShortVectors d16 = short_vectors(Lattice::builtin("D16plus"), 4);
  CHECK(d16.counts.at(2) == 480);
  CHECK(d16.counts.at(4) == 61920);

  CHECK_THROWS_AS(short_vectors(Lattice::builtin("A1"), -1), std::invalid_argument);
}

TEST_CASE("collected vectors have exact norms") {
  Lattice e8 = Lattice::builtin("E8");
  ShortVectors sv = short_vectors(e8, 4, true);
  REQUIRE(sv.vectors.has_value());
  CHECK(sv.vectors->size() == sv.total());
  for (const auto& v : *sv.vectors) {
    long norm = 0;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) norm += v[i] * e8.gram()[i][j] * v[j];
    CHECK(norm <= 4);
  }
}

TEST_CASE("genus-1 theta series") {
  LatticeSeries a1 = theta_genus1(Lattice::builtin("A1"), 4);
  CHECK(!a1.half_step);
  CHECK(a1.series.coeff_at(q("0")) == 1);
  CHECK(a1.series.coeff_at(q("1")) == 2);
  CHECK(a1.series.coeff_at(q("2")) == 0);
  CHECK(a1.series.coeff_at(q("3")) == 0);
  CHECK(a1.series.coeff_at(q("4")) == 2);

  // theta_E8 = E_4: two fully independent routes.
  LatticeSeries e8 = theta_genus1(Lattice::builtin("E8"), 5);
  QExpansion e4 = eisenstein(4, 5);
  for (int n = 0; n <= 5; ++n) CHECK(e8.series.coeff(n) == e4.coeff(n));

  // Orthogonal sums multiply theta series.
  LatticeSeries ee = theta_genus1(Lattice::builtin("E8_plus_E8"), 3);
  QExpansion sq = e8.series.truncated(3).mul(e8.series.truncated(3));
  for (int n = 0; n <= 3; ++n) CHECK(ee.series.coeff(n) == sq.coeff(n));

  // Odd lattice: half-integer exponents, flagged, in the variable q^{1/2}.
  LatticeSeries zt = theta_genus1(Lattice::from_gram({{1}}), 2);
  CHECK(zt.half_step);
  CHECK(zt.series.coeff(0) == 1);  // norm 0
  CHECK(zt.series.coeff(1) == 2);  // norm 1 = q^{1/2}
  CHECK(zt.series.coeff(4) == 2);  // norm 4 = q^2
}

TEST_CASE("lattice characters") {
  LatticeSeries a1 = lattice_character(Lattice::builtin("A1"), 4);
  CHECK(a1.series.leading_exponent() == q("-1/24"));
  CHECK(a1.series.coeff(0) == 1);
  CHECK(a1.series.coeff(1) == 3);
  CHECK(a1.series.coeff(2) == 4);
  CHECK(a1.series.coeff(3) == 7);
  CHECK(a1.series.coeff(4) == 13);

  LatticeSeries e8 = lattice_character(Lattice::builtin("E8"), 2);
  CHECK(e8.series.leading_exponent() == q("-1/3"));
  CHECK(e8.series.coeff(0) == 1);
  CHECK(e8.series.coeff(1) == 248);

  // Characters are graded dimensions: non-negative integers.
  for (const char* name : {"A1", "E8", "sqrt2_E8"}) {
    LatticeSeries ch = lattice_character(Lattice::builtin(name), 6);
    for (int n = 0; n <= 6; ++n) {
      CHECK(ch.series.coeff(n) >= 0);
      CHECK(ch.series.coeff(n).get_den() == 1);
    }
  }
  // Rank-16 built-ins kept short: the enumeration grows fast with the bound.
  for (const char* name : {"E8_plus_E8", "D16plus"}) {
    LatticeSeries ch = lattice_character(Lattice::builtin(name), 3);
    CHECK(ch.series.leading_exponent() == q("-2/3"));
    for (int n = 0; n <= 3; ++n) {
      CHECK(ch.series.coeff(n) >= 0);
      CHECK(ch.series.coeff(n).get_den() == 1);
    }
    CHECK(ch.series.coeff(1) == 496);  // 480 roots + 16 oscillator states
  }

  LatticeSeries trivial = lattice_character(Lattice::from_gram({}), 3);
  CHECK(trivial.series.leading_exponent() == 0);
  CHECK(trivial.series.coeff(0) == 1);
}

TEST_CASE("genus-2 theta table for A1") {
  ThetaGenus2 t = theta_genus2(Lattice::builtin("A1"), 1, 1);
  CHECK(t.count_at(0, 0, 0) == 1);
  CHECK(t.count_at(2, 0, 0) == 2);
  CHECK(t.count_at(0, 2, 0) == 2);
  CHECK(t.count_at(2, 2, 2) == 2);
  CHECK(t.count_at(2, 2, -2) == 2);
  CHECK(t.count_at(2, 2, 0) == 0);
}

TEST_CASE("genus-2 symmetries and support") {
  for (const char* name : {"A1", "E8"}) {
    ThetaGenus2 t = theta_genus2(Lattice::builtin(name), 1, 1);
    for (const auto& [key, c] : t.counts) {
      auto [na, nb, ip] = key;
      CHECK(t.count_at(nb, na, ip) == c);   // swap alpha, beta
      CHECK(t.count_at(na, nb, -ip) == c);  // beta -> -beta
      CHECK(ip * ip <= na * nb);            // Cauchy-Schwarz
    }
  }
}

TEST_CASE("genus-2 margins and diagonal specialization") {
  ThetaGenus2 e8 = theta_genus2(Lattice::builtin("E8"), 1, 1);
  // beta = 0 margin is the genus-1 series.
  CHECK(e8.count_at(2, 0, 0) == 240);
  ThetaGenus2Diagonal diag = theta_genus2_specialize(e8);
  CHECK(diag.matches_product);
  CHECK(diag.collapsed.at({2, 2}) == 240ull * 240ull);

  ThetaGenus2 a1 = theta_genus2(Lattice::builtin("A1"), 1, 1);
  ThetaGenus2Diagonal d1 = theta_genus2_specialize(a1);
  CHECK(d1.matches_product);
  CHECK(d1.collapsed.at({0, 0}) == 1);
  CHECK(d1.collapsed.at({2, 0}) == 2);
  CHECK(d1.collapsed.at({0, 2}) == 2);
  CHECK(d1.collapsed.at({2, 2}) == 4);

  ThetaGenus2 zero = theta_genus2(Lattice::builtin("E8"), 0, 0);
  CHECK(zero.counts.size() == 1);
  CHECK(zero.count_at(0, 0, 0) == 1);
}

TEST_CASE("enumeration budget is enforced") {
  CHECK_THROWS_AS(theta_genus2(Lattice::builtin("E8"), 1, 1, 100),
                  std::runtime_error);
}
