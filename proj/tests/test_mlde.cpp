#include <doctest.h>

#include <string>

#include "test_support.hpp"
#include "vrw/mlde.hpp"

using namespace vrw;
using vrw::testing::q;

namespace {

// Partitions of n into parts congruent to r or m-r mod m (coin DP); the
// Rogers-Ramanujan product tails, independently of all series code.
std::vector<mpz_class> mod_partition_counts(int n_terms, int m, int r) {
  std::vector<mpz_class> p(n_terms + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n_terms; ++part) {
    int res = part % m;
    if (res != r && res != m - r) continue;
    for (int n = part; n <= n_terms; ++n) p[n] += p[n - part];
  }
  return p;
}

}  // namespace

TEST_CASE("indicial polynomial shapes") {
  MonicMLDE m2{2, q("-11/3600"), 0, 40};
  auto p2 = indicial_polynomial(m2);
  REQUIRE(p2.size() == 3);
  CHECK(p2[0] == q("-11/3600"));
  CHECK(p2[1] == q("-1/6"));
  CHECK(p2[2] == 1);

  auto roots = indicial_roots_order2(m2);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == q("-1/60"));
  CHECK(roots[1] == q("11/60"));
  CHECK(roots[0] + roots[1] == q("1/6"));

  // Root sum n(n-1)/12 for any order: read off the subleading coefficient.
  for (int n = 2; n <= 6; ++n) {
    MonicMLDE m{n, q("3/7"), q("-2/5"), 10};
    auto p = indicial_polynomial(m);
    REQUIRE(static_cast<int>(p.size()) == n + 1);
    CHECK(p[n] == 1);
    CHECK(-p[n - 1] == frac(n * (n - 1), 12));
  }
}

TEST_CASE("mlde_from_exponents") {
  MonicMLDE yl = mlde_from_exponents(2, {q("-1/60"), q("11/60")});
  CHECK(yl.kappa == q("-11/3600"));

  MonicMLDE a1 = mlde_from_exponents(2, {q("-1/24"), q("5/24")});
  CHECK(a1.kappa == q("-5/576"));

  MonicMLDE ising = mlde_from_exponents(3, {q("-1/48"), q("1/24"), q("23/48")});
  auto p = indicial_polynomial(ising);
  CHECK(poly_eval(p, q("-1/48")) == 0);
  CHECK(poly_eval(p, q("1/24")) == 0);
  CHECK(poly_eval(p, q("23/48")) == 0);

  // The forced sum is reported with both sides.
  try {
    mlde_from_exponents(2, {q("0"), q("1")});
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    CHECK(msg.find("1/6") != std::string::npos);
  }
}

TEST_CASE("Frobenius solutions match the Rogers-Ramanujan oracles") {
  MonicMLDE m{2, q("-11/3600"), 0, 50};

  // x = -1/60 carries the G-type product (parts = +-1 mod 5) and
  // x = 11/60 the H-type product (parts = +-2 mod 5); at x = -1/60 the
  // recursion gives a_1 = 1 by hand, which pins the orientation.
  FrobeniusSolution lo = frobenius_solve(m, q("-1/60"), 50);
  CHECK(!lo.resonance);
  auto g_parts = mod_partition_counts(50, 5, 1);
  for (int n = 0; n <= 50; ++n) CHECK(lo.series.coeff(n) == Rational(g_parts[n]));

  FrobeniusSolution hi = frobenius_solve(m, q("11/60"), 50);
  auto h_parts = mod_partition_counts(50, 5, 2);
  CHECK(hi.series.coeff(1) == 0);
  for (int n = 0; n <= 50; ++n) CHECK(hi.series.coeff(n) == Rational(h_parts[n]));
}

TEST_CASE("Frobenius solution for the c = 1 vacuum") {
  MonicMLDE m{2, q("-5/576"), 0, 10};
  FrobeniusSolution sol = frobenius_solve(m, q("-1/24"), 10);
  CHECK(sol.series.coeff(0) == 1);
  CHECK(sol.series.coeff(1) == 3);
  CHECK(sol.series.coeff(2) == 4);
  CHECK(sol.series.coeff(3) == 7);
  CHECK(sol.series.coeff(4) == 13);
}

TEST_CASE("residuals vanish exactly on solutions") {
  for (auto kappa : {q("-11/3600"), q("-5/576"), q("7/144")}) {
    MonicMLDE m{2, kappa, 0, 25};
    for (const auto& x : indicial_roots_order2(m)) {
      FrobeniusSolution sol = frobenius_solve(m, x, 25);
      if (sol.resonance) continue;
      CHECK(residual(m, sol.series).is_zero());
    }
  }
  // Order 3 (Ising parameters).
  MonicMLDE ising = mlde_from_exponents(3, {q("-1/48"), q("1/24"), q("23/48")}, 25);
  for (const auto& x : {q("-1/48"), q("1/24"), q("23/48")}) {
    FrobeniusSolution sol = frobenius_solve(ising, x, 25);
    CHECK(!sol.resonance);
    CHECK(residual(ising, sol.series).is_zero());
  }
}

TEST_CASE("residual detects a wrong coefficient") {
  MonicMLDE free{2, 0, 0, 10};
  // The bare monomial q^{1/6} kills the operator at its leading order.
  CHECK(residual(free, QExpansion::make(q("1/6"), {q("1")})).is_zero());

  MonicMLDE m{2, q("-11/3600"), 0, 10};
  QExpansion wrong = QExpansion::make(q("-1/60"), {q("1"), q("1"), q("0")});
  QExpansion r = residual(m, wrong);
  CHECK(!r.is_zero());
  CHECK(r.coeff_at(q("-1/60") + 2) != 0);
}

TEST_CASE("non-root exponents are rejected, resonance is flagged") {
  MonicMLDE m{2, q("-11/3600"), 0, 10};
  CHECK_THROWS_AS(frobenius_solve(m, q("1/3"), 10), std::invalid_argument);

  // Roots {-5/12, 7/12} differ by 1: the lower one resonates at step 1.
  MonicMLDE res{2, q("-35/144"), 0, 10};
  FrobeniusSolution sol = frobenius_solve(res, q("-5/12"), 10);
  CHECK(sol.resonance);
  CHECK(sol.resonance_step == 1);
  FrobeniusSolution ok = frobenius_solve(res, q("7/12"), 10);
  CHECK(!ok.resonance);
}

TEST_CASE("extending the order never changes computed coefficients") {
  MonicMLDE m{2, q("-5/576"), 0, 60};
  FrobeniusSolution a = frobenius_solve(m, q("-1/24"), 20);
  FrobeniusSolution b = frobenius_solve(m, q("-1/24"), 40);
  for (int n = 0; n <= 20; ++n) CHECK(a.series.coeff(n) == b.series.coeff(n));
}

TEST_CASE("two-character candidates stay non-negative integral to q^50") {
  // The eight admissible exponent pairs; each solution must clear to
  // non-negative integers with a single small denominator (1 for the vacuum).
  const std::vector<std::pair<const char*, const char*>> pairs = {
      {"-1/60", "11/60"}, {"-1/24", "5/24"},   {"-1/12", "1/4"},
      {"-7/60", "17/60"}, {"-1/6", "1/3"},     {"-13/60", "23/60"},
      {"-1/4", "5/12"},   {"-7/24", "11/24"},
  };
  for (const auto& [lo, hi_] : pairs) {
    MonicMLDE m = mlde_from_exponents(2, {q(lo), q(hi_)}, 50);
    for (const auto& x : {q(lo), q(hi_)}) {
      FrobeniusSolution sol = frobenius_solve(m, x, 50);
      REQUIRE(!sol.resonance);
      mpz_class clear(1);
      for (int n = 0; n <= 50; ++n) {
        CHECK(sol.series.coeff(n) >= 0);
        mpz_class den = sol.series.coeff(n).get_den(), g;
        mpz_gcd(g.get_mpz_t(), clear.get_mpz_t(), den.get_mpz_t());
        clear = clear / g * den;
      }
      CHECK(clear <= 60);
      if (x == q(lo)) CHECK(clear == 1);  // vacuum dimensions are integers
      for (int n = 0; n <= 50; ++n) {
        Rational scaled = sol.series.coeff(n) * Rational(clear);
        CHECK(scaled.get_den() == 1);
      }
    }
  }
}

TEST_CASE("order-2 mini scan finds the c = 1 point") {
  ScanOptions opts;
  opts.order = 2;
  opts.max_denominator = 24;
  opts.lo = q("-1/3");
  opts.hi = q("1/12");
  opts.criteria.terms = 20;
  auto out = scan_characters(opts);
  bool found_a1 = false;
  for (const auto& c : out) {
    CHECK(c.verdict == "positive-integral");
    if (c.exponents == std::vector<Rational>{q("-1/24"), q("5/24")}) {
      found_a1 = true;
      CHECK(c.central_charge == 1);
      CHECK(c.conformal_weights == std::vector<Rational>{q("0"), q("1/4")});
    }
  }
  CHECK(found_a1);
}

TEST_CASE("order-3 mini scan emits the Ising point") {
  ScanOptions opts;
  opts.order = 3;
  opts.max_denominator = 48;
  opts.lo = q("-1/16");
  opts.hi = q("1/16");
  opts.criteria.terms = 16;
  auto out = scan_characters(opts);
  bool found = false;
  for (const auto& c : out)
    if (c.exponents == std::vector<Rational>{q("-1/48"), q("1/24"), q("23/48")}) {
      found = true;
      CHECK(c.central_charge == q("1/2"));
    }
  CHECK(found);
}

TEST_CASE("scan runs identically with several workers") {
  ScanOptions opts;
  opts.order = 2;
  opts.max_denominator = 12;
  opts.lo = q("-1/2");
  opts.hi = q("1/12");
  opts.criteria.terms = 12;
  auto seq = scan_characters(opts);
  opts.jobs = 4;
  auto par = scan_characters(opts);
  REQUIRE(seq.size() == par.size());
  for (size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].exponents == par[i].exponents);
    CHECK(seq[i].verdict == par[i].verdict);
  }
}
