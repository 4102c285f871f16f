#include "vrw/mlde.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

namespace vrw {

namespace {

// p(x) * (x - c)
std::vector<Rational> mul_linear(const std::vector<Rational>& p, const Rational& c) {
  std::vector<Rational> r(p.size() + 1, Rational(0));
  for (size_t i = 0; i < p.size(); ++i) {
    r[i + 1] += p[i];
    r[i] -= c * p[i];
  }
  return r;
}

void add_into(std::vector<Rational>& p, const std::vector<Rational>& q,
              const Rational& scale) {
  if (p.size() < q.size()) p.resize(q.size(), Rational(0));
  for (size_t i = 0; i < q.size(); ++i) p[i] += scale * q[i];
}

void check_supported_order(const MonicMLDE& m, const char* what) {
  if (m.order != 2 && m.order != 3)
    throw std::invalid_argument(std::string(what) +
                                ": only orders 2 and 3 are supported");
}

// The operator written as sum_k R_k(q) theta^k with theta = q d/dq.
// Built by composing D_w = theta - (w/12) E_2 for w = 0, 2, ..., and adding
// the kappa E_4 D_0^{n-2} and lambda E_6 D_0^{n-3} terms.
std::vector<QExpansion> theta_form(const MonicMLDE& m, int n_terms) {
  QExpansion e2 = eisenstein(2, n_terms);
  auto d0_pow = [&](int p) {
    // R coefficients of D_0^p.
    std::vector<QExpansion> r{QExpansion::constant(Rational(1), n_terms)};
    for (int step = 0; step < p; ++step) {
      int w = 2 * step;
      std::vector<QExpansion> nr(r.size() + 1, QExpansion::zero(n_terms));
      for (size_t k = 0; k < r.size(); ++k) {
        nr[k + 1] = nr[k + 1].add(r[k]);
        nr[k] = nr[k].add(r[k].q_derivative())
                    .sub(e2.mul(r[k]).scale(frac(w, 12)));
      }
      r = std::move(nr);
    }
    return r;
  };
  std::vector<QExpansion> op = d0_pow(m.order);
  if (m.order >= 2 && m.kappa != 0) {
    QExpansion e4k = eisenstein(4, n_terms).scale(m.kappa);
    auto low = d0_pow(m.order - 2);
    for (size_t k = 0; k < low.size(); ++k) op[k] = op[k].add(e4k.mul(low[k]));
  }
  if (m.order >= 3 && m.lambda != 0) {
    QExpansion e6l = eisenstein(6, n_terms).scale(m.lambda);
    auto low = d0_pow(m.order - 3);
    for (size_t k = 0; k < low.size(); ++k) op[k] = op[k].add(e6l.mul(low[k]));
  }
  return op;
}

Rational forced_exponent_sum(int order) {
  return frac(order * (order - 1), 12);
}

}  // namespace

std::vector<Rational> indicial_polynomial(const MonicMLDE& m) {
  if (m.order < 1) throw std::invalid_argument("indicial_polynomial: order >= 1");
  auto base = [&](int p) {
    std::vector<Rational> r{Rational(1)};
    for (int j = 0; j < p; ++j) r = mul_linear(r, frac(j, 6));
    return r;
  };
  std::vector<Rational> poly = base(m.order);
  if (m.order >= 2) add_into(poly, base(m.order - 2), m.kappa);
  if (m.order >= 3) add_into(poly, base(m.order - 3), m.lambda);
  return poly;
}

Rational poly_eval(const std::vector<Rational>& p, const Rational& x) {
  Rational r(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

std::vector<Rational> indicial_roots_order2(const MonicMLDE& m) {
  if (m.order != 2)
    throw std::invalid_argument("indicial_roots_order2: order 2 only");
  // x^2 - x/6 + kappa: rational roots iff 1/36 - 4 kappa is a rational square.
  Rational disc = frac(1, 36) - 4 * m.kappa;
  if (disc < 0) return {};
  mpz_class ns, ds;
  mpz_sqrt(ns.get_mpz_t(), disc.get_num().get_mpz_t());
  mpz_sqrt(ds.get_mpz_t(), disc.get_den().get_mpz_t());
  if (ns * ns != disc.get_num() || ds * ds != disc.get_den()) return {};
  Rational root_disc(ns, ds);
  root_disc.canonicalize();
  Rational x1 = (frac(1, 6) - root_disc) / 2;
  Rational x2 = (frac(1, 6) + root_disc) / 2;
  if (x1 == x2) return {x1};
  return {x1, x2};
}

MonicMLDE mlde_from_exponents(int order, const std::vector<Rational>& exponents,
                              int truncation) {
  if (order != 2 && order != 3)
    throw std::invalid_argument("mlde_from_exponents: order must be 2 or 3");
  if (static_cast<int>(exponents.size()) != order)
    throw std::invalid_argument("mlde_from_exponents: need exactly n exponents");
  Rational sum = std::accumulate(exponents.begin(), exponents.end(), Rational(0));
  Rational forced = forced_exponent_sum(order);
  if (sum != forced) {
    std::ostringstream os;
    os << "mlde_from_exponents: exponent sum " << rational_str(sum)
       << " must equal " << rational_str(forced);
    throw std::invalid_argument(os.str());
  }
  MonicMLDE m;
  m.order = order;
  m.truncation = truncation;
  if (order == 2) {
    m.kappa = exponents[0] * exponents[1];
  } else {
    // x(x-1/6)(x-1/3) + kappa x + lambda has elementary symmetric functions
    // e1 = 1/2 (forced), e2 = 1/18 + kappa, e3 = -lambda.
    Rational e2 = exponents[0] * exponents[1] + exponents[0] * exponents[2] +
                  exponents[1] * exponents[2];
    Rational e3 = exponents[0] * exponents[1] * exponents[2];
    m.kappa = e2 - frac(1, 18);
    m.lambda = -e3;
  }
  return m;
}

FrobeniusSolution frobenius_solve(const MonicMLDE& m, const Rational& x,
                                  int n_terms) {
  check_supported_order(m, "frobenius_solve");
  std::vector<Rational> ind = indicial_polynomial(m);
  if (poly_eval(ind, x) != 0)
    throw std::invalid_argument("frobenius_solve: " + rational_str(x) +
                                " is not an indicial root");
  std::vector<QExpansion> op = theta_form(m, n_terms);
  // G_j(t) = sum_k R_k[j] t^k; G_0 is the indicial polynomial.
  auto G = [&](int j, const Rational& t) {
    Rational r(0), tp(1);
    for (size_t k = 0; k < op.size(); ++k) {
      r += op[k].coeff_at(Rational(j)) * tp;
      tp *= t;
    }
    return r;
  };
  FrobeniusSolution sol;
  sol.exponent = x;
  std::vector<Rational> a{Rational(1)};
  for (int s = 1; s <= n_terms; ++s) {
    Rational lead = G(0, x + s);
    Rational rhs(0);
    for (int mm = 0; mm < s; ++mm) rhs += a[mm] * G(s - mm, x + mm);
    if (lead == 0) {
      sol.resonance = true;
      sol.resonance_step = s;
      break;
    }
    a.push_back(-rhs / lead);
  }
  sol.series = QExpansion::make(x, std::move(a));
  return sol;
}

QExpansion residual(const MonicMLDE& m, const QExpansion& u) {
  check_supported_order(m, "residual");
  int n = u.order();
  QExpansion r = iterate_D0(u, m.order);
  if (m.order >= 2)
    r = r.add(eisenstein(4, n).scale(m.kappa).mul(iterate_D0(u, m.order - 2)));
  if (m.order >= 3)
    r = r.add(eisenstein(6, n).scale(m.lambda).mul(iterate_D0(u, m.order - 3)));
  return r;
}

namespace {

// Reduced fractions p/d, d <= dmax, lo <= p/d <= hi, ascending.
std::vector<Rational> farey_grid(int dmax, const Rational& lo, const Rational& hi) {
  std::vector<Rational> out;
  for (int d = 1; d <= dmax; ++d) {
    mpz_class pmin, pmax;
    // ceil(lo*d), floor(hi*d)
    mpz_class num = lo.get_num() * d, den = lo.get_den();
    mpz_cdiv_q(pmin.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    num = hi.get_num() * d;
    den = hi.get_den();
    mpz_fdiv_q(pmax.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    for (mpz_class p = pmin; p <= pmax; ++p) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), mpz_class(d).get_mpz_t());
      if (g != 1) continue;
      Rational r(p, d);
      r.canonicalize();
      out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Streaming criteria check of one grid point: solves every exponent,
// aborting as soon as a criterion fails.
ScanCandidate evaluate_grid_point(const std::vector<Rational>& exps,
                                  const ScanCriteria& crit) {
  ScanCandidate cand;
  cand.exponents = exps;
  std::sort(cand.exponents.begin(), cand.exponents.end());
  Rational xmin = cand.exponents.front();
  cand.central_charge = -24 * xmin;
  for (const auto& x : cand.exponents)
    cand.conformal_weights.push_back(x - xmin);
  cand.coefficients_checked = crit.terms;

  MonicMLDE m = mlde_from_exponents(static_cast<int>(exps.size()),
                                    cand.exponents, crit.terms);
  std::vector<QExpansion> op = theta_form(m, crit.terms);
  auto G = [&](int j, const Rational& t) {
    Rational r(0), tp(1);
    for (size_t k = 0; k < op.size(); ++k) {
      r += op[k].coeff_at(Rational(j)) * tp;
      tp *= t;
    }
    return r;
  };

  for (const auto& x : cand.exponents) {
    std::vector<Rational> a{Rational(1)};
    mpz_class clear_den(1);
    for (int s = 1; s <= crit.terms; ++s) {
      Rational lead = G(0, x + s);
      if (lead == 0) {
        cand.verdict = "rejected(resonance at step " + std::to_string(s) + ")";
        return cand;
      }
      Rational rhs(0);
      for (int mm = 0; mm < s; ++mm) rhs += a[mm] * G(s - mm, x + mm);
      Rational an = -rhs / lead;
      if (crit.require_nonnegative && an < 0) {
        cand.verdict = "rejected(negative coefficient at q^" +
                       rational_str(x + s) + ")";
        return cand;
      }
      mpz_class g, den = an.get_den();
      mpz_gcd(g.get_mpz_t(), clear_den.get_mpz_t(), den.get_mpz_t());
      clear_den = clear_den / g * den;
      if (clear_den > crit.max_clearing_denominator) {
        cand.verdict = "rejected(denominator overflow at q^" +
                       rational_str(x + s) + ")";
        return cand;
      }
      a.push_back(std::move(an));
    }
    cand.clearing_denominators.push_back(clear_den);
  }
  cand.verdict = "positive-integral";
  return cand;
}

}  // namespace

std::vector<ScanCandidate> scan_characters(const ScanOptions& opts) {
  if (opts.order != 2 && opts.order != 3)
    throw std::invalid_argument("scan_characters: order must be 2 or 3");
  std::vector<Rational> grid = farey_grid(opts.max_denominator, opts.lo, opts.hi);

  // Enumerate exponent tuples with the forced sum.
  std::vector<std::vector<Rational>> points;
  if (opts.order == 2) {
    for (const auto& x : grid) {
      Rational x2 = frac(1, 6) - x;
      if (x == x2) continue;  // degenerate
      if (x > x2) continue;   // keep x = min exponent, no duplicates
      points.push_back({x, x2});
    }
  } else {
    for (size_t i = 0; i < grid.size(); ++i)
      for (size_t j = i; j < grid.size(); ++j) {
        Rational x3 = frac(1, 2) - grid[i] - grid[j];
        if (x3 < grid[j]) continue;  // enforce sorted tuples, no duplicates
        if (grid[i] == grid[j] || grid[j] == x3) continue;  // degenerate
        // x3 must itself respect the denominator bound.
        if (x3.get_den() > opts.max_denominator) continue;
        points.push_back({grid[i], grid[j], x3});
      }
  }

  std::vector<ScanCandidate> results(points.size());
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < points.size(); ++i)
      results[i] = evaluate_grid_point(points[i], opts.criteria);
  } else {
    std::vector<std::thread> workers;
    std::atomic<size_t> next{0};
    for (int t = 0; t < jobs; ++t)
      workers.emplace_back([&]() {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= points.size()) return;
          results[i] = evaluate_grid_point(points[i], opts.criteria);
        }
      });
    for (auto& w : workers) w.join();
  }

  std::vector<ScanCandidate> out;
  for (auto& c : results)
    if (opts.keep_rejected || c.verdict == "positive-integral")
      out.push_back(std::move(c));
  // Deterministic order regardless of execution schedule.
  std::sort(out.begin(), out.end(),
            [](const ScanCandidate& a, const ScanCandidate& b) {
              return a.exponents < b.exponents;
            });
  return out;
}

}  // namespace vrw
