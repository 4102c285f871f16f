#pragma once

// Monic modular linear differential equations
//   order 2: (D_0^2 + kappa E_4) u = 0
//   order 3: (D_0^3 + kappa E_4 D_0 + lambda E_6) u = 0
// with indicial analysis, Frobenius series solutions, residual verification,
// and the two/three-character candidate scan.

#include "vrw/modular_forms.hpp"

namespace vrw {

struct MonicMLDE {
  int order = 2;        // n; solving and scanning support n in {2, 3}
  Rational kappa = 0;   // coefficient of E_4 D_0^{n-2}
  Rational lambda = 0;  // coefficient of E_6 D_0^{n-3} (order >= 3)
  int truncation = 40;  // default series length
};

// Coefficients (low degree first) of the degree-n polynomial in x whose
// roots are the allowed leading exponents. Valid for any order n >= 1.
std::vector<Rational> indicial_polynomial(const MonicMLDE& m);

Rational poly_eval(const std::vector<Rational>& p, const Rational& x);

// Roots of the indicial polynomial among a supplied candidate set, or for
// order 2 the exact roots via the quadratic formula when rational.
std::vector<Rational> indicial_roots_order2(const MonicMLDE& m);

// Recover (kappa[, lambda]) from prescribed exponents; the exponent sum must
// equal n(n-1)/12 exactly (reported with both sides otherwise).
MonicMLDE mlde_from_exponents(int order, const std::vector<Rational>& exponents,
                              int truncation = 40);

struct FrobeniusSolution {
  Rational exponent;
  QExpansion series;       // leading exponent = exponent, a_0 = 1
  bool resonance = false;  // recursion hit a vanishing leading factor
  int resonance_step = -1; // step m at which it stopped (series is partial)
};

// Series solution at indicial root x with N tail terms; throws
// std::invalid_argument if x is not an exact indicial root.
FrobeniusSolution frobenius_solve(const MonicMLDE& m, const Rational& x, int n_terms);

// Exact application of the operator via iterate_D0/eisenstein; zero iff u
// solves the MLDE to its order. Independent of the recursion in
// frobenius_solve.
QExpansion residual(const MonicMLDE& m, const QExpansion& u);

struct ScanCriteria {
  int terms = 40;                // tail coefficients checked per solution
  bool require_nonnegative = true;
  // Coefficients must become non-negative integers after multiplying by a
  // single positive integer <= this cap (1 = already integers). There is no
  // canonical pruning rule, so the cap stays configurable.
  mpz_class max_clearing_denominator = 1000;
};

struct ScanCandidate {
  std::vector<Rational> exponents;  // sorted ascending
  Rational central_charge;          // c = -24 * min exponent
  std::vector<Rational> conformal_weights;  // h_i = x_i + c/24
  std::vector<mpz_class> clearing_denominators;  // per solution
  int coefficients_checked = 0;
  std::string verdict;              // "positive-integral" or "rejected(...)"
};

struct ScanOptions {
  int order = 2;
  int max_denominator = 60;  // exponent grid denominator bound
  Rational lo = Rational(-1);     // grid range for the smallest exponent
  Rational hi = frac(1, 12);
  ScanCriteria criteria;
  int jobs = 1;
  bool keep_rejected = false;  // include rejected grid points in the output
};

// Scans exponent grids with the forced-sum constraint, solves all Frobenius
// solutions per grid point, and applies the criteria. Results are sorted by
// exponent tuple; an empty result is valid.
std::vector<ScanCandidate> scan_characters(const ScanOptions& opts);

}  // namespace vrw
