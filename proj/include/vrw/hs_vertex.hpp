#pragma once

// Hasse-Schmidt derivations on the truncated polynomial carrier k[t]/(t^{M+1}),
// the F-twisted composition law, and the vertex structure
// Y(u, z)v = sum_n D_n(u) v z^n built from a derivation.
//
// Truncation convention: all identity checks are graded by total degree in
// (t, formal variables) at the carrier cap M. A comparison attached to
// formal-variable exponents of total weight w inspects t-degrees <= M - w
// only; that is exactly equality in the quotient ring k[[t, vars]] modulo
// total degree > M, where every identity here lives.

#include <random>

#include "vrw/exact_algebra.hpp"
#include "vrw/fgl.hpp"

namespace vrw {

// The carrier ring k[t]/(t^{M+1}); elements are TruncSeries of order M.
struct PolyCarrier {
  Ring base;
  int degree_cap;  // M

  TruncSeries zero() const { return TruncSeries::zero(base, degree_cap); }
  TruncSeries one() const {
    return TruncSeries::constant(base, degree_cap, base.one());
  }
  TruncSeries monomial(int j, const Rational& c = Rational(1)) const;
  TruncSeries t() const { return monomial(1); }
  TruncSeries random_element(std::mt19937_64& rng, int max_degree = -1) const;
  bool operator==(const PolyCarrier& o) const {
    return base == o.base && degree_cap == o.degree_cap;
  }
};

// D = (D_0, D_1, ..., D_depth) as base-ring-linear maps on the carrier,
// stored through images of the monomial basis.
class HSDerivation {
 public:
  // images[m][j] = D_m(t^j), m = 0..depth, j = 0..cap. D_0 rows may be
  // anything (checkers verify D_0 = id rather than assuming it).
  static HSDerivation from_images(PolyCarrier carrier,
                                  std::vector<std::vector<TruncSeries>> images);
  // The zero-tail derivation: D_0 = id, D_m = 0 for m >= 1.
  static HSDerivation zero_tail(PolyCarrier carrier, int depth);

  const PolyCarrier& carrier() const { return carrier_; }
  int depth() const { return static_cast<int>(img_.size()) - 1; }
  const TruncSeries& image(int m, int j) const { return img_[m][j]; }

  // D_m(u) by linear extension from the basis images.
  TruncSeries apply(int m, const TruncSeries& u) const;

  // Copy with D_m(t^j) replaced by D_m(t^j) + delta.
  HSDerivation mutated(int m, int basis_j, const TruncSeries& delta) const;

 private:
  HSDerivation(PolyCarrier carrier, std::vector<std::vector<TruncSeries>> img)
      : carrier_(std::move(carrier)), img_(std::move(img)) {}
  PolyCarrier carrier_;
  std::vector<std::vector<TruncSeries>> img_;
};

// The canonical example family: D_m(u) = coefficient of X^m in u(t +_F X),
// computed in the total-degree quotient at the carrier cap. For F = F_a this
// is the divided-power derivation D_m(t^n) = C(n, m) t^{n-m}. Requires
// F.order >= carrier cap so the twisted translation is known that far.
HSDerivation translation_derivation(const FormalGroupLaw& f,
                                    const PolyCarrier& carrier, int depth = -1);

struct HsCheckFailure {
  std::vector<int> indices;  // (m) / (i, j) / (m, n) depending on the check
  std::string element;       // the carrier element(s) exhibiting the failure
  std::string lhs, rhs;
};

struct HsReport {
  std::string check;
  bool pass = false;
  std::optional<HsCheckFailure> first_failure;
};

// D_0 = id, D_m(1) = 0, and the Leibniz rule on monomial pairs plus
// `samples` random pairs.
HsReport check_hs_axioms(const HSDerivation& d, int samples = 20,
                         unsigned long seed = 1);

// Iterativity D_i . D_j = C(i+j, i) D_{i+j}, i + j <= depth.
HsReport check_iterative(const HSDerivation& d, int samples = 10,
                         unsigned long seed = 1);

// The F-twisted law: sum_{i,j} D_j(D_i(u)) X^i Y^j = sum_n D_n(u) (X +_F Y)^n.
HsReport check_f_derivation(const HSDerivation& d, const FormalGroupLaw& f,
                            int samples = 10, unsigned long seed = 1);

// A derivation with its vertex operators Y(u, z)v = sum D_n(u) v z^n and an
// optional FGL twisting the associativity law (absent = additive case).
struct VertexStructure {
  PolyCarrier carrier;
  HSDerivation derivation;
  std::optional<FormalGroupLaw> fgl;
};

// The structure's FGL, or the additive law when none is attached.
FormalGroupLaw vertex_law(const VertexStructure& v);

// Y(u, z)v as a polynomial in z with carrier coefficients.
struct CarrierSeries {
  std::vector<TruncSeries> coeffs;  // index = power of z
  std::string str(const std::string& var = "z") const;
};

CarrierSeries vertex_Y(const VertexStructure& v, const TruncSeries& u,
                       const TruncSeries& w);

// Y(Y(a, z)b, w)c = Y(a, z +_F w) Y(b, w)c as bivariate series in (z, w).
HsReport check_f_weak_associativity(const VertexStructure& v,
                                    const TruncSeries& a, const TruncSeries& b,
                                    const TruncSeries& c);

struct Eq34Report {
  HsReport base;              // the N = 0 comparison
  std::optional<int> least_n; // least N <= n_max making the truncated identity hold
  std::vector<bool> holds_at; // verdict per N = 0..n_max
};

// Multiplies both sides of the weak-associativity comparison by
// (z +_F w)^N, N = 0..n_max. Exploratory: a discrepancy of total degree d
// leaves the truncation window once d + N exceeds the depth.
Eq34Report check_eq34_conjecture(const VertexStructure& v, const TruncSeries& a,
                                 const TruncSeries& b, const TruncSeries& c,
                                 int n_max);

}  // namespace vrw
