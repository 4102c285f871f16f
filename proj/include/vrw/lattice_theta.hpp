#pragma once

// Integral positive-definite lattices with exact short-vector enumeration,
// genus-1 theta series, the lattice character theta_L / eta^rank, and the
// genus-2 theta table in (q1, q2, r).

#include <map>
#include <tuple>

#include "vrw/modular_forms.hpp"

namespace vrw {

class Lattice {
 public:
  // Validates symmetry and positive-definiteness (exact minor test).
  static Lattice from_gram(std::vector<std::vector<long>> gram,
                           std::string model = "");
  // Built-ins: A1, E8, D16plus, E8_plus_E8, sqrt2_E8.
  static Lattice builtin(const std::string& name);

  int rank() const { return static_cast<int>(gram_.size()); }
  const std::vector<std::vector<long>>& gram() const { return gram_; }
  const std::string& model() const { return model_; }
  // Exact determinant of the gram matrix.
  mpz_class determinant() const;
  // True when every vector norm is even (all diagonal entries even).
  bool is_even() const;

 private:
  std::vector<std::vector<long>> gram_;
  std::string model_;
};

struct ShortVectors {
  // norm (alpha, alpha) -> number of vectors, all norms <= the bound.
  std::map<long, unsigned long long> counts;
  // Present when requested; one representative per +-pair plus 0.
  std::optional<std::vector<std::vector<long>>> vectors;
  unsigned long long total() const;
};

// Depth-first enumeration with completed-square pruning on the gram matrix;
// counts are exact (each candidate's norm is re-checked in integers).
ShortVectors short_vectors(const Lattice& l, long norm_bound,
                           bool collect_vectors = false);

struct LatticeSeries {
  QExpansion series;
  // When set, the series variable is q^{1/2} (odd-norm lattices).
  bool half_step = false;
};

// theta_L = sum_alpha q^{(alpha,alpha)/2} through q^N.
LatticeSeries theta_genus1(const Lattice& l, int n_terms);

// theta_L / eta^rank, leading exponent -rank/24.
LatticeSeries lattice_character(const Lattice& l, int n_terms);

// Exact genus-2 table: key (na, nb, c) with na = (alpha,alpha),
// nb = (beta,beta), c = (alpha,beta); the monomial is q1^{na/2} q2^{nb/2} r^c.
struct ThetaGenus2 {
  std::map<std::tuple<long, long, long>, unsigned long long> counts;
  long a_max = 0, b_max = 0;  // bounds on na/2 and nb/2
  unsigned long long count_at(long na, long nb, long c) const;
};

// All pairs with (alpha,alpha)/2 <= a_max and (beta,beta)/2 <= b_max, binned
// by (na, nb, c). Throws when the pair count would exceed max_pairs.
ThetaGenus2 theta_genus2(const Lattice& l, long a_max, long b_max,
                         unsigned long long max_pairs = 50'000'000ull);

struct ThetaGenus2Diagonal {
  // (na, nb) -> sum over c of the table counts.
  std::map<std::pair<long, long>, unsigned long long> collapsed;
  // Collapsed counts factor as theta(na) * theta(nb), read off the table's
  // own b = 0 and a = 0 margins.
  bool matches_product = false;
};

// The r = 1 (Omega_12 = 0) specialization, where the table must collapse to
// the product of two genus-1 series.
ThetaGenus2Diagonal theta_genus2_specialize(const ThetaGenus2& t);

}  // namespace vrw
