#include "vrw/lattice_theta.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace vrw {

namespace {

// Exact leading principal minors via rational Gaussian elimination.
std::vector<Rational> principal_minors(const std::vector<std::vector<long>>& g) {
  size_t n = g.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = g[i][j];
  std::vector<Rational> minors;
  Rational det(1);
  for (size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      // A PD matrix never needs pivoting; a zero pivot means not PD.
      minors.push_back(Rational(0));
      return minors;
    }
    det *= a[k][k];
    minors.push_back(det);
    for (size_t i = k + 1; i < n; ++i) {
      Rational f = a[i][k] / a[k][k];
      for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return minors;
}

// Coordinate model of D_n^+ (integer vectors with even coordinate sum plus
// the all-halves coset), for even n. Basis: e_1 + e_2, then the chain
// e_i - e_{i+1} for i = 1..n-2, then the glue vector (1/2, ..., 1/2). The
// gram is integral when 8 | n.
std::vector<std::vector<long>> dn_plus_gram(int n) {
  // Work with doubled coordinates so everything stays integral.
  std::vector<std::vector<long>> basis2;
  {
    std::vector<long> v(n, 0);
    v[0] = 2;
    v[1] = 2;
    basis2.push_back(v);
  }
  for (int i = 0; i + 2 < n; ++i) {
    std::vector<long> v(n, 0);
    v[i] = 2;
    v[i + 1] = -2;
    basis2.push_back(v);
  }
  basis2.push_back(std::vector<long>(n, 1));
  std::vector<std::vector<long>> g(n, std::vector<long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long dot = 0;
      for (int k = 0; k < n; ++k) dot += basis2[i][k] * basis2[j][k];
      if (dot % 4 != 0) throw std::logic_error("non-integral D_n^+ gram");
      g[i][j] = dot / 4;
    }
  return g;
}

std::vector<std::vector<long>> block_diag(const std::vector<std::vector<long>>& a,
                                          const std::vector<std::vector<long>>& b) {
  size_t n = a.size(), m = b.size();
  std::vector<std::vector<long>> g(n + m, std::vector<long>(n + m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) g[i][j] = a[i][j];
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) g[n + i][n + j] = b[i][j];
  return g;
}

}  // namespace

Lattice Lattice::from_gram(std::vector<std::vector<long>> gram, std::string model) {
  size_t n = gram.size();
  for (const auto& row : gram)
    if (row.size() != n)
      throw std::invalid_argument("gram matrix must be square");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (gram[i][j] != gram[j][i])
        throw std::invalid_argument("gram matrix must be symmetric");
  for (const auto& m : principal_minors(gram))
    if (m <= 0)
      throw std::invalid_argument("gram matrix is not positive definite");
  Lattice l;
  l.gram_ = std::move(gram);
  l.model_ = std::move(model);
  return l;
}

Lattice Lattice::builtin(const std::string& name) {
  if (name == "A1") return from_gram({{2}}, "A1");
  if (name == "E8") return from_gram(dn_plus_gram(8), "E8");
  if (name == "D16plus") return from_gram(dn_plus_gram(16), "D16plus");
  if (name == "E8_plus_E8")
    return from_gram(block_diag(dn_plus_gram(8), dn_plus_gram(8)), "E8_plus_E8");
  if (name == "sqrt2_E8") {
    auto g = dn_plus_gram(8);
    for (auto& row : g)
      for (auto& v : row) v *= 2;
    return from_gram(std::move(g), "sqrt2_E8");
  }
  throw std::invalid_argument("unknown builtin lattice: " + name);
}

mpz_class Lattice::determinant() const {
  if (gram_.empty()) return 1;
  auto minors = principal_minors(gram_);
  Rational d = minors.back();
  if (d.get_den() != 1) throw std::logic_error("non-integral determinant");
  return d.get_num();
}

bool Lattice::is_even() const {
  for (size_t i = 0; i < gram_.size(); ++i)
    if (gram_[i][i] % 2 != 0) return false;
  return true;
}

unsigned long long ShortVectors::total() const {
  unsigned long long t = 0;
  for (const auto& [norm, c] : counts) t += c;
  return t;
}

namespace {

struct Enumerator {
  int n;
  const std::vector<std::vector<long>>* g;
  long bound;
  std::vector<std::vector<double>> l;  // completed-square coefficients
  std::vector<double> d;
  bool collect = false;
  std::map<long, unsigned long long> counts;
  std::vector<std::vector<long>> vectors;
  std::vector<long> x;

  void prepare() {
    // Exact LDL^T in rationals, then rounded to doubles for traversal
    // bounds; every accepted vector is re-verified with integer arithmetic.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = (*g)[i][j];
    std::vector<std::vector<Rational>> lr(n, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> dr(n);
    for (int i = 0; i < n; ++i) {
      Rational di = a[i][i];
      for (int k = 0; k < i; ++k)
        di -= dr[k] * lr[k][i] * lr[k][i];
      dr[i] = di;
      if (di <= 0) throw std::logic_error("LDL of non-PD matrix");
      for (int j = i + 1; j < n; ++j) {
        Rational v = a[i][j];
        for (int k = 0; k < i; ++k) v -= dr[k] * lr[k][i] * lr[k][j];
        lr[i][j] = v / di;
      }
    }
    l.assign(n, std::vector<double>(n, 0.0));
    d.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
      d[i] = dr[i].get_d();
      for (int j = i + 1; j < n; ++j) l[i][j] = lr[i][j].get_d();
    }
    x.assign(n, 0);
  }

  void record(long norm, bool nonzero) {
    counts[norm] += nonzero ? 2 : 1;
    if (collect) {
      vectors.push_back(x);
      if (nonzero) {
        std::vector<long> neg(x);
        for (auto& v : neg) v = -v;
        vectors.push_back(std::move(neg));
      }
    }
  }

  // Levels run from n-1 down to 0; sign-canonical vectors only (the
  // outermost nonzero coordinate is positive), counted twice.
  void descend(int i, double budget, long exact_partial, bool still_zero) {
    if (i < 0) {
      if (exact_partial <= bound) record(exact_partial, !still_zero);
      return;
    }
    double c = 0.0;
    for (int j = i + 1; j < n; ++j) c += l[i][j] * x[j];
    double radius = std::sqrt(std::max(budget, 0.0) / d[i]) + 1e-7;
    long lo = static_cast<long>(std::ceil(-c - radius - 1e-7));
    long hi = static_cast<long>(std::floor(-c + radius + 1e-7));
    if (still_zero && lo < 0) lo = 0;
    long rowsum = 0;
    for (int j = i + 1; j < n; ++j) rowsum += (*g)[i][j] * x[j];
    for (long v = lo; v <= hi; ++v) {
      x[i] = v;
      // Exact suffix value of the form; the double budget only prunes.
      long delta = (*g)[i][i] * v * v + 2 * v * rowsum;
      double used = d[i] * (v + c) * (v + c);
      descend(i - 1, budget - used, exact_partial + delta, still_zero && v == 0);
    }
    x[i] = 0;
  }

  void run() {
    prepare();
    descend(n - 1, static_cast<double>(bound) + 1e-6, 0, true);
  }
};

}  // namespace

ShortVectors short_vectors(const Lattice& lat, long norm_bound,
                           bool collect_vectors) {
  if (norm_bound < 0) throw std::invalid_argument("short_vectors: negative bound");
  ShortVectors out;
  if (lat.rank() == 0) {
    out.counts[0] = 1;
    if (collect_vectors) out.vectors = {std::vector<long>{}};
    return out;
  }
  Enumerator e;
  e.n = lat.rank();
  e.g = &lat.gram();
  e.bound = norm_bound;
  e.collect = collect_vectors;
  e.run();
  out.counts = std::move(e.counts);
  if (collect_vectors) out.vectors = std::move(e.vectors);
  return out;
}

namespace {

// Connected components of the gram matrix (orthogonal block structure).
std::vector<std::vector<int>> gram_components(const std::vector<std::vector<long>>& g) {
  int n = static_cast<int>(g.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      members.push_back(i);
      for (int j = 0; j < n; ++j)
        if (g[i][j] != 0 && comp[j] == -1) {
          comp[j] = comp[s];
          stack.push_back(j);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::map<long, unsigned long long> counts_by_norm(const Lattice& l, long bound) {
  auto comps = gram_components(l.gram());
  if (comps.size() <= 1 || l.rank() == 0)
    return short_vectors(l, bound).counts;
  // Orthogonal sum: convolve the component counts.
  std::map<long, unsigned long long> acc{{0, 1}};
  for (const auto& members : comps) {
    std::vector<std::vector<long>> sub(members.size(),
                                       std::vector<long>(members.size()));
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = 0; j < members.size(); ++j)
        sub[i][j] = l.gram()[members[i]][members[j]];
    auto part = short_vectors(Lattice::from_gram(std::move(sub)), bound).counts;
    std::map<long, unsigned long long> next;
    for (const auto& [n1, c1] : acc)
      for (const auto& [n2, c2] : part)
        if (n1 + n2 <= bound) next[n1 + n2] += c1 * c2;
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

LatticeSeries theta_genus1(const Lattice& l, int n_terms) {
  if (n_terms < 0) throw std::invalid_argument("theta_genus1: negative order");
  auto counts = counts_by_norm(l, 2L * n_terms);
  bool odd = false;
  for (const auto& [norm, c] : counts)
    if (norm % 2 != 0) odd = true;
  LatticeSeries out;
  if (!odd) {
    std::vector<Rational> tail(n_terms + 1, Rational(0));
    for (const auto& [norm, c] : counts) tail[norm / 2] = Rational(static_cast<unsigned long>(c));
    out.series = QExpansion::make(Rational(0), std::move(tail));
  } else {
    // Half-integer exponents: expand in the variable u = q^{1/2}.
    std::vector<Rational> tail(2 * n_terms + 1, Rational(0));
    for (const auto& [norm, c] : counts) tail[norm] = Rational(static_cast<unsigned long>(c));
    out.series = QExpansion::make(Rational(0), std::move(tail));
    out.half_step = true;
  }
  return out;
}

LatticeSeries lattice_character(const Lattice& l, int n_terms) {
  LatticeSeries th = theta_genus1(l, n_terms);
  if (l.rank() == 0) return th;
  LatticeSeries out;
  if (!th.half_step) {
    out.series = th.series.mul(eta_power(-l.rank(), n_terms));
  } else {
    out.series = th.series.mul(eta_power(-l.rank(), n_terms).stretched(2));
    out.half_step = true;
  }
  return out;
}

unsigned long long ThetaGenus2::count_at(long na, long nb, long c) const {
  auto it = counts.find({na, nb, c});
  return it == counts.end() ? 0 : it->second;
}

ThetaGenus2 theta_genus2(const Lattice& l, long a_max, long b_max,
                         unsigned long long max_pairs) {
  if (a_max < 0 || b_max < 0)
    throw std::invalid_argument("theta_genus2: negative bounds");
  auto alphas = short_vectors(l, 2 * a_max, true);
  auto betas = (a_max == b_max) ? alphas : short_vectors(l, 2 * b_max, true);
  const auto& va = *alphas.vectors;
  const auto& vb = *betas.vectors;
  unsigned long long pairs =
      static_cast<unsigned long long>(va.size()) * vb.size();
  if (pairs > max_pairs) {
    std::ostringstream os;
    os << "theta_genus2: " << pairs << " pairs exceed the enumeration budget "
       << max_pairs;
    throw std::runtime_error(os.str());
  }
  int n = l.rank();
  const auto& g = l.gram();
  auto norm_of = [&](const std::vector<long>& v) {
    long s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += v[i] * g[i][j] * v[j];
    return s;
  };
  // Precompute G*beta and norms.
  std::vector<long> nb_norm(vb.size());
  std::vector<std::vector<long>> gb(vb.size(), std::vector<long>(n, 0));
  for (size_t b = 0; b < vb.size(); ++b) {
    nb_norm[b] = norm_of(vb[b]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) gb[b][i] += g[i][j] * vb[b][j];
  }
  ThetaGenus2 out;
  out.a_max = a_max;
  out.b_max = b_max;
  for (const auto& a : va) {
    long na = norm_of(a);
    for (size_t b = 0; b < vb.size(); ++b) {
      long c = 0;
      for (int i = 0; i < n; ++i) c += a[i] * gb[b][i];
      ++out.counts[{na, nb_norm[b], c}];
    }
  }
  return out;
}

ThetaGenus2Diagonal theta_genus2_specialize(const ThetaGenus2& t) {
  ThetaGenus2Diagonal out;
  for (const auto& [key, c] : t.counts) {
    auto [na, nb, ip] = key;
    (void)ip;
    out.collapsed[{na, nb}] += c;
  }
  out.matches_product = true;
  // Genus-1 margins live inside the table itself: beta = 0 forces (na, 0, 0).
  for (const auto& [key, c] : out.collapsed) {
    auto [na, nb] = key;
    unsigned long long lhs = c;
    unsigned long long rhs = t.count_at(na, 0, 0) * t.count_at(0, nb, 0);
    if (lhs != rhs) {
      out.matches_product = false;
      break;
    }
  }
  return out;
}

}  // namespace vrw
