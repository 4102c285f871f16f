#include "vrw/hs_vertex.hpp"

#include <sstream>

namespace vrw {

namespace {

// Compare a and b through t-degree max_deg (inclusive); a negative budget
// compares nothing.
bool equal_through(const TruncSeries& a, const TruncSeries& b, int max_deg) {
  for (int d = 0; d <= max_deg; ++d)
    if (a.coeff(d) != b.coeff(d)) return false;
  return true;
}

std::string pair_str(const TruncSeries& u, const TruncSeries& v) {
  return "u=" + u.str("t") + "; v=" + v.str("t");
}

}  // namespace

TruncSeries PolyCarrier::monomial(int j, const Rational& c) const {
  if (j < 0 || j > degree_cap)
    throw std::out_of_range("carrier monomial degree out of range");
  return zero().with_coeff(j, c);
}

TruncSeries PolyCarrier::random_element(std::mt19937_64& rng, int max_degree) const {
  if (max_degree < 0 || max_degree > degree_cap) max_degree = degree_cap;
  TruncSeries u = zero();
  if (base.kind() == RingKind::mod_n && base.modulus().fits_ulong_p()) {
    std::uniform_int_distribution<unsigned long> dist(
        0, base.modulus().get_ui() - 1);
    for (int d = 0; d <= max_degree; ++d)
      u = u.with_coeff(d, Rational(dist(rng)));
  } else {
    std::uniform_int_distribution<int> dist(-4, 4);
    for (int d = 0; d <= max_degree; ++d)
      u = u.with_coeff(d, base.canon(Rational(dist(rng))));
  }
  return u;
}

HSDerivation HSDerivation::from_images(
    PolyCarrier carrier, std::vector<std::vector<TruncSeries>> images) {
  if (images.empty()) throw std::invalid_argument("HSDerivation: no images");
  for (const auto& row : images) {
    if (static_cast<int>(row.size()) != carrier.degree_cap + 1)
      throw std::invalid_argument("HSDerivation: need one image per basis monomial");
    for (const auto& im : row) require_same_ring(im.ring(), carrier.base, "HSDerivation");
  }
  return HSDerivation(std::move(carrier), std::move(images));
}

HSDerivation HSDerivation::zero_tail(PolyCarrier carrier, int depth) {
  std::vector<std::vector<TruncSeries>> img;
  for (int m = 0; m <= depth; ++m) {
    std::vector<TruncSeries> row;
    for (int j = 0; j <= carrier.degree_cap; ++j)
      row.push_back(m == 0 ? carrier.monomial(j) : carrier.zero());
    img.push_back(std::move(row));
  }
  return HSDerivation(std::move(carrier), std::move(img));
}

TruncSeries HSDerivation::apply(int m, const TruncSeries& u) const {
  if (m < 0 || m > depth())
    throw std::out_of_range("HSDerivation: index beyond computed depth");
  TruncSeries r = carrier_.zero();
  for (int j = 0; j <= carrier_.degree_cap; ++j) {
    const Rational& uj = u.coeff(j);
    if (uj == 0) continue;
    r = r.add(img_[m][j].scale(uj));
  }
  return r;
}

HSDerivation HSDerivation::mutated(int m, int basis_j,
                                   const TruncSeries& delta) const {
  if (m < 0 || m > depth() || basis_j < 0 || basis_j > carrier_.degree_cap)
    throw std::out_of_range("HSDerivation::mutated: index out of range");
  auto img = img_;
  img[m][basis_j] = img[m][basis_j].add(delta);
  return HSDerivation(carrier_, std::move(img));
}

HSDerivation translation_derivation(const FormalGroupLaw& f,
                                    const PolyCarrier& carrier, int depth) {
  require_same_ring(f.ring(), carrier.base, "translation_derivation");
  int cap = carrier.degree_cap;
  if (f.order() < cap)
    throw std::invalid_argument(
        "translation_derivation: FGL order must reach the carrier cap");
  if (depth < 0) depth = std::min({cap, f.order(), 8});
  if (depth > cap)
    throw std::invalid_argument("translation_derivation: depth exceeds carrier cap");
  // t +_F X in the total-degree quotient at the cap; first index = t-degree,
  // second = X-degree.
  BivariateSeries s = f.body().truncated(cap);
  std::vector<std::vector<TruncSeries>> img(
      depth + 1, std::vector<TruncSeries>(cap + 1, carrier.zero()));
  BivariateSeries spow = BivariateSeries::constant(carrier.base, cap, carrier.base.one());
  for (int j = 0; j <= cap; ++j) {
    for (int m = 0; m <= depth; ++m) {
      TruncSeries d = carrier.zero();
      for (int i = 0; i + m <= cap; ++i) d = d.with_coeff(i, spow.coeff(i, m));
      img[m][j] = d;
    }
    if (j < cap) spow = spow.mul(s);
  }
  return HSDerivation::from_images(carrier, std::move(img));
}

HsReport check_hs_axioms(const HSDerivation& d, int samples, unsigned long seed) {
  HsReport rep;
  rep.check = "hs-axioms";
  const PolyCarrier& car = d.carrier();
  int cap = car.degree_cap;

  auto fail = [&](std::vector<int> idx, std::string elem, const TruncSeries& lhs,
                  const TruncSeries& rhs) {
    rep.pass = false;
    rep.first_failure = HsCheckFailure{std::move(idx), std::move(elem),
                                       lhs.str("t"), rhs.str("t")};
  };

  // D_0 = id on the basis.
  for (int j = 0; j <= cap; ++j) {
    TruncSeries tj = car.monomial(j);
    if (!(d.image(0, j) == tj)) {
      fail({0}, tj.str("t"), d.image(0, j), tj);
      return rep;
    }
  }
  // D_m(1) = 0 for m >= 1.
  for (int m = 1; m <= d.depth(); ++m) {
    TruncSeries v = d.apply(m, car.one());
    if (!equal_through(v, car.zero(), cap - m)) {
      fail({m}, "1", v, car.zero());
      return rep;
    }
  }
  // Leibniz on monomial pairs, then random samples.
  auto leibniz_ok = [&](const TruncSeries& u, const TruncSeries& v) -> bool {
    TruncSeries uv = series_mul(u, v);
    for (int m = 0; m <= d.depth(); ++m) {
      TruncSeries lhs = d.apply(m, uv);
      TruncSeries rhs = car.zero();
      for (int i = 0; i <= m; ++i)
        rhs = rhs.add(series_mul(d.apply(i, u), d.apply(m - i, v)));
      if (!equal_through(lhs, rhs, cap - m)) {
        fail({m}, pair_str(u, v), lhs, rhs);
        return false;
      }
    }
    return true;
  };
  for (int i = 0; i <= cap; ++i)
    for (int j = i; j <= cap; ++j)
      if (!leibniz_ok(car.monomial(i), car.monomial(j))) return rep;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s)
    if (!leibniz_ok(car.random_element(rng), car.random_element(rng))) return rep;

  rep.pass = true;
  return rep;
}

HsReport check_iterative(const HSDerivation& d, int samples, unsigned long seed) {
  HsReport rep;
  rep.check = "iterative";
  const PolyCarrier& car = d.carrier();
  int cap = car.degree_cap;
  std::mt19937_64 rng(seed);

  std::vector<TruncSeries> elems;
  for (int j = 0; j <= cap; ++j) elems.push_back(car.monomial(j));
  for (int s = 0; s < samples; ++s) elems.push_back(car.random_element(rng));

  for (int i = 0; i <= d.depth(); ++i)
    for (int j = 0; i + j <= d.depth(); ++j) {
      Rational binom = car.base.canon(Rational(binomial(i + j, i)));
      for (const auto& u : elems) {
        TruncSeries lhs = d.apply(i, d.apply(j, u));
        TruncSeries rhs = d.apply(i + j, u).scale(binom);
        if (!equal_through(lhs, rhs, cap - i - j)) {
          rep.pass = false;
          rep.first_failure =
              HsCheckFailure{{i, j}, u.str("t"), lhs.str("t"), rhs.str("t")};
          return rep;
        }
      }
    }
  rep.pass = true;
  return rep;
}

HsReport check_f_derivation(const HSDerivation& d, const FormalGroupLaw& f,
                            int samples, unsigned long seed) {
  HsReport rep;
  rep.check = "f-derivation";
  require_same_ring(d.carrier().base, f.ring(), "check_f_derivation");
  const PolyCarrier& car = d.carrier();
  int cap = car.degree_cap;
  int depth = d.depth();
  if (f.order() < depth)
    throw std::invalid_argument("check_f_derivation: depth exceeds FGL order");

  // Powers of X +_F Y to total degree = depth.
  std::vector<BivariateSeries> gpow;
  BivariateSeries g = f.body().truncated(depth);
  gpow.push_back(BivariateSeries::constant(car.base, depth, car.base.one()));
  for (int n = 1; n <= depth; ++n) gpow.push_back(gpow.back().mul(g));

  std::mt19937_64 rng(seed);
  std::vector<TruncSeries> elems;
  for (int j = 0; j <= cap; ++j) elems.push_back(car.monomial(j));
  for (int s = 0; s < samples; ++s) elems.push_back(car.random_element(rng));

  for (const auto& u : elems) {
    std::vector<TruncSeries> du;
    for (int n = 0; n <= depth; ++n) du.push_back(d.apply(n, u));
    for (int w = 0; w <= depth; ++w)
      for (int i = 0; i <= w; ++i) {
        int j = w - i;
        TruncSeries lhs = d.apply(j, du[i]);
        TruncSeries rhs = car.zero();
        for (int n = 0; n <= depth; ++n) {
          const Rational& c = gpow[n].coeff(i, j);
          if (c != 0) rhs = rhs.add(du[n].scale(c));
        }
        if (!equal_through(lhs, rhs, cap - w)) {
          rep.pass = false;
          rep.first_failure =
              HsCheckFailure{{i, j}, u.str("t"), lhs.str("t"), rhs.str("t")};
          return rep;
        }
      }
  }
  rep.pass = true;
  return rep;
}

FormalGroupLaw vertex_law(const VertexStructure& v) {
  if (v.fgl) return *v.fgl;
  return builtin_fgl(BuiltinFgl::additive, v.carrier.base,
                     std::max(1, v.carrier.degree_cap));
}

std::string CarrierSeries::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (size_t n = 0; n < coeffs.size(); ++n) {
    if (coeffs[n].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << coeffs[n].str("t") << ")";
    if (n >= 1) os << "*" << var << "^" << n;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CarrierSeries vertex_Y(const VertexStructure& v, const TruncSeries& u,
                       const TruncSeries& w) {
  CarrierSeries out;
  for (int n = 0; n <= v.derivation.depth(); ++n)
    out.coeffs.push_back(series_mul(v.derivation.apply(n, u), w));
  return out;
}

namespace {

// Tables of the two sides of Thm 3.2(ii) indexed by (z-degree m, w-degree n),
// m + n <= depth.
struct AssocTables {
  std::vector<std::vector<TruncSeries>> lhs, rhs;
  int depth;
};

AssocTables assoc_tables(const VertexStructure& v, const TruncSeries& a,
                         const TruncSeries& b, const TruncSeries& c) {
  const HSDerivation& d = v.derivation;
  const PolyCarrier& car = v.carrier;
  int depth = d.depth();
  FormalGroupLaw f = vertex_law(v);
  if (f.order() < depth)
    throw std::invalid_argument("weak associativity: depth exceeds FGL order");

  std::vector<BivariateSeries> gpow;
  BivariateSeries g = f.body().truncated(depth);
  gpow.push_back(BivariateSeries::constant(car.base, depth, car.base.one()));
  for (int n = 1; n <= depth; ++n) gpow.push_back(gpow.back().mul(g));

  AssocTables t;
  t.depth = depth;
  t.lhs.assign(depth + 1, std::vector<TruncSeries>(depth + 1, car.zero()));
  t.rhs = t.lhs;

  std::vector<TruncSeries> da, db;
  for (int n = 0; n <= depth; ++n) {
    da.push_back(d.apply(n, a));
    db.push_back(series_mul(d.apply(n, b), c));
  }
  for (int m = 0; m <= depth; ++m) {
    TruncSeries inner = series_mul(da[m], b);
    for (int n = 0; m + n <= depth; ++n)
      t.lhs[m][n] = series_mul(d.apply(n, inner), c);
  }
  for (int m = 0; m <= depth; ++m)
    for (int n = 0; m + n <= depth; ++n) {
      TruncSeries acc = car.zero();
      for (int n1 = 0; n1 <= n; ++n1)
        for (int k = 0; k <= depth; ++k) {
          const Rational& gc = gpow[k].coeff(m, n1);
          if (gc != 0) acc = acc.add(series_mul(da[k], db[n - n1]).scale(gc));
        }
      t.rhs[m][n] = acc;
    }
  return t;
}

std::string triple_str(const TruncSeries& a, const TruncSeries& b,
                       const TruncSeries& c) {
  return "a=" + a.str("t") + "; b=" + b.str("t") + "; c=" + c.str("t");
}

}  // namespace

HsReport check_f_weak_associativity(const VertexStructure& v,
                                    const TruncSeries& a, const TruncSeries& b,
                                    const TruncSeries& c) {
  HsReport rep;
  rep.check = "f-weak-associativity";
  AssocTables t = assoc_tables(v, a, b, c);
  int cap = v.carrier.degree_cap;
  for (int w = 0; w <= t.depth; ++w)
    for (int m = 0; m <= w; ++m) {
      int n = w - m;
      if (!equal_through(t.lhs[m][n], t.rhs[m][n], cap - w)) {
        rep.pass = false;
        rep.first_failure = HsCheckFailure{
            {m, n}, triple_str(a, b, c), t.lhs[m][n].str("t"), t.rhs[m][n].str("t")};
        return rep;
      }
    }
  rep.pass = true;
  return rep;
}

Eq34Report check_eq34_conjecture(const VertexStructure& v, const TruncSeries& a,
                                 const TruncSeries& b, const TruncSeries& c,
                                 int n_max) {
  if (n_max < 0) throw std::invalid_argument("check_eq34_conjecture: n_max >= 0");
  Eq34Report out;
  out.base = check_f_weak_associativity(v, a, b, c);
  AssocTables t = assoc_tables(v, a, b, c);
  int cap = v.carrier.degree_cap;
  int depth = t.depth;
  FormalGroupLaw f = vertex_law(v);
  BivariateSeries g = f.body().truncated(depth);

  auto scaled_equal = [&](const BivariateSeries& mult) -> bool {
    // (mult * lhs)(m, n) vs (mult * rhs)(m, n), carrier-valued convolution.
    for (int w = 0; w <= depth; ++w)
      for (int m = 0; m <= w; ++m) {
        int n = w - m;
        TruncSeries l = v.carrier.zero(), r = v.carrier.zero();
        for (int p = 0; p <= m; ++p)
          for (int q = 0; q <= n; ++q) {
            const Rational& mc = mult.coeff(p, q);
            if (mc == 0) continue;
            l = l.add(t.lhs[m - p][n - q].scale(mc));
            r = r.add(t.rhs[m - p][n - q].scale(mc));
          }
        if (!equal_through(l, r, cap - w)) return false;
      }
    return true;
  };

  BivariateSeries mult = BivariateSeries::constant(v.carrier.base, depth,
                                                   v.carrier.base.one());
  for (int n = 0; n <= n_max; ++n) {
    bool ok = scaled_equal(mult);
    out.holds_at.push_back(ok);
    if (ok && !out.least_n) out.least_n = n;
    mult = mult.mul(g);
  }
  return out;
}

}  // namespace vrw
