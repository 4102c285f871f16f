#include "vrw/json_io.hpp"

#include <sstream>

namespace vrw {

Json series_to_json(const TruncSeries& s) {
  Json coeffs = Json::array();
  for (int d = 0; d <= s.order(); ++d) coeffs.push_back(rational_str(s.coeff(d)));
  return Json{{"ring", s.ring().name()}, {"order", s.order()}, {"coefficients", coeffs}};
}

Json fgl_to_json(const FormalGroupLaw& f) {
  Json monomials = Json::array();
  const BivariateSeries& b = f.body();
  for (int i = 0; i <= b.order(); ++i)
    for (int j = 0; i + j <= b.order(); ++j)
      if (b.coeff(i, j) != 0)
        monomials.push_back(Json::array({i, j, rational_str(b.coeff(i, j))}));
  return Json{{"ring", f.ring().name()},
              {"order", f.order()},
              {"monomials", monomials}};
}

BivariateSeries bivariate_from_json(const Json& j) {
  Ring ring = Ring::parse(j.at("ring").get<std::string>());
  int order = j.at("order").get<int>();
  BivariateSeries b(ring, order);
  for (const auto& m : j.at("monomials")) {
    int i = m.at(0).get<int>(), jj = m.at(1).get<int>();
    Rational c = parse_rational(m.at(2).get<std::string>());
    b = b.with_coeff(i, jj, c);
  }
  return b;
}

FormalGroupLaw fgl_from_json(const Json& j) {
  return FormalGroupLaw::from_series(bivariate_from_json(j));
}

Json qexp_to_json(const QExpansion& f) {
  Json coeffs = Json::array();
  for (int n = 0; n <= f.order(); ++n) coeffs.push_back(rational_str(f.coeff(n)));
  Json w;
  if (f.weight()) w = *f.weight();
  return Json{{"leading_exponent", rational_str(f.leading_exponent())},
              {"coefficients", coeffs},
              {"weight", w}};
}

QExpansion qexp_from_json(const Json& j) {
  Rational x = parse_rational(j.at("leading_exponent").get<std::string>());
  std::vector<Rational> tail;
  for (const auto& c : j.at("coefficients"))
    tail.push_back(parse_rational(c.get<std::string>()));
  QExpansion f = QExpansion::make(x, std::move(tail));
  if (j.contains("weight") && !j.at("weight").is_null())
    f = f.with_weight(j.at("weight").get<int>());
  return f;
}

Json axiom_report_to_json(const FglAxiomReport& r) {
  Json ff;
  if (r.first_failure) {
    ff = Json{{"axiom", r.first_failure->axiom},
              {"monomial", r.first_failure->monomial},
              {"lhs", rational_str(r.first_failure->lhs)},
              {"rhs", rational_str(r.first_failure->rhs)}};
  }
  return Json{{"check", "fgl-axioms"},
              {"order", r.order},
              {"identity", r.identity_ok},
              {"associativity", r.associativity_ok},
              {"commutativity", r.commutativity_ok},
              {"verdict", r.pass() ? "pass" : "fail"},
              {"first_failure", ff}};
}

Json hs_report_to_json(const HsReport& r) {
  Json ff;
  if (r.first_failure) {
    ff = Json{{"indices", r.first_failure->indices},
              {"element", r.first_failure->element},
              {"lhs", r.first_failure->lhs},
              {"rhs", r.first_failure->rhs}};
  }
  return Json{{"check", r.check},
              {"verdict", r.pass ? "pass" : "fail"},
              {"first_failure", ff}};
}

Json eq34_report_to_json(const Eq34Report& r) {
  Json holds = Json::array();
  for (bool b : r.holds_at) holds.push_back(b);
  Json least;
  if (r.least_n) least = *r.least_n;
  return Json{{"check", "eq34-multiplier"},
              {"base", hs_report_to_json(r.base)},
              {"holds_at", holds},
              {"least_N", least}};
}

Json scan_candidate_to_json(const ScanCandidate& c) {
  Json exps = Json::array(), hs = Json::array(), dens = Json::array();
  for (const auto& x : c.exponents) exps.push_back(rational_str(x));
  for (const auto& h : c.conformal_weights) hs.push_back(rational_str(h));
  for (const auto& d : c.clearing_denominators) dens.push_back(d.get_str());
  return Json{{"exponents", exps},
              {"c", rational_str(c.central_charge)},
              {"h", hs},
              {"clearing_denominators", dens},
              {"coefficients_checked", c.coefficients_checked},
              {"verdict", c.verdict}};
}

std::string scan_csv(const std::vector<ScanCandidate>& cands) {
  std::ostringstream os;
  os << "c,h_list,first_20_coeffs_of_vacuum\n";
  for (const auto& c : cands) {
    os << rational_str(c.central_charge) << ",\"";
    for (size_t i = 0; i < c.conformal_weights.size(); ++i)
      os << (i ? " " : "") << rational_str(c.conformal_weights[i]);
    os << "\",\"";
    // Recompute the vacuum (minimal-exponent) solution for the summary.
    MonicMLDE m = mlde_from_exponents(static_cast<int>(c.exponents.size()),
                                      c.exponents, 20);
    FrobeniusSolution sol = frobenius_solve(m, c.exponents.front(), 20);
    for (int n = 0; n < 20; ++n)
      os << (n ? " " : "") << rational_str(sol.series.coeff(n));
    os << "\"\n";
  }
  return os.str();
}

Json pierce_report_json(const FiniteRing& r) {
  PierceBundle pb = pierce_decompose(r);
  Json atoms = Json::array(), stalks = Json::array();
  for (size_t ai : pb.boolean.atom_indices())
    atoms.push_back(r.element_str(pb.boolean.elements()[ai]));
  for (const auto& s : pb.stalks) stalks.push_back(s.description);
  MonkVerdict mv = monk_verdict(r);
  return Json{{"ring", r.name()},
              {"idempotent_count", pb.boolean.count()},
              {"atoms", atoms},
              {"stalks", stalks},
              {"section_map_isomorphism", pb.section_map_is_isomorphism},
              {"local", is_local(r)},
              {"vnr", is_von_neumann_regular(r)},
              {"exchange", mv.exchange_check},
              {"monk_agree", mv.agree}};
}

FiniteRing table_ring_from_json(const Json& j) {
  size_t size = j.at("size").get<size_t>();
  auto add = j.at("add").get<std::vector<std::vector<unsigned long>>>();
  auto mul = j.at("mul").get<std::vector<std::vector<unsigned long>>>();
  if (add.size() != size || mul.size() != size)
    throw std::invalid_argument("table ring JSON: size mismatch");
  return FiniteRing::from_tables(add, mul);
}

Lattice lattice_from_json(const Json& j) {
  if (j.contains("builtin")) return Lattice::builtin(j.at("builtin").get<std::string>());
  auto gram = j.at("gram").get<std::vector<std::vector<long>>>();
  if (j.contains("rank") && j.at("rank").get<size_t>() != gram.size())
    throw std::invalid_argument("lattice JSON: rank does not match gram size");
  return Lattice::from_gram(std::move(gram));
}

namespace {
Json half_or_int(long doubled) {
  // na/2 as an integer when even, else "p/2".
  if (doubled % 2 == 0) return Json(doubled / 2);
  return Json(std::to_string(doubled) + "/2");
}
}  // namespace

Json theta2_to_json(const ThetaGenus2& t) {
  Json entries = Json::array();
  for (const auto& [key, c] : t.counts) {
    auto [na, nb, ip] = key;
    entries.push_back(Json::array({half_or_int(na), half_or_int(nb), ip, c}));
  }
  return Json{{"a_max", t.a_max}, {"b_max", t.b_max}, {"entries", entries}};
}

std::string theta2_csv(const ThetaGenus2& t) {
  std::ostringstream os;
  os << "a,b,c,count\n";
  for (const auto& [key, c] : t.counts) {
    auto [na, nb, ip] = key;
    auto field = [](long doubled) {
      return doubled % 2 == 0 ? std::to_string(doubled / 2)
                              : std::to_string(doubled) + "/2";
    };
    os << field(na) << "," << field(nb) << "," << ip << "," << c << "\n";
  }
  return os.str();
}

}  // namespace vrw
