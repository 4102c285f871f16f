#pragma once

// JSON encodings of the workbench types. Rationals cross this boundary as
// "p/q" strings, never floats; object keys are emitted sorted, so identical
// inputs serialize byte-identically.

#include <json.hpp>

#include "vrw/fgl.hpp"
#include "vrw/hs_vertex.hpp"
#include "vrw/lattice_theta.hpp"
#include "vrw/mlde.hpp"
#include "vrw/modular_forms.hpp"
#include "vrw/pierce.hpp"

namespace vrw {

using Json = nlohmann::json;

Json series_to_json(const TruncSeries& s);
Json fgl_to_json(const FormalGroupLaw& f);
// {ring, order, monomials: [[i, j, "coeff"], ...]}; does not validate axioms.
BivariateSeries bivariate_from_json(const Json& j);
FormalGroupLaw fgl_from_json(const Json& j);

// {leading_exponent: "p/q", coefficients: ["..."], weight: k|null}
Json qexp_to_json(const QExpansion& f);
QExpansion qexp_from_json(const Json& j);

Json axiom_report_to_json(const FglAxiomReport& r);
// {check, verdict, first_failure: {indices, element, lhs, rhs} | null}
Json hs_report_to_json(const HsReport& r);
Json eq34_report_to_json(const Eq34Report& r);

Json scan_candidate_to_json(const ScanCandidate& c);
std::string scan_csv(const std::vector<ScanCandidate>& cands);

// {ring, idempotent_count, atoms, stalks, local, vnr, exchange, monk_agree}
Json pierce_report_json(const FiniteRing& r);
// {size, add: [[...]], mul: [[...]]}
FiniteRing table_ring_from_json(const Json& j);

// {rank, gram: [[...]]} or {builtin: "E8"}
Lattice lattice_from_json(const Json& j);
Json theta2_to_json(const ThetaGenus2& t);
std::string theta2_csv(const ThetaGenus2& t);

}  // namespace vrw
