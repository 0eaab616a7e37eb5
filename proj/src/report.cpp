#include "gramcal/report.hpp"

#include "gramcal/errors.hpp"
#include "gramcal/poly.hpp"

namespace gramcal {

nlohmann::json halfspace_to_json(const AffineForm& f) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : f.normal) j.push_back(to_string(c));
  j.push_back(to_string(f.offset));
  return j;
}

AffineForm halfspace_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() < 2) throw input_error("report: malformed halfspace entry");
  AffineForm f;
  for (size_t k = 0; k + 1 < j.size(); ++k) {
    f.normal.push_back(parse_rational(j[k].get<std::string>()));
  }
  f.offset = parse_rational(j.back().get<std::string>());
  return f;
}

nlohmann::json term_to_json(const FormalTerm& term) {
  nlohmann::json j;
  j["coeff"] = term.coeff.str();
  j["halfspaces"] = nlohmann::json::array();
  j["facet_weights"] = nlohmann::json::array();
  for (const auto& c : term.body.constraints) {
    j["halfspaces"].push_back(halfspace_to_json(c.form));
    j["facet_weights"].push_back(c.weight.str());
  }
  return j;
}

FormalTerm term_from_json(const nlohmann::json& j, int dim) {
  FormalTerm term;
  term.coeff = parse_poly(j.at("coeff").get<std::string>());
  term.body.dim = dim;
  const auto& halfspaces = j.at("halfspaces");
  const auto& weights = j.at("facet_weights");
  if (halfspaces.size() != weights.size()) {
    throw input_error("report: halfspaces and facet_weights differ in length");
  }
  for (size_t k = 0; k < halfspaces.size(); ++k) {
    WeightedConstraint c;
    c.form = halfspace_from_json(halfspaces[k]);
    if (c.form.dim() != dim) throw input_error("report: halfspace dimension mismatch");
    c.weight = parse_poly(weights[k].get<std::string>());
    term.body.constraints.push_back(std::move(c));
  }
  return term;
}

nlohmann::json terms_to_json(const FormalSum& sum) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& term : sum.terms()) out.push_back(term_to_json(term));
  return out;
}

FormalSum sum_from_json(const nlohmann::json& terms, int dim) {
  if (!terms.is_array()) throw input_error("report: 'terms' must be an array");
  FormalSum sum(dim);
  for (const auto& j : terms) sum.append(term_from_json(j, dim));
  return sum;
}

nlohmann::json verdict_to_json(const Verdict& verdict) {
  nlohmann::json j;
  j["mode"] = verdict.mode;
  j[verdict.mode == "cells" ? "cells" : "trials"] = verdict.checked;
  j["verdict"] = to_string(verdict.kind);
  if (verdict.witness) {
    nlohmann::json w;
    w["point"] = nlohmann::json::array();
    for (const auto& c : verdict.witness->point) w["point"].push_back(to_string(c));
    if (!verdict.witness->signs.empty()) w["signs"] = verdict.witness->signs;
    w["lhs"] = verdict.witness->lhs_value.str();
    w["rhs"] = verdict.witness->rhs_value.str();
    j["witness"] = std::move(w);
  }
  return j;
}

}  // namespace gramcal
