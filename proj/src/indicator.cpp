#include "gramcal/indicator.hpp"

#include "gramcal/errors.hpp"

namespace gramcal {

std::string facet_weight_name(int facet_index) {
  return "q" + std::to_string(facet_index + 1);
}

Poly WeightAssignment::weight_for(int facet_index) const {
  auto it = explicit_weights.find(facet_index);
  if (it != explicit_weights.end()) return it->second;
  if (default_mode == Default::symbolic) return Poly::var(facet_weight_name(facet_index));
  return Poly(1);
}

WeightAssignment WeightAssignment::symbolic() { return {}; }

WeightAssignment WeightAssignment::all_ones() {
  WeightAssignment w;
  w.default_mode = Default::one;
  return w;
}

WeightAssignment WeightAssignment::all_equal(const Poly& w, size_t facet_count) {
  WeightAssignment out;
  for (size_t i = 0; i < facet_count; ++i) out.explicit_weights.emplace(static_cast<int>(i), w);
  return out;
}

Poly WeightedBody::value_at(const Vec& x) const {
  Poly product(1);
  for (const auto& c : constraints) {
    const Rational v = c.form.value_at(x);
    if (v < 0) return Poly();
    if (v == 0) product *= c.weight;
  }
  return product;
}

WeightedBody WeightedBody::whole_space(int dim) {
  WeightedBody b;
  b.dim = dim;
  return b;
}

WeightedBody WeightedBody::of_polyhedron(const WeightedPolyhedron& wp) {
  WeightedBody b;
  b.dim = wp.poly.dim;
  b.constraints.reserve(wp.poly.facet_count());
  for (size_t i = 0; i < wp.poly.facet_count(); ++i) {
    b.constraints.push_back({wp.poly.halfspaces[i], wp.facet_weight(static_cast<int>(i))});
  }
  return b;
}

WeightedBody WeightedBody::of_cone(const TangentCone& cone, const WeightedPolyhedron& wp) {
  WeightedBody b;
  b.dim = cone.cone.dim;
  b.constraints.reserve(cone.cone.facet_count());
  for (size_t k = 0; k < cone.cone.facet_count(); ++k) {
    b.constraints.push_back({cone.cone.halfspaces[k], wp.facet_weight(cone.facet_indices[k])});
  }
  return b;
}

WeightedBody WeightedBody::of_face(const HPolyhedron& P, const Face& F) {
  WeightedBody b;
  b.dim = P.dim;
  for (size_t i = 0; i < P.facet_count(); ++i) {
    b.constraints.push_back({P.halfspaces[i], Poly(1)});
    if (F.active_set.contains(static_cast<int>(i))) {
      b.constraints.push_back({P.halfspaces[i].negated(), Poly(1)});
    }
  }
  return b;
}

void FormalSum::append(Poly coeff, WeightedBody body) {
  if (body.dim != dim_) throw input_error("FormalSum: body dimension mismatch");
  if (coeff.is_zero()) return;
  terms_.push_back({std::move(coeff), std::move(body)});
}

Poly FormalSum::evaluate(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim_) throw input_error("FormalSum: point dimension mismatch");
  Poly total;
  for (const auto& term : terms_) total += term.coeff * term.body.value_at(x);
  return total;
}

FormalSum FormalSum::operator-() const {
  FormalSum out(dim_);
  for (const auto& term : terms_) out.append(-term.coeff, term.body);
  return out;
}

FormalSum FormalSum::operator+(const FormalSum& rhs) const {
  if (rhs.dim_ != dim_) throw input_error("FormalSum: dimension mismatch");
  FormalSum out = *this;
  for (const auto& term : rhs.terms_) out.append(term.coeff, term.body);
  return out;
}

FormalSum FormalSum::operator-(const FormalSum& rhs) const { return *this + (-rhs); }

std::set<std::string> FormalSum::indeterminates() const {
  std::set<std::string> names;
  for (const auto& term : terms_) {
    for (const auto& n : term.coeff.indeterminates()) names.insert(n);
    for (const auto& c : term.body.constraints) {
      for (const auto& n : c.weight.indeterminates()) names.insert(n);
    }
  }
  return names;
}

FormalSum indicator_sum(const WeightedPolyhedron& wp) {
  FormalSum s(wp.poly.dim);
  s.append(Poly(1), WeightedBody::of_polyhedron(wp));
  return s;
}

Poly weight_at(const WeightedPolyhedron& wp, const Vec& x) {
  return WeightedBody::of_polyhedron(wp).value_at(x);
}

Poly fs_evaluate(const FormalSum& s, const Vec& x) { return s.evaluate(x); }

FormalSum fs_substitute(const FormalSum& s, const std::map<std::string, Poly>& assignment) {
  const std::set<std::string> known = s.indeterminates();
  for (const auto& [name, value] : assignment) {
    if (!known.contains(name)) {
      throw input_error("substitute: unknown indeterminate '" + name + "'");
    }
  }
  FormalSum out(s.dim());
  for (const auto& term : s.terms()) {
    WeightedBody body = term.body;
    for (auto& c : body.constraints) c.weight = c.weight.substitute(assignment);
    out.append(term.coeff.substitute(assignment), std::move(body));
  }
  return out;
}

}  // namespace gramcal
