#ifndef GRAMCAL_INDICATOR_HPP
#define GRAMCAL_INDICATOR_HPP

#include <map>
#include <string>
#include <vector>

#include "gramcal/poly.hpp"
#include "gramcal/polyhedron.hpp"

namespace gramcal {

// Facet weights q_i. Facets without an explicit entry default either to the
// indeterminate q<i+1> (symbolic mode) or to the constant 1.
struct WeightAssignment {
  enum class Default { symbolic, one };

  Default default_mode = Default::symbolic;
  std::map<int, Poly> explicit_weights;

  Poly weight_for(int facet_index) const;

  static WeightAssignment symbolic();
  static WeightAssignment all_ones();
  static WeightAssignment all_equal(const Poly& w, size_t facet_count);
};

// Canonical symbolic name of facet i (0-based index -> "q<i+1>").
std::string facet_weight_name(int facet_index);

struct WeightedPolyhedron {
  HPolyhedron poly;
  WeightAssignment weights;

  Poly facet_weight(int facet_index) const { return weights.weight_for(facet_index); }
};

// One weighted constraint of a closed convex body.
struct WeightedConstraint {
  AffineForm form;
  Poly weight;
};

// Closed convex set cut out by weighted half-spaces. Lower-dimensional
// bodies (faces) are expressed with opposite half-space pairs weighted 1.
// The value at x is 0 outside, otherwise the product of the weights of the
// constraints active at x (empty product = 1).
struct WeightedBody {
  int dim = 0;
  std::vector<WeightedConstraint> constraints;

  Poly value_at(const Vec& x) const;

  static WeightedBody whole_space(int dim);
  static WeightedBody of_polyhedron(const WeightedPolyhedron& wp);
  // Tangent cone with inherited facet weights {q_i : i in I_F}.
  static WeightedBody of_cone(const TangentCone& cone, const WeightedPolyhedron& wp);
  // Unweighted indicator of a face of P (all constraint weights 1).
  static WeightedBody of_face(const HPolyhedron& P, const Face& F);
};

struct FormalTerm {
  Poly coeff;
  WeightedBody body;
};

// Finite linear combination of weighted indicators; addition concatenates
// term lists, no geometric cancellation happens here.
class FormalSum {
 public:
  FormalSum() = default;
  explicit FormalSum(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  const std::vector<FormalTerm>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  void append(Poly coeff, WeightedBody body);
  void append(const FormalTerm& term) { append(term.coeff, term.body); }

  Poly evaluate(const Vec& x) const;

  FormalSum operator-() const;
  FormalSum operator+(const FormalSum& rhs) const;
  FormalSum operator-(const FormalSum& rhs) const;

  // Every indeterminate appearing in a coefficient or constraint weight.
  std::set<std::string> indeterminates() const;

 private:
  int dim_ = 0;
  std::vector<FormalTerm> terms_;
};

FormalSum indicator_sum(const WeightedPolyhedron& wp);

// Spec-level operation names.
Poly weight_at(const WeightedPolyhedron& wp, const Vec& x);
Poly fs_evaluate(const FormalSum& s, const Vec& x);
// Applies substitution to every coefficient and every constraint weight;
// assignment keys absent from the whole sum are input errors.
FormalSum fs_substitute(const FormalSum& s, const std::map<std::string, Poly>& assignment);

}  // namespace gramcal

#endif
