#ifndef GRAMCAL_LINALG_HPP
#define GRAMCAL_LINALG_HPP

#include <string>
#include <vector>

#include "gramcal/rational.hpp"

namespace gramcal {

using Vec = std::vector<Rational>;

Rational dot(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
bool is_zero_vec(const Vec& v);
Vec zero_vec(int dim);
std::string to_string(const Vec& v);

// Affine functional <normal, x> + offset; one per half-space H = {f >= 0}.
struct AffineForm {
  Vec normal;
  Rational offset;

  int dim() const { return static_cast<int>(normal.size()); }
  Rational value_at(const Vec& x) const;
  bool trivial() const { return is_zero_vec(normal); }
  AffineForm negated() const;

  bool operator==(const AffineForm& rhs) const = default;
};

AffineForm form_from(std::initializer_list<long> normal, long offset);
std::string to_string(const AffineForm& f);

// Primitive integer rescaling, orientation preserved (half-space identity).
AffineForm canonical_halfspace(const AffineForm& f);
// Primitive rescaling with the first nonzero normal entry positive; two forms
// describing the same hyperplane {f = 0} canonicalize identically.
AffineForm canonical_hyperplane(const AffineForm& f);

// Exact Gaussian elimination over the rationals.
int rank_of(std::vector<Vec> rows);

enum class SolutionKind { unique, subspace, infeasible };

struct AffineSolution {
  SolutionKind kind = SolutionKind::infeasible;
  Vec point;                    // a solution, when one exists
  std::vector<Vec> directions;  // basis of the solution space (empty if unique)
};

// Solves { f(x) = 0 : f in equations } exactly.
AffineSolution solve_affine(const std::vector<AffineForm>& equations, int dim);

}  // namespace gramcal

#endif
