#ifndef GRAMCAL_FOURIER_MOTZKIN_HPP
#define GRAMCAL_FOURIER_MOTZKIN_HPP

#include <vector>

#include "gramcal/linalg.hpp"

namespace gramcal {

enum class Rel { ge, gt, eq };

struct LinearConstraint {
  AffineForm form;
  Rel rel = Rel::ge;
};

inline LinearConstraint ge(AffineForm f) { return {std::move(f), Rel::ge}; }
inline LinearConstraint gt(AffineForm f) { return {std::move(f), Rel::gt}; }
inline LinearConstraint eq(AffineForm f) { return {std::move(f), Rel::eq}; }

struct Feasibility {
  bool feasible = false;
  Vec witness;  // satisfies every relation exactly (strict ones strictly)
};

// Exact Fourier-Motzkin elimination. Derived inequalities are strict when
// any parent is strict; the witness is rebuilt by back-substitution taking
// midpoints of open intervals.
Feasibility fm_feasible(const std::vector<LinearConstraint>& system, int dim);

}  // namespace gramcal

#endif
