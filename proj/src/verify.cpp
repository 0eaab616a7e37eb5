#include "gramcal/verify.hpp"

#include <algorithm>
#include <random>

#include "gramcal/errors.hpp"
#include "gramcal/fourier_motzkin.hpp"

namespace gramcal {

namespace {

bool form_less(const AffineForm& a, const AffineForm& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.offset < b.offset;
}

int sign_of(const Rational& v) {
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

}  // namespace

std::vector<AffineForm> collect_hyperplanes(const std::vector<const FormalSum*>& sums) {
  std::vector<AffineForm> out;
  for (const FormalSum* s : sums) {
    for (const auto& term : s->terms()) {
      for (const auto& c : term.body.constraints) {
        if (c.form.trivial()) continue;
        out.push_back(canonical_hyperplane(c.form));
      }
    }
  }
  std::sort(out.begin(), out.end(), form_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool CellDecomposition::covers(const FormalSum& s) const {
  const std::vector<AffineForm> needed = collect_hyperplanes({&s});
  for (const auto& f : needed) {
    if (!std::binary_search(hyperplanes.begin(), hyperplanes.end(), f, form_less)) return false;
  }
  return true;
}

CellDecomposition arrangement_cells(const std::vector<AffineForm>& forms, int dim,
                                    size_t cell_cap) {
  CellDecomposition out;
  out.dim = dim;
  for (const auto& f : forms) {
    if (f.dim() != dim) throw input_error("arrangement_cells: dimension mismatch");
    if (f.trivial()) continue;
    out.hyperplanes.push_back(canonical_hyperplane(f));
  }
  std::sort(out.hyperplanes.begin(), out.hyperplanes.end(), form_less);
  out.hyperplanes.erase(std::unique(out.hyperplanes.begin(), out.hyperplanes.end()),
                        out.hyperplanes.end());
  const size_t m = out.hyperplanes.size();
  if (m > cell_cap) {
    throw cell_cap_exceeded("arrangement of " + std::to_string(m) +
                            " hyperplanes exceeds the cap of " + std::to_string(cell_cap) +
                            "; use random_point_check fallback");
  }

  // Depth-first search over sign prefixes, pruned by exact feasibility. A
  // child whose sign the parent witness already satisfies inherits that
  // witness without a feasibility call.
  std::vector<LinearConstraint> stack_sys;
  std::vector<int> stack_prefix;
  stack_sys.reserve(m);
  stack_prefix.reserve(m);
  auto walk = [&](auto&& self, const Vec& witness) -> void {
    const size_t level = stack_prefix.size();
    if (level == m) {
      out.cells.push_back({stack_prefix, witness});
      return;
    }
    const AffineForm& h = out.hyperplanes[level];
    const int free_sign = sign_of(h.value_at(witness));
    for (int sign : {-1, 0, 1}) {
      LinearConstraint c = sign == 0 ? eq(h) : (sign == 1 ? gt(h) : gt(h.negated()));
      stack_prefix.push_back(sign);
      stack_sys.push_back(c);
      if (sign == free_sign) {
        self(self, witness);
      } else {
        const Feasibility feas = fm_feasible(stack_sys, dim);
        if (feas.feasible) self(self, feas.witness);
      }
      stack_sys.pop_back();
      stack_prefix.pop_back();
    }
  };
  walk(walk, zero_vec(dim));

  std::sort(out.cells.begin(), out.cells.end(),
            [](const Cell& a, const Cell& b) { return a.signs < b.signs; });
  return out;
}

namespace {

Verdict check_on_cells(const CellDecomposition& cells, const FormalSum& lhs,
                       const FormalSum& rhs) {
  Verdict verdict;
  verdict.mode = "cells";
  verdict.checked = cells.cells.size();
  for (const auto& cell : cells.cells) {
    const Poly lv = lhs.evaluate(cell.rep);
    const Poly rv = rhs.evaluate(cell.rep);
    if (lv != rv) {
      verdict.kind = Verdict::Kind::unequal;
      verdict.witness = CheckWitness{cell.rep, cell.signs, lv, rv};
      return verdict;
    }
  }
  verdict.kind = Verdict::Kind::equal;
  return verdict;
}

}  // namespace

Verdict identity_check(const FormalSum& lhs, const FormalSum& rhs, const CheckOptions& options) {
  if (lhs.dim() != rhs.dim()) throw input_error("identity_check: dimension mismatch");
  const std::vector<AffineForm> planes = collect_hyperplanes({&lhs, &rhs});
  if (planes.size() > options.cell_cap && options.fallback_samples > 0) {
    return random_point_check(lhs, rhs, options.fallback_samples, options.seed);
  }
  const CellDecomposition cells = arrangement_cells(planes, lhs.dim(), options.cell_cap);
  return check_on_cells(cells, lhs, rhs);
}

Verdict identity_check_on(const CellDecomposition& cells, const FormalSum& lhs,
                          const FormalSum& rhs) {
  if (lhs.dim() != cells.dim || rhs.dim() != cells.dim) {
    throw input_error("identity_check_on: dimension mismatch");
  }
  if (!cells.covers(lhs) || !cells.covers(rhs)) {
    throw input_error("identity_check_on: decomposition does not cover the sums");
  }
  return check_on_cells(cells, lhs, rhs);
}

Verdict random_point_check(const FormalSum& lhs, const FormalSum& rhs, size_t trials,
                           uint64_t seed) {
  if (trials < 1) throw input_error("random_point_check: trials must be >= 1");
  if (lhs.dim() != rhs.dim()) throw input_error("random_point_check: dimension mismatch");
  const int dim = lhs.dim();
  const std::vector<AffineForm> planes = collect_hyperplanes({&lhs, &rhs});

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num_dist(-8, 8);
  std::uniform_int_distribution<long> den_dist(1, 8);

  auto random_rational = [&]() { return make_rational(num_dist(rng), den_dist(rng)); };
  auto random_point = [&]() {
    Vec x(static_cast<size_t>(dim));
    for (auto& c : x) c = random_rational();
    return x;
  };
  // A random point of the solution space of the given equalities.
  auto random_on = [&](const std::vector<AffineForm>& eqs) -> std::optional<Vec> {
    const AffineSolution sol = solve_affine(eqs, dim);
    if (sol.kind == SolutionKind::infeasible) return std::nullopt;
    Vec x = sol.point;
    for (const auto& dir : sol.directions) x = vec_add(x, vec_scale(random_rational(), dir));
    return x;
  };

  Verdict verdict;
  verdict.mode = "random";
  verdict.checked = trials;
  auto probe = [&](const Vec& x) -> bool {
    const Poly lv = lhs.evaluate(x);
    const Poly rv = rhs.evaluate(x);
    if (lv == rv) return false;
    verdict.kind = Verdict::Kind::unequal;
    verdict.witness = CheckWitness{x, {}, lv, rv};
    return true;
  };

  for (size_t t = 0; t < trials; ++t) {
    if (probe(random_point())) return verdict;
    if (!planes.empty()) {
      std::uniform_int_distribution<size_t> pick(0, planes.size() - 1);
      const size_t i = pick(rng);
      if (auto x = random_on({planes[i]}); x && probe(*x)) return verdict;
      if (planes.size() >= 2) {
        size_t j = pick(rng);
        if (j == i) j = (j + 1) % planes.size();
        if (auto x = random_on({planes[i], planes[j]}); x && probe(*x)) return verdict;
      }
    }
  }
  verdict.kind = Verdict::Kind::consistent;
  return verdict;
}

std::string to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::equal:
      return "equal";
    case Verdict::Kind::unequal:
      return "unequal";
    case Verdict::Kind::consistent:
      return "consistent";
  }
  return "unequal";
}

}  // namespace gramcal
