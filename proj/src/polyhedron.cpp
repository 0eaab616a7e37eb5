#include "gramcal/polyhedron.hpp"

#include <algorithm>
#include <map>

#include "gramcal/errors.hpp"

namespace gramcal {

BuiltPolyhedron build_polyhedron_indexed(const std::vector<AffineForm>& forms, int dim) {
  if (dim < 1) throw input_error("build_polyhedron: dimension must be positive");
  for (const auto& f : forms) {
    if (f.dim() != dim) throw input_error("build_polyhedron: form dimension mismatch");
  }
  {
    std::vector<LinearConstraint> strict;
    strict.reserve(forms.size());
    for (const auto& f : forms) strict.push_back(gt(f));
    if (!fm_feasible(strict, dim).feasible) {
      throw unsupported_error("build_polyhedron: polyhedron is not full-dimensional");
    }
  }

  // A half-space is redundant iff negating it strictly, with the others
  // kept, is infeasible. Re-test until stable so duplicate pairs resolve.
  std::vector<size_t> kept(forms.size());
  for (size_t i = 0; i < forms.size(); ++i) kept[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t pos = 0; pos < kept.size(); ++pos) {
      std::vector<LinearConstraint> sys;
      sys.reserve(kept.size());
      for (size_t j = 0; j < kept.size(); ++j) {
        if (j == pos) continue;
        sys.push_back(ge(forms[kept[j]]));
      }
      sys.push_back(gt(forms[kept[pos]].negated()));
      if (!fm_feasible(sys, dim).feasible) {
        kept.erase(kept.begin() + static_cast<long>(pos));
        changed = true;
        --pos;
      }
    }
  }

  BuiltPolyhedron out;
  out.poly.dim = dim;
  for (size_t idx : kept) out.poly.halfspaces.push_back(forms[idx]);
  out.kept = std::move(kept);
  return out;
}

HPolyhedron build_polyhedron(const std::vector<AffineForm>& forms, int dim) {
  return build_polyhedron_indexed(forms, dim).poly;
}

bool contains(const HPolyhedron& P, const Vec& x) {
  for (const auto& f : P.halfspaces) {
    if (f.value_at(x) < 0) return false;
  }
  return true;
}

std::vector<Face> enumerate_vertices(const HPolyhedron& P) {
  const int d = P.dim;
  const size_t n = P.facet_count();
  std::map<Vec, std::set<int>> found;  // point -> full active set

  std::vector<size_t> combo(static_cast<size_t>(d));
  // Iterate all d-subsets of facet indices.
  auto step = [&](auto&& self, size_t start, size_t depth) -> void {
    if (depth == static_cast<size_t>(d)) {
      std::vector<AffineForm> eqs;
      eqs.reserve(combo.size());
      for (size_t idx : combo) eqs.push_back(P.halfspaces[idx]);
      const AffineSolution sol = solve_affine(eqs, d);
      if (sol.kind != SolutionKind::unique) return;
      if (!contains(P, sol.point)) return;
      if (found.contains(sol.point)) return;
      std::set<int> active;
      for (size_t i = 0; i < n; ++i) {
        if (P.halfspaces[i].value_at(sol.point) == 0) active.insert(static_cast<int>(i));
      }
      found.emplace(sol.point, std::move(active));
      return;
    }
    for (size_t i = start; i < n; ++i) {
      combo[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  if (n >= static_cast<size_t>(d) && d >= 1) step(step, 0, 0);

  std::vector<Face> out;
  out.reserve(found.size());
  for (auto& [point, active] : found) {
    Face v;
    v.active_set = std::move(active);
    v.dim = 0;
    v.point = point;
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

struct FaceProbe {
  const HPolyhedron* P;

  // Feasibility of {f_i = 0 : i in S} within P.
  bool face_nonempty(const std::set<int>& zeros) const {
    std::vector<LinearConstraint> sys;
    sys.reserve(P->facet_count());
    for (size_t i = 0; i < P->facet_count(); ++i) {
      const int idx = static_cast<int>(i);
      if (zeros.contains(idx)) {
        sys.push_back(eq(P->halfspaces[i]));
      } else {
        sys.push_back(ge(P->halfspaces[i]));
      }
    }
    return fm_feasible(sys, P->dim).feasible;
  }

  // Is f_j forced to zero on the face generated by `zeros`?
  bool implies_zero(const std::set<int>& zeros, int j) const {
    std::vector<LinearConstraint> sys;
    sys.reserve(P->facet_count() + 1);
    for (size_t i = 0; i < P->facet_count(); ++i) {
      const int idx = static_cast<int>(i);
      if (zeros.contains(idx)) {
        sys.push_back(eq(P->halfspaces[i]));
      } else {
        sys.push_back(ge(P->halfspaces[i]));
      }
    }
    sys.push_back(gt(P->halfspaces[static_cast<size_t>(j)]));
    return !fm_feasible(sys, P->dim).feasible;
  }

  std::set<int> closure(const std::set<int>& seed, const std::set<int>& parent_closure) const {
    std::set<int> out = seed;
    for (const int j : parent_closure) out.insert(j);
    for (size_t i = 0; i < P->facet_count(); ++i) {
      const int idx = static_cast<int>(i);
      if (out.contains(idx)) continue;
      if (implies_zero(seed, idx)) out.insert(idx);
    }
    return out;
  }
};

Face make_face(const HPolyhedron& P, std::set<int> active) {
  Face f;
  f.point = relative_interior_point(P, active);
  std::vector<AffineForm> eqs;
  for (int i : active) eqs.push_back(P.halfspaces[static_cast<size_t>(i)]);
  const AffineSolution hull = solve_affine(eqs, P.dim);
  f.dim = static_cast<int>(hull.directions.size());
  if (hull.kind == SolutionKind::unique) f.dim = 0;
  f.directions = hull.directions;
  f.active_set = std::move(active);
  return f;
}

}  // namespace

FaceLattice enumerate_faces(const HPolyhedron& P) {
  if (P.facet_count() > kFaceEnumerationCap) {
    throw unsupported_error("enumerate_faces: more than " +
                            std::to_string(kFaceEnumerationCap) +
                            " facets (subset enumeration refused)");
  }
  FaceProbe probe{&P};
  std::set<std::set<int>> recorded;

  // DFS over generating subsets in increasing index order; adding an index
  // already in the closure would reproduce the same face, so it is skipped.
  auto walk = [&](auto&& self, const std::set<int>& seed, const std::set<int>& closed,
                  int last) -> void {
    recorded.insert(closed);
    for (size_t j = static_cast<size_t>(last + 1); j < P.facet_count(); ++j) {
      const int idx = static_cast<int>(j);
      if (closed.contains(idx)) continue;
      std::set<int> next_seed = seed;
      next_seed.insert(idx);
      if (!probe.face_nonempty(next_seed)) continue;
      self(self, next_seed, probe.closure(next_seed, closed), idx);
    }
  };
  walk(walk, {}, probe.closure({}, {}), -1);

  FaceLattice lattice;
  lattice.faces.reserve(recorded.size());
  for (const auto& active : recorded) lattice.faces.push_back(make_face(P, active));
  std::sort(lattice.faces.begin(), lattice.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.active_set < b.active_set;
  });
  return lattice;
}

std::vector<const Face*> FaceLattice::of_dim(int k) const {
  std::vector<const Face*> out;
  for (const auto& f : faces) {
    if (f.dim == k) out.push_back(&f);
  }
  return out;
}

const Face& FaceLattice::whole() const {
  for (const auto& f : faces) {
    if (f.is_whole_polyhedron()) return f;
  }
  throw unsupported_error("face lattice is missing the whole polyhedron");
}

GenericityReport classify_genericity(const HPolyhedron& P, const FaceLattice& lattice) {
  GenericityReport report;
  bool positive_dim_nongeneric = false;
  for (const auto& f : lattice.faces) {
    if (f.is_whole_polyhedron()) continue;
    const bool generic =
        static_cast<int>(f.active_set.size()) == P.dim - f.dim;
    if (generic) continue;
    if (f.dim == 0) {
      report.nonsimple_vertices.push_back(f);
    } else {
      positive_dim_nongeneric = true;
    }
  }
  if (positive_dim_nongeneric) {
    report.cls = Genericity::unsupported;
  } else if (!report.nonsimple_vertices.empty()) {
    report.cls = Genericity::nonsimple_vertices_only;
  } else {
    report.cls = Genericity::simple;
  }
  return report;
}

TangentCone tangent_cone(const HPolyhedron& P, const Face& F) {
  TangentCone out;
  out.base = F;
  out.cone.dim = P.dim;
  for (int i : F.active_set) {
    out.cone.halfspaces.push_back(P.halfspaces[static_cast<size_t>(i)]);
    out.facet_indices.push_back(i);
  }
  return out;
}

int lineality_dim(const HPolyhedron& C) {
  std::vector<Vec> rows;
  rows.reserve(C.halfspaces.size());
  for (const auto& f : C.halfspaces) rows.push_back(f.normal);
  return C.dim - rank_of(std::move(rows));
}

int lineality_dim(const TangentCone& C) { return lineality_dim(C.cone); }

Vec relative_interior_point(const HPolyhedron& Q) {
  std::vector<LinearConstraint> sys;
  sys.reserve(Q.facet_count());
  for (const auto& f : Q.halfspaces) sys.push_back(gt(f));
  const Feasibility feas = fm_feasible(sys, Q.dim);
  if (!feas.feasible) throw unsupported_error("relative_interior_point: empty interior");
  return feas.witness;
}

Vec relative_interior_point(const HPolyhedron& P, const std::set<int>& active) {
  std::vector<LinearConstraint> sys;
  sys.reserve(P.facet_count());
  for (size_t i = 0; i < P.facet_count(); ++i) {
    const int idx = static_cast<int>(i);
    if (active.contains(idx)) {
      sys.push_back(eq(P.halfspaces[i]));
    } else {
      sys.push_back(gt(P.halfspaces[i]));
    }
  }
  const Feasibility feas = fm_feasible(sys, P.dim);
  if (!feas.feasible) {
    throw unsupported_error("relative_interior_point: active set has empty relative interior");
  }
  return feas.witness;
}

bool is_bounded(const HPolyhedron& P) {
  // Recession cone {y : <u_i, y> >= 0} is {0} iff no recession direction has
  // a coordinate scalable to +-1.
  for (int k = 0; k < P.dim; ++k) {
    for (int sign : {1, -1}) {
      std::vector<LinearConstraint> sys;
      sys.reserve(P.facet_count() + 1);
      for (const auto& f : P.halfspaces) {
        sys.push_back(ge({f.normal, Rational(0)}));
      }
      AffineForm pin;
      pin.normal = zero_vec(P.dim);
      pin.normal[static_cast<size_t>(k)] = Rational(sign);
      pin.offset = Rational(-1);  // y_k = 1 (resp. -1 after sign flip)
      sys.push_back(eq(pin));
      if (fm_feasible(sys, P.dim).feasible) return false;
    }
  }
  return true;
}

std::string to_string(const Genericity& g) {
  switch (g) {
    case Genericity::simple:
      return "simple";
    case Genericity::nonsimple_vertices_only:
      return "nonsimple-vertices-only";
    case Genericity::unsupported:
      return "unsupported";
  }
  return "unsupported";
}

}  // namespace gramcal
