#include "gramcal/decomp.hpp"

#include <algorithm>

#include "gramcal/errors.hpp"

namespace gramcal {

namespace {

Poly sign_coeff(int face_dim) {
  return face_dim % 2 == 0 ? Poly(1) : Poly(-1);
}

void require_polytope(const HPolyhedron& P, const char* op) {
  if (!is_bounded(P)) {
    throw unsupported_error(std::string(op) + ": polyhedron is unbounded");
  }
}

}  // namespace

FormalSum brianchon_gram(const WeightedPolyhedron& wp) {
  return brianchon_gram(wp, enumerate_faces(wp.poly));
}

FormalSum brianchon_gram(const WeightedPolyhedron& wp, const FaceLattice& lattice) {
  require_polytope(wp.poly, "brianchon_gram");
  const GenericityReport genericity = classify_genericity(wp.poly, lattice);
  if (genericity.cls == Genericity::unsupported) {
    throw unsupported_error(
        "brianchon_gram: non-generic faces of positive dimension are not supported");
  }
  FormalSum sum(wp.poly.dim);
  for (const Face& face : lattice.faces) {
    sum.append(sign_coeff(face.dim), WeightedBody::of_cone(tangent_cone(wp.poly, face), wp));
  }
  return sum;
}

FormalSum face_expansion(const WeightedPolyhedron& wp) {
  return face_expansion(wp, enumerate_faces(wp.poly));
}

FormalSum face_expansion(const WeightedPolyhedron& wp, const FaceLattice& lattice) {
  const GenericityReport genericity = classify_genericity(wp.poly, lattice);
  if (genericity.cls != Genericity::simple) {
    throw unsupported_error("face_expansion: polyhedron is not simple");
  }
  FormalSum sum(wp.poly.dim);
  for (const Face& face : lattice.faces) {
    if (face.is_whole_polyhedron()) {
      sum.append(Poly(1), WeightedBody::of_face(wp.poly, face));
      continue;
    }
    Poly coeff(1);
    for (int i : face.active_set) coeff *= wp.facet_weight(i) - Poly(1);
    sum.append(std::move(coeff), WeightedBody::of_face(wp.poly, face));
  }
  return sum;
}

std::pair<Poly, Poly> product_expand(const std::set<int>& facet_indices) {
  if (facet_indices.empty()) throw input_error("product_expand: empty index set");
  if (facet_indices.size() > 20) {
    throw unsupported_error("product_expand: more than 20 indices");
  }
  const std::vector<int> indices(facet_indices.begin(), facet_indices.end());
  Poly lhs(1);
  for (int i : indices) lhs *= Poly::var(facet_weight_name(i));

  Poly rhs(1);
  const size_t n = indices.size();
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    Poly prod(1);
    for (size_t k = 0; k < n; ++k) {
      if (mask & (uint64_t{1} << k)) {
        prod *= Poly::var(facet_weight_name(indices[k])) - Poly(1);
      }
    }
    rhs += prod;
  }
  return {std::move(lhs), std::move(rhs)};
}

namespace {

int body_lineality(const WeightedBody& body) {
  std::vector<Vec> rows;
  rows.reserve(body.constraints.size());
  for (const auto& c : body.constraints) rows.push_back(c.form.normal);
  return body.dim - rank_of(std::move(rows));
}

}  // namespace

BrionSplit brion_split(const FormalSum& bg) {
  BrionSplit split{FormalSum(bg.dim()), FormalSum(bg.dim())};
  for (const auto& term : bg.terms()) {
    if (body_lineality(term.body) == 0) {
      split.vertex_part.append(term);
    } else {
      split.line_part.append(term);
    }
  }
  return split;
}

bool is_polarizing(const Vec& xi, const FaceLattice& lattice) {
  for (const Face* edge : lattice.of_dim(1)) {
    if (edge->directions.size() != 1) {
      throw unsupported_error("is_polarizing: edge without a 1-dimensional hull");
    }
    if (dot(xi, edge->directions.front()) == 0) return false;
  }
  return true;
}

Vec sample_polarizing(const HPolyhedron& P, const FaceLattice& lattice) {
  auto next_prime = [](long p) {
    auto is_prime = [](long n) {
      for (long k = 2; k * k <= n; ++k) {
        if (n % k == 0) return false;
      }
      return n >= 2;
    };
    do {
      ++p;
    } while (!is_prime(p));
    return p;
  };

  long m = 2;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vec xi(static_cast<size_t>(P.dim));
    Rational power(1);
    for (auto& c : xi) {
      c = power;
      power *= m;
    }
    if (is_polarizing(xi, lattice)) return xi;
    m = next_prime(m);
  }
  throw unsupported_error("sample_polarizing: no polarizing covector found");
}

namespace {

// The unique xi-minimizing vertex of a face; uniqueness is exactly the
// polarizing property restricted to that face.
const Face* xi_min_vertex(const FaceLattice& lattice, const Face& face, const Vec& xi) {
  const Face* best = nullptr;
  Rational best_value(0);
  bool tie = false;
  for (const Face* v : lattice.vertices()) {
    if (!std::includes(v->active_set.begin(), v->active_set.end(), face.active_set.begin(),
                       face.active_set.end())) {
      continue;
    }
    const Rational value = dot(xi, v->point);
    if (best == nullptr || value < best_value) {
      best = v;
      best_value = value;
      tie = false;
    } else if (value == best_value) {
      tie = true;
    }
  }
  if (best == nullptr || tie) {
    throw input_error("xi is not polarizing on a face of the polytope");
  }
  return best;
}

void require_polar_input(const WeightedPolyhedron& wp, const FaceLattice& lattice,
                         const Vec& xi) {
  require_polytope(wp.poly, "polar decomposition");
  if (static_cast<int>(xi.size()) != wp.poly.dim) {
    throw input_error("polar decomposition: xi dimension mismatch");
  }
  if (!is_polarizing(xi, lattice)) {
    throw input_error("polar decomposition: xi is constant on an edge");
  }
}

}  // namespace

FormalSum polar_group_sum(const WeightedPolyhedron& wp, const FaceLattice& lattice,
                          const Face& vertex, const Vec& xi) {
  require_polar_input(wp, lattice, xi);
  FormalSum sum(wp.poly.dim);
  for (const Face& face : lattice.faces) {
    const Face* min_vertex = xi_min_vertex(lattice, face, xi);
    if (min_vertex->active_set != vertex.active_set) continue;
    sum.append(sign_coeff(face.dim), WeightedBody::of_cone(tangent_cone(wp.poly, face), wp));
  }
  return sum;
}

PolarizedCone polarize_vertex_cone(const WeightedPolyhedron& wp, const FaceLattice& lattice,
                                   const Face& vertex, const Vec& xi) {
  require_polar_input(wp, lattice, xi);
  const int d = wp.poly.dim;
  if (static_cast<int>(vertex.active_set.size()) != d) {
    throw unsupported_error("polarize_vertex_cone: vertex cone is not simple");
  }

  PolarizedCone out;
  out.vertex = vertex;
  out.original = tangent_cone(wp.poly, vertex);
  out.cone.dim = d;

  const std::vector<int> active(vertex.active_set.begin(), vertex.active_set.end());
  for (size_t pos = 0; pos < active.size(); ++pos) {
    // Edge e_i leaves exactly facet i: solve the other active hyperplane
    // directions and orient the ray into the cone.
    std::vector<AffineForm> eqs;
    for (size_t other = 0; other < active.size(); ++other) {
      if (other == pos) continue;
      eqs.push_back({wp.poly.halfspaces[static_cast<size_t>(active[other])].normal, Rational(0)});
    }
    const AffineSolution sol = solve_affine(eqs, d);
    if (sol.directions.size() != 1) {
      throw unsupported_error("polarize_vertex_cone: vertex cone is not simple");
    }
    Vec edge = sol.directions.front();
    const Rational inward =
        dot(wp.poly.halfspaces[static_cast<size_t>(active[pos])].normal, edge);
    if (inward == 0) {
      throw unsupported_error("polarize_vertex_cone: degenerate edge direction");
    }
    if (inward < 0) edge = vec_scale(Rational(-1), edge);

    const Rational xi_on_edge = dot(xi, edge);
    if (xi_on_edge == 0) {
      throw input_error("polar decomposition: xi is constant on an edge");
    }
    const int facet = active[pos];
    const AffineForm& form = wp.poly.halfspaces[static_cast<size_t>(facet)];
    if (xi_on_edge > 0) {
      out.flipped.insert(facet);
      out.cone.halfspaces.push_back(form.negated());
      out.facet_weights.push_back(Poly(1) - wp.facet_weight(facet));
    } else {
      out.cone.halfspaces.push_back(form);
      out.facet_weights.push_back(wp.facet_weight(facet));
    }
    out.facet_indices.push_back(facet);
  }
  return out;
}

WeightedBody PolarizedCone::body() const {
  WeightedBody b;
  b.dim = cone.dim;
  b.constraints.reserve(cone.facet_count());
  for (size_t k = 0; k < cone.facet_count(); ++k) {
    b.constraints.push_back({cone.halfspaces[k], facet_weights[k]});
  }
  return b;
}

std::vector<PolarizedCone> polar_decompose(const WeightedPolyhedron& wp,
                                           const FaceLattice& lattice, const Vec& xi) {
  std::vector<PolarizedCone> cones;
  for (const Face* vertex : lattice.vertices()) {
    cones.push_back(polarize_vertex_cone(wp, lattice, *vertex, xi));
  }
  return cones;
}

FormalSum polar_total(const std::vector<PolarizedCone>& cones, int dim) {
  FormalSum sum(dim);
  for (const auto& cone : cones) sum.append(Poly(cone.sign()), cone.body());
  return sum;
}

namespace {

AffineForm sum_of_active_forms(const HPolyhedron& P, const std::set<int>& active,
                               const std::vector<Rational>& boosts) {
  AffineForm eta{zero_vec(P.dim), Rational(0)};
  size_t pos = 0;
  for (int i : active) {
    const Rational factor = Rational(1) + boosts[pos++];
    const AffineForm& f = P.halfspaces[static_cast<size_t>(i)];
    for (int k = 0; k < P.dim; ++k) {
      eta.normal[static_cast<size_t>(k)] += factor * f.normal[static_cast<size_t>(k)];
    }
    eta.offset += factor * f.offset;
  }
  return eta;
}

}  // namespace

ChopData chop_nonsimple(const WeightedPolyhedron& wp) {
  require_polytope(wp.poly, "chop_nonsimple");
  const FaceLattice lattice = enumerate_faces(wp.poly);
  const GenericityReport genericity = classify_genericity(wp.poly, lattice);
  if (genericity.cls == Genericity::unsupported) {
    throw unsupported_error("chop_nonsimple: unsupported genericity class");
  }

  ChopData out;
  if (genericity.cls == Genericity::simple) {
    out.simple_polytope = wp;
    for (size_t i = 0; i < wp.poly.facet_count(); ++i) {
      out.facet_origin.push_back(static_cast<int>(i));
    }
    return out;
  }

  const std::vector<const Face*> vertices = lattice.vertices();
  const size_t n_orig = wp.poly.facet_count();

  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<ChopPlane> chops;
    bool degenerate = false;
    for (const Face& v : genericity.nonsimple_vertices) {
      std::vector<Rational> boosts(v.active_set.size(), Rational(0));
      if (attempt > 0) {
        // Deterministic small perturbation, positive so eta stays uniquely
        // minimized at the vertex.
        for (size_t pos = 0; pos < boosts.size(); ++pos) {
          boosts[pos] = Rational(1, 16 * attempt * static_cast<long>(pos + 2));
        }
      }
      const AffineForm eta = sum_of_active_forms(wp.poly, v.active_set, boosts);
      Rational min_gap(0);
      bool first = true;
      for (const Face* u : vertices) {
        if (u->point == v.point) continue;
        const Rational gap = eta.value_at(u->point);
        if (gap <= 0) {
          degenerate = true;
          break;
        }
        if (first || gap < min_gap) {
          min_gap = gap;
          first = false;
        }
      }
      if (degenerate || first) {
        degenerate = true;
        break;
      }
      Rational epsilon = min_gap / 2;
      for (int halve = 0; halve < attempt; ++halve) epsilon /= 2;
      AffineForm chop_form = eta;
      chop_form.offset -= epsilon;
      chops.push_back({v, eta, epsilon, chop_form});
    }
    if (degenerate) continue;

    std::vector<AffineForm> forms = wp.poly.halfspaces;
    for (const auto& chop : chops) forms.push_back(chop.chop_form);
    const BuiltPolyhedron built = build_polyhedron_indexed(forms, wp.poly.dim);

    // Every original facet must survive the truncation.
    bool originals_intact = true;
    size_t seen_originals = 0;
    for (size_t idx : built.kept) {
      if (idx < n_orig) ++seen_originals;
    }
    originals_intact = seen_originals == n_orig;
    if (!originals_intact) continue;

    const FaceLattice ps_lattice = enumerate_faces(built.poly);
    if (classify_genericity(built.poly, ps_lattice).cls != Genericity::simple) continue;

    out.chops = std::move(chops);
    out.simple_polytope.poly = built.poly;
    out.simple_polytope.weights.default_mode = WeightAssignment::Default::one;
    out.facet_origin.clear();
    for (size_t pos = 0; pos < built.kept.size(); ++pos) {
      const size_t idx = built.kept[pos];
      if (idx < n_orig) {
        out.facet_origin.push_back(static_cast<int>(idx));
        out.simple_polytope.weights.explicit_weights.emplace(
            static_cast<int>(pos), wp.facet_weight(static_cast<int>(idx)));
      } else {
        const int chop_index = static_cast<int>(idx - n_orig);
        out.facet_origin.push_back(-(chop_index + 1));
        out.simple_polytope.weights.explicit_weights.emplace(static_cast<int>(pos), Poly(1));
      }
    }
    return out;
  }
  throw unsupported_error("chop_nonsimple: failed to reach a simple truncation");
}

bool NonsimpleWitness::all_equal() const {
  for (const auto& check : checks) {
    if (!check.verdict.is_equal()) return false;
  }
  return !checks.empty();
}

NonsimpleWitness nonsimple_bg_witness(const WeightedPolyhedron& wp, const ChopData& chop,
                                      const CheckOptions& options) {
  if (chop.chops.empty()) {
    throw input_error("nonsimple_bg_witness: chop data has no truncated vertices");
  }
  const int dim = wp.poly.dim;
  const WeightedPolyhedron& ps = chop.simple_polytope;
  const FaceLattice lattice_p = enumerate_faces(wp.poly);
  const FaceLattice lattice_ps = enumerate_faces(ps.poly);

  NonsimpleWitness out;
  out.f_p = brianchon_gram(wp, lattice_p);
  out.bg_simple = brianchon_gram(ps, lattice_ps);

  // Grouped right-hand side of the key difference: per truncated vertex,
  // the cones of the P_s faces lying in the cut hyperplane minus the
  // original vertex cone.
  out.key_difference = FormalSum(dim);
  out.correction = FormalSum(dim);
  for (size_t k = 0; k < chop.chops.size(); ++k) {
    const ChopPlane& plane = chop.chops[k];
    int cut_facet = -1;
    for (size_t pos = 0; pos < chop.facet_origin.size(); ++pos) {
      if (chop.facet_origin[pos] == -(static_cast<int>(k) + 1)) {
        cut_facet = static_cast<int>(pos);
      }
    }
    if (cut_facet < 0) {
      throw unsupported_error("nonsimple_bg_witness: cut facet missing from P_s");
    }
    for (const Face& face : lattice_ps.faces) {
      if (!face.active_set.contains(cut_facet)) continue;
      out.key_difference.append(sign_coeff(face.dim),
                                WeightedBody::of_cone(tangent_cone(ps.poly, face), ps));
    }
    const TangentCone vertex_cone = tangent_cone(wp.poly, plane.vertex);
    out.key_difference.append(Poly(-1), WeightedBody::of_cone(vertex_cone, wp));

    // 1^w_{C_v \ H_v} = 1^w_{C_v} - 1^w_{C_v cut by H_v}, cut facet weight 1.
    out.correction.append(Poly(-1), WeightedBody::of_cone(vertex_cone, wp));
    WeightedBody cut_cone = WeightedBody::of_cone(vertex_cone, wp);
    cut_cone.constraints.push_back({plane.chop_form, Poly(1)});
    out.correction.append(Poly(1), std::move(cut_cone));
  }

  const FormalSum ind_ps = indicator_sum(ps);
  const FormalSum ind_p = indicator_sum(wp);
  const FormalSum difference = out.bg_simple - out.f_p;
  const FormalSum truncation_difference = ind_ps - ind_p;

  struct Planned {
    const char* name;
    const FormalSum* lhs;
    const FormalSum* rhs;
  };
  const std::vector<Planned> planned = {
      {"choppolytope", &out.bg_simple, &ind_ps},
      {"keydifference", &difference, &out.key_difference},
      {"correction", &difference, &out.correction},
      {"truncation-difference", &truncation_difference, &out.correction},
      {"conclusion", &out.f_p, &ind_p},
  };

  // All five identities live on one hyperplane set; decompose once.
  std::vector<const FormalSum*> everything;
  for (const auto& p : planned) {
    everything.push_back(p.lhs);
    everything.push_back(p.rhs);
  }
  const std::vector<AffineForm> planes = collect_hyperplanes(everything);
  try {
    const CellDecomposition cells = arrangement_cells(planes, dim, options.cell_cap);
    for (const auto& p : planned) {
      out.checks.push_back({p.name, identity_check_on(cells, *p.lhs, *p.rhs)});
    }
  } catch (const cell_cap_exceeded&) {
    if (options.fallback_samples == 0) throw;
    for (const auto& p : planned) {
      out.checks.push_back(
          {p.name, random_point_check(*p.lhs, *p.rhs, options.fallback_samples, options.seed)});
    }
  }
  return out;
}

FormalSum mutate_sum(const FormalSum& s, MutationKind kind, size_t term_index,
                     size_t constraint_index) {
  if (term_index >= s.size()) throw input_error("mutate_sum: term index out of range");
  FormalSum out(s.dim());
  size_t t = 0;
  for (const auto& term : s.terms()) {
    if (t++ != term_index) {
      out.append(term);
      continue;
    }
    Poly coeff = term.coeff;
    WeightedBody body = term.body;
    switch (kind) {
      case MutationKind::flip_sign:
        coeff = -coeff;
        break;
      case MutationKind::bump_weight:
        if (constraint_index >= body.constraints.size()) {
          throw input_error("mutate_sum: constraint index out of range");
        }
        body.constraints[constraint_index].weight += Poly(1);
        break;
      case MutationKind::shift_offset:
        if (constraint_index >= body.constraints.size()) {
          throw input_error("mutate_sum: constraint index out of range");
        }
        body.constraints[constraint_index].form.offset += Rational(1, 7);
        break;
    }
    out.append(std::move(coeff), std::move(body));
  }
  return out;
}

}  // namespace gramcal
