#ifndef GRAMCAL_POLYHEDRON_HPP
#define GRAMCAL_POLYHEDRON_HPP

#include <set>
#include <vector>

#include "gramcal/fourier_motzkin.hpp"
#include "gramcal/linalg.hpp"

namespace gramcal {

// Full-dimensional polyhedron P = {x : f_i(x) >= 0} with an irredundant,
// order-preserving list of half-spaces. Zero half-spaces means all of R^d.
struct HPolyhedron {
  int dim = 0;
  std::vector<AffineForm> halfspaces;

  size_t facet_count() const { return halfspaces.size(); }
};

struct BuiltPolyhedron {
  HPolyhedron poly;
  std::vector<size_t> kept;  // indices into the input form list, in order
};

// Drops redundant half-spaces (negate-strictly test against the others) and
// verifies a strictly interior point exists.
BuiltPolyhedron build_polyhedron_indexed(const std::vector<AffineForm>& forms, int dim);
HPolyhedron build_polyhedron(const std::vector<AffineForm>& forms, int dim);

// A nonempty face, keyed by the closed active set I_F (every facet
// containing it). I_F empty means the face is the polyhedron itself.
struct Face {
  std::set<int> active_set;
  int dim = 0;
  Vec point;                    // relative-interior witness
  std::vector<Vec> directions;  // affine-hull direction basis

  bool is_whole_polyhedron() const { return active_set.empty(); }
};

struct FaceLattice {
  std::vector<Face> faces;  // sorted by (dim, active_set); includes P itself

  std::vector<const Face*> of_dim(int k) const;
  std::vector<const Face*> vertices() const { return of_dim(0); }
  const Face& whole() const;
};

// Vertices with their full active sets, sorted by coordinates.
std::vector<Face> enumerate_vertices(const HPolyhedron& P);

// Subset-closure enumeration; works for cones as well as polytopes.
// Facet counts above kFaceEnumerationCap are rejected.
inline constexpr size_t kFaceEnumerationCap = 16;
FaceLattice enumerate_faces(const HPolyhedron& P);

enum class Genericity { simple, nonsimple_vertices_only, unsupported };

struct GenericityReport {
  Genericity cls = Genericity::simple;
  std::vector<Face> nonsimple_vertices;  // V_ns(P)
};

// A face F of dimension f is generic iff |I_F| = d - f.
GenericityReport classify_genericity(const HPolyhedron& P, const FaceLattice& lattice);

// Tangent cone at a face: the active half-spaces, original indices retained.
struct TangentCone {
  Face base;
  HPolyhedron cone;
  std::vector<int> facet_indices;  // original facet index per cone half-space
};

TangentCone tangent_cone(const HPolyhedron& P, const Face& F);

int lineality_dim(const HPolyhedron& C);
int lineality_dim(const TangentCone& C);

// Strictly interior point of a full-dimensional polyhedron.
Vec relative_interior_point(const HPolyhedron& Q);
// Relative-interior point of face F: active constraints exact, others strict.
Vec relative_interior_point(const HPolyhedron& P, const std::set<int>& active);

bool is_bounded(const HPolyhedron& P);

bool contains(const HPolyhedron& P, const Vec& x);

std::string to_string(const Genericity& g);

}  // namespace gramcal

#endif
