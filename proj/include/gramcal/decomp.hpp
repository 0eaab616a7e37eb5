#ifndef GRAMCAL_DECOMP_HPP
#define GRAMCAL_DECOMP_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gramcal/indicator.hpp"
#include "gramcal/verify.hpp"

namespace gramcal {

// Sum over all faces F of (-1)^{dim F} 1^w_{C_F}, tangent cones carrying the
// inherited facet weights. Requires the polytope to be simple or non-simple
// at vertices only; terms are ordered by (dim F, I_F).
FormalSum brianchon_gram(const WeightedPolyhedron& wp);
FormalSum brianchon_gram(const WeightedPolyhedron& wp, const FaceLattice& lattice);

// 1_P + sum over proper faces of prod_{i in I_F}(q_i - 1) 1_F with
// unweighted face bodies. Requires a simple polyhedron.
FormalSum face_expansion(const WeightedPolyhedron& wp);
FormalSum face_expansion(const WeightedPolyhedron& wp, const FaceLattice& lattice);

// Inclusion-exclusion weight identity: lhs = prod q_i,
// rhs = 1 + sum over nonempty J of prod_{i in J}(q_i - 1).
std::pair<Poly, Poly> product_expand(const std::set<int>& facet_indices);

struct BrionSplit {
  FormalSum line_part;    // every body contains a line
  FormalSum vertex_part;  // pointed vertex cones, all coefficients +1
};

BrionSplit brion_split(const FormalSum& bg);

// Polarizing covectors: nonconstant on every edge.
bool is_polarizing(const Vec& xi, const FaceLattice& lattice);
// Deterministic search over (1, M, M^2, ...) for growing primes M.
Vec sample_polarizing(const HPolyhedron& P, const FaceLattice& lattice);

// The group of faces containing `vertex` whose xi-minimum sits at it, summed
// with Brianchon-Gram signs.
FormalSum polar_group_sum(const WeightedPolyhedron& wp, const FaceLattice& lattice,
                          const Face& vertex, const Vec& xi);

// Vertex cone with the xi-increasing edges flipped. Edge index i names the
// unique active facet that the edge leaves; flipping edge i negates that
// facet's half-space and replaces its weight q_i by 1 - q_i.
struct PolarizedCone {
  Face vertex;
  TangentCone original;
  std::set<int> flipped;  // facet indices of flipped edges
  HPolyhedron cone;       // C-sharp
  std::vector<int> facet_indices;
  std::vector<Poly> facet_weights;

  int flip_count() const { return static_cast<int>(flipped.size()); }
  int sign() const { return flip_count() % 2 == 0 ? 1 : -1; }
  WeightedBody body() const;
};

PolarizedCone polarize_vertex_cone(const WeightedPolyhedron& wp, const FaceLattice& lattice,
                                   const Face& vertex, const Vec& xi);

std::vector<PolarizedCone> polar_decompose(const WeightedPolyhedron& wp,
                                           const FaceLattice& lattice, const Vec& xi);

FormalSum polar_total(const std::vector<PolarizedCone>& cones, int dim);

// Truncation data for the non-simple-vertex extension.
struct ChopPlane {
  Face vertex;           // the chopped non-simple vertex
  AffineForm eta;        // sum of active forms, zero at the vertex
  Rational epsilon;      // half the minimal eta-gap to the other vertices
  AffineForm chop_form;  // eta - epsilon >= 0, oriented away from the vertex
};

struct ChopData {
  std::vector<ChopPlane> chops;
  WeightedPolyhedron simple_polytope;  // P_s; chop facets weighted 1
  // For each facet of P_s: original facet index, or -(k+1) for chop k.
  std::vector<int> facet_origin;

  bool chop_facet(size_t ps_facet) const { return facet_origin[ps_facet] < 0; }
};

ChopData chop_nonsimple(const WeightedPolyhedron& wp);

struct PipelineCheck {
  std::string name;
  Verdict verdict;
};

// The four sums of the chopping pipeline plus their exact verification.
struct NonsimpleWitness {
  FormalSum bg_simple;       // Brianchon-Gram sum of P_s
  FormalSum f_p;             // face-cone sum of the non-simple P
  FormalSum key_difference;  // per-vertex grouped form of bg_simple - f_p
  FormalSum correction;      // -sum_v (1^w_{C_v} - 1^w_{C_v cut by H_v})
  std::vector<PipelineCheck> checks;

  bool all_equal() const;
};

NonsimpleWitness nonsimple_bg_witness(const WeightedPolyhedron& wp, const ChopData& chop,
                                      const CheckOptions& options = {});

// Fault injection for sensitivity tests: flips one coefficient sign, bumps
// one facet weight by 1, or shifts one half-space offset by 1/7.
enum class MutationKind { flip_sign, bump_weight, shift_offset };

FormalSum mutate_sum(const FormalSum& s, MutationKind kind, size_t term_index = 0,
                     size_t constraint_index = 0);

}  // namespace gramcal

#endif
