#ifndef GRAMCAL_POLYTOPE_IO_HPP
#define GRAMCAL_POLYTOPE_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gramcal/indicator.hpp"

namespace gramcal {

// Plain-text polytope description:
//   dim <d>
//   facet <u_1> ... <u_d> <mu> [weight=<expr>]
// Entries are integers or "p/q"; '#' lines and blank lines are skipped;
// anything else is rejected. Facets without a weight default to q<index>.
struct ParsedPolytope {
  int dim = 0;
  std::vector<AffineForm> forms;
  std::vector<std::optional<Poly>> weights;  // parallel to forms
};

ParsedPolytope parse_polytope_text(std::istream& in, const std::string& source_name);
ParsedPolytope parse_polytope_file(const std::string& path);

// Irredundant build plus weight attachment; weights of dropped half-spaces
// are dropped with them, defaults are named after the original line order.
WeightedPolyhedron build_weighted(const ParsedPolytope& parsed);

// Canonical rendering; parse-then-print is idempotent on its output.
std::string print_polytope_file(const WeightedPolyhedron& wp);

}  // namespace gramcal

#endif
