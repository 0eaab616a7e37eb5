#ifndef GRAMCAL_SVG_RENDER_HPP
#define GRAMCAL_SVG_RENDER_HPP

#include <string>
#include <vector>

#include "gramcal/indicator.hpp"

namespace gramcal {

struct SvgPanel {
  std::string label;  // coefficient annotation ("target", "+1", "-1", ...)
  WeightedBody body;
};

// One panel per entry: clipped region shading, facet strokes annotated with
// their weights. Supports ambient dimension 1 and 2; the clip window is the
// target polytope's bounding box inflated by 1.
std::string render_panels_svg(const WeightedPolyhedron& target,
                              const std::vector<SvgPanel>& panels);

}  // namespace gramcal

#endif
