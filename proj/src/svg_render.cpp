#include "gramcal/svg_render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "gramcal/errors.hpp"

namespace gramcal {

namespace {

constexpr double kPanelSize = 240.0;
constexpr double kMargin = 12.0;
constexpr int kColumns = 4;

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Window {
  Rational x0, x1, y0, y1;  // exact bounds; pixel math converts to double
};

struct Mapper {
  Window w;
  double ox, oy;  // panel origin in page coordinates

  double sx(double x) const {
    return ox + (x - w.x0.get_d()) / Rational(w.x1 - w.x0).get_d() * kPanelSize;
  }
  double sy(double y) const {
    return oy + (w.y1.get_d() - y) / Rational(w.y1 - w.y0).get_d() * kPanelSize;
  }
};

std::vector<AffineForm> window_forms_2d(const Window& w) {
  std::vector<AffineForm> forms;
  forms.push_back({{Rational(1), Rational(0)}, -w.x0});
  forms.push_back({{Rational(-1), Rational(0)}, w.x1});
  forms.push_back({{Rational(0), Rational(1)}, -w.y0});
  forms.push_back({{Rational(0), Rational(-1)}, w.y1});
  return forms;
}

// All points of pairwise hyperplane intersections that satisfy every
// constraint: the vertex set of body-intersect-window.
std::vector<Vec> clip_region_points(const WeightedBody& body, const Window& w) {
  std::vector<AffineForm> lines;
  for (const auto& c : body.constraints) {
    if (!c.form.trivial()) lines.push_back(c.form);
  }
  for (const auto& f : window_forms_2d(w)) lines.push_back(f);

  auto inside = [&](const Vec& x) {
    for (const auto& f : lines) {
      if (f.value_at(x) < 0) return false;
    }
    return true;
  };

  std::vector<Vec> points;
  for (size_t i = 0; i < lines.size(); ++i) {
    for (size_t j = i + 1; j < lines.size(); ++j) {
      const AffineSolution sol = solve_affine({lines[i], lines[j]}, 2);
      if (sol.kind != SolutionKind::unique) continue;
      if (!inside(sol.point)) continue;
      if (std::find(points.begin(), points.end(), sol.point) == points.end()) {
        points.push_back(sol.point);
      }
    }
  }
  return points;
}

std::vector<std::pair<double, double>> order_polygon(const std::vector<Vec>& points) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.emplace_back(p[0].get_d(), p[1].get_d());
  double cx = 0, cy = 0;
  for (const auto& [x, y] : pts) {
    cx += x;
    cy += y;
  }
  cx /= static_cast<double>(pts.size());
  cy /= static_cast<double>(pts.size());
  std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
    return std::atan2(a.second - cy, a.first - cx) < std::atan2(b.second - cy, b.first - cx);
  });
  return pts;
}

void render_panel_2d(std::ostringstream& svg, const Mapper& map, const SvgPanel& panel) {
  const std::vector<Vec> region = clip_region_points(panel.body, map.w);

  if (region.size() >= 3) {
    const auto polygon = order_polygon(region);
    svg << "  <polygon points=\"";
    for (const auto& [x, y] : polygon) svg << fmt(map.sx(x)) << "," << fmt(map.sy(y)) << " ";
    svg << "\" fill=\"#cfe2f3\" stroke=\"none\"/>\n";
  } else if (region.size() == 2) {
    svg << "  <line x1=\"" << fmt(map.sx(region[0][0].get_d())) << "\" y1=\""
        << fmt(map.sy(region[0][1].get_d())) << "\" x2=\"" << fmt(map.sx(region[1][0].get_d()))
        << "\" y2=\"" << fmt(map.sy(region[1][1].get_d()))
        << "\" stroke=\"#3d6bb3\" stroke-width=\"4\"/>\n";
  } else if (region.size() == 1) {
    svg << "  <circle cx=\"" << fmt(map.sx(region[0][0].get_d())) << "\" cy=\""
        << fmt(map.sy(region[0][1].get_d())) << "\" r=\"4\" fill=\"#3d6bb3\"/>\n";
  }

  // Facet strokes with weight labels; each hyperplane once.
  std::map<std::pair<Vec, Rational>, bool> seen;
  for (const auto& c : panel.body.constraints) {
    if (c.form.trivial()) continue;
    const AffineForm canon = canonical_hyperplane(c.form);
    if (seen.contains({canon.normal, canon.offset})) continue;
    seen[{canon.normal, canon.offset}] = true;

    std::vector<Vec> on_line;
    for (const auto& p : region) {
      if (c.form.value_at(p) == 0) on_line.push_back(p);
    }
    if (on_line.size() < 2) continue;
    // Extreme points along the line direction.
    const Vec dir = {-(canon.normal[1]), canon.normal[0]};
    std::sort(on_line.begin(), on_line.end(),
              [&](const Vec& a, const Vec& b) { return dot(dir, a) < dot(dir, b); });
    const Vec& a = on_line.front();
    const Vec& b = on_line.back();
    svg << "  <line x1=\"" << fmt(map.sx(a[0].get_d())) << "\" y1=\"" << fmt(map.sy(a[1].get_d()))
        << "\" x2=\"" << fmt(map.sx(b[0].get_d())) << "\" y2=\"" << fmt(map.sy(b[1].get_d()))
        << "\" stroke=\"#1f3864\" stroke-width=\"2\"/>\n";
    if (!c.weight.is_constant() || c.weight.constant_value() != 1) {
      const double mx = (a[0].get_d() + b[0].get_d()) / 2;
      const double my = (a[1].get_d() + b[1].get_d()) / 2;
      svg << "  <text x=\"" << fmt(map.sx(mx) + 4) << "\" y=\"" << fmt(map.sy(my) - 4)
          << "\" font-family=\"monospace\" font-size=\"11\" fill=\"#7a1f1f\">"
          << escape_xml(c.weight.str()) << "</text>\n";
    }
  }
}

struct Interval {
  double lo, hi;
  bool lo_active, hi_active;  // endpoint comes from a body constraint
  Poly lo_weight, hi_weight;
  bool empty;
};

Interval clip_interval(const WeightedBody& body, const Window& w) {
  Interval out{w.x0.get_d(), w.x1.get_d(), false, false, Poly(1), Poly(1), false};
  Rational lo_exact, hi_exact;
  bool lo_set = false, hi_set = false;
  for (const auto& c : body.constraints) {
    if (c.form.trivial()) {
      if (c.form.offset < 0) out.empty = true;
      continue;
    }
    const Rational bound = -c.form.offset / c.form.normal[0];
    if (c.form.normal[0] > 0) {
      if (!lo_set || bound > lo_exact) {
        lo_exact = bound;
        lo_set = true;
        out.lo_weight = c.weight;
      } else if (bound == lo_exact) {
        out.lo_weight *= c.weight;
      }
    } else {
      if (!hi_set || bound < hi_exact) {
        hi_exact = bound;
        hi_set = true;
        out.hi_weight = c.weight;
      } else if (bound == hi_exact) {
        out.hi_weight *= c.weight;
      }
    }
  }
  if (lo_set && lo_exact.get_d() > out.lo) {
    out.lo = lo_exact.get_d();
    out.lo_active = true;
  }
  if (hi_set && hi_exact.get_d() < out.hi) {
    out.hi = hi_exact.get_d();
    out.hi_active = true;
  }
  if (lo_set && hi_set && lo_exact > hi_exact) out.empty = true;
  return out;
}

void render_panel_1d(std::ostringstream& svg, const Mapper& map, const SvgPanel& panel) {
  const double axis_y = map.oy + kPanelSize / 2;
  svg << "  <line x1=\"" << fmt(map.ox) << "\" y1=\"" << fmt(axis_y) << "\" x2=\""
      << fmt(map.ox + kPanelSize) << "\" y2=\"" << fmt(axis_y)
      << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  const Interval iv = clip_interval(panel.body, map.w);
  if (iv.empty || iv.lo > iv.hi) return;
  svg << "  <line x1=\"" << fmt(map.sx(iv.lo)) << "\" y1=\"" << fmt(axis_y) << "\" x2=\""
      << fmt(map.sx(iv.hi)) << "\" y2=\"" << fmt(axis_y)
      << "\" stroke=\"#3d6bb3\" stroke-width=\"5\"/>\n";
  auto endpoint = [&](double x, const Poly& weight) {
    svg << "  <circle cx=\"" << fmt(map.sx(x)) << "\" cy=\"" << fmt(axis_y)
        << "\" r=\"4\" fill=\"#1f3864\"/>\n";
    if (!weight.is_constant() || weight.constant_value() != 1) {
      svg << "  <text x=\"" << fmt(map.sx(x) - 8) << "\" y=\"" << fmt(axis_y - 10)
          << "\" font-family=\"monospace\" font-size=\"11\" fill=\"#7a1f1f\">"
          << escape_xml(weight.str()) << "</text>\n";
    }
  };
  if (iv.lo_active) endpoint(iv.lo, iv.lo_weight);
  if (iv.hi_active) endpoint(iv.hi, iv.hi_weight);
}

}  // namespace

std::string render_panels_svg(const WeightedPolyhedron& target,
                              const std::vector<SvgPanel>& panels) {
  const int dim = target.poly.dim;
  if (dim != 1 && dim != 2) {
    throw input_error("render: only dimensions 1 and 2 are drawable; project first");
  }
  const std::vector<Face> vertices = enumerate_vertices(target.poly);
  if (vertices.empty()) throw input_error("render: target polytope has no vertices");

  Window w{vertices[0].point[0], vertices[0].point[0], Rational(0), Rational(0)};
  if (dim == 2) {
    w.y0 = vertices[0].point[1];
    w.y1 = w.y0;
  }
  for (const auto& v : vertices) {
    w.x0 = std::min(w.x0, v.point[0]);
    w.x1 = std::max(w.x1, v.point[0]);
    if (dim == 2) {
      w.y0 = std::min(w.y0, v.point[1]);
      w.y1 = std::max(w.y1, v.point[1]);
    }
  }
  w.x0 -= 1;
  w.x1 += 1;
  w.y0 -= 1;
  w.y1 += 1;

  const int count = static_cast<int>(panels.size());
  const int cols = std::min(kColumns, std::max(count, 1));
  const int rows = (count + cols - 1) / cols;
  const double width = cols * (kPanelSize + kMargin) + kMargin;
  const double height = rows * (kPanelSize + kMargin + 18) + kMargin;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  svg << "<svg width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" version=\"1.1\" xmlns=\"http://www.w3.org/2000/svg\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (int p = 0; p < count; ++p) {
    const int row = p / cols;
    const int col = p % cols;
    Mapper map{w, kMargin + col * (kPanelSize + kMargin),
               kMargin + 18 + row * (kPanelSize + kMargin + 18)};
    svg << "  <g>\n";
    svg << "  <rect x=\"" << fmt(map.ox) << "\" y=\"" << fmt(map.oy) << "\" width=\""
        << fmt(kPanelSize) << "\" height=\"" << fmt(kPanelSize)
        << "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    svg << "  <text x=\"" << fmt(map.ox) << "\" y=\"" << fmt(map.oy - 5)
        << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#000000\">"
        << escape_xml(panels[static_cast<size_t>(p)].label) << "</text>\n";
    if (dim == 2) {
      render_panel_2d(svg, map, panels[static_cast<size_t>(p)]);
    } else {
      render_panel_1d(svg, map, panels[static_cast<size_t>(p)]);
    }
    svg << "  </g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace gramcal
