#ifndef GRAMCAL_TESTS_FIXTURES_HPP
#define GRAMCAL_TESTS_FIXTURES_HPP

#include <random>
#include <vector>

#include "gramcal/decomp.hpp"
#include "gramcal/indicator.hpp"

namespace gramcal::fixtures {

inline WeightedPolyhedron weighted(std::vector<AffineForm> forms, int dim) {
  WeightedPolyhedron wp;
  wp.poly = build_polyhedron(forms, dim);
  return wp;
}

// [0, 1] with facet weights q1 (left) and q2 (right).
inline WeightedPolyhedron interval01() {
  return weighted({form_from({1}, 0), form_from({-1}, 1)}, 1);
}

// Triangle {x >= 0, y >= 0, 1 - x - y >= 0}.
inline WeightedPolyhedron triangle() {
  return weighted({form_from({1, 0}, 0), form_from({0, 1}, 0), form_from({-1, -1}, 1)}, 2);
}

inline WeightedPolyhedron unit_square() {
  return weighted({form_from({1, 0}, 0), form_from({0, 1}, 0), form_from({-1, 0}, 1),
                   form_from({0, -1}, 1)},
                  2);
}

inline WeightedPolyhedron cube3() {
  return weighted({form_from({1, 0, 0}, 0), form_from({0, 1, 0}, 0), form_from({0, 0, 1}, 0),
                   form_from({-1, 0, 0}, 1), form_from({0, -1, 0}, 1), form_from({0, 0, -1}, 1)},
                  3);
}

inline WeightedPolyhedron simplex3() {
  return weighted({form_from({1, 0, 0}, 0), form_from({0, 1, 0}, 0), form_from({0, 0, 1}, 0),
                   form_from({-1, -1, -1}, 1)},
                  3);
}

// Square pyramid over [-1,1]^2 with apex (0,0,1); facet 0 is the base.
inline WeightedPolyhedron pyramid() {
  return weighted({form_from({0, 0, 1}, 0), form_from({-1, 0, -1}, 1), form_from({1, 0, -1}, 1),
                   form_from({0, -1, -1}, 1), form_from({0, 1, -1}, 1)},
                  3);
}

// conv{+-e1, +-e2, +-e3}: every vertex lies on 4 of the 8 facets.
inline WeightedPolyhedron octahedron() {
  std::vector<AffineForm> forms;
  for (long sx : {1, -1}) {
    for (long sy : {1, -1}) {
      for (long sz : {1, -1}) forms.push_back(form_from({-sx, -sy, -sz}, 1));
    }
  }
  return weighted(forms, 3);
}

inline WeightedPolyhedron cube4() {
  std::vector<AffineForm> forms;
  for (int k = 0; k < 4; ++k) {
    AffineForm lo{zero_vec(4), Rational(0)};
    lo.normal[static_cast<size_t>(k)] = Rational(1);
    AffineForm hi{zero_vec(4), Rational(1)};
    hi.normal[static_cast<size_t>(k)] = Rational(-1);
    forms.push_back(lo);
    forms.push_back(hi);
  }
  return weighted(forms, 4);
}

inline WeightedPolyhedron with_all_weights(const WeightedPolyhedron& wp, const Poly& w) {
  WeightedPolyhedron out = wp;
  out.weights = WeightAssignment::all_equal(w, wp.poly.facet_count());
  return out;
}

inline WeightedPolyhedron with_all_weights_q(const WeightedPolyhedron& wp) {
  return with_all_weights(wp, Poly::var("q"));
}

// Exact 2-D convex hull (monotone chain, strict turns only).
inline std::vector<Vec> convex_hull_2d(std::vector<Vec> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;
  auto cross = [](const Vec& o, const Vec& a, const Vec& b) -> Rational {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Vec> hull(2 * points.size());
  size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const size_t lower = k + 1;
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);  // counter-clockwise, no repeated first point
  return hull;
}

// Random simple polygon with rational vertices and at most max_points edges,
// returned as an irredundant H-representation with symbolic weights.
inline WeightedPolyhedron random_polygon(std::mt19937_64& rng, int max_points = 8) {
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 4);
  std::uniform_int_distribution<int> count(4, max_points);
  while (true) {
    std::vector<Vec> points;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      points.push_back({make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))});
    }
    const std::vector<Vec> hull = convex_hull_2d(points);
    if (hull.size() < 3) continue;
    std::vector<AffineForm> forms;
    for (size_t i = 0; i < hull.size(); ++i) {
      const Vec& a = hull[i];
      const Vec& b = hull[(i + 1) % hull.size()];
      // Inward normal of the CCW edge a -> b.
      AffineForm f;
      f.normal = {a[1] - b[1], b[0] - a[0]};
      f.offset = -dot(f.normal, a);
      forms.push_back(std::move(f));
    }
    return weighted(forms, 2);
  }
}

}  // namespace gramcal::fixtures

#endif
