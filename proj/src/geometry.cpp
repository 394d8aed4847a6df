#include "treesplit/geometry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace treesplit {

double point_segment_distance(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

double point_polyline_distance(Point p, std::span<const Point> chain, bool closed) {
  if (chain.empty()) throw std::invalid_argument("empty polyline");
  if (chain.size() == 1) return distance(p, chain[0]);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    best = std::min(best, point_segment_distance(p, chain[i], chain[i + 1]));
  }
  if (closed) best = std::min(best, point_segment_distance(p, chain.back(), chain.front()));
  return best;
}

bool point_in_polygon(Point p, std::span<const Point> polygon, double tol) {
  if (polygon.size() < 3) return false;
  if (point_polyline_distance(p, polygon, true) <= tol) return true;
  bool inside = false;
  for (std::size_t i = 0, j = polygon.size() - 1; i < polygon.size(); j = i++) {
    const Point a = polygon[i];
    const Point b = polygon[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

double point_polygon_distance(Point p, std::span<const Point> polygon) {
  if (point_in_polygon(p, polygon, 0.0)) return 0.0;
  return point_polyline_distance(p, polygon, true);
}

double signed_area(std::span<const Point> polygon) {
  double twice = 0.0;
  for (std::size_t i = 0, j = polygon.size() - 1; i < polygon.size(); j = i++) {
    twice += cross(polygon[j], polygon[i]);
  }
  return 0.5 * twice;
}

namespace {

double directed_point_sets(std::span<const Point> from, std::span<const Point> to) {
  double worst = 0.0;
  for (const Point p : from) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point q : to) best = std::min(best, distance(p, q));
    worst = std::max(worst, best);
  }
  return worst;
}

// sup over s in [a,b] of min_i |s - pts[i]|. The nearest point changes only
// where the segment crosses a perpendicular bisector, and along the segment the
// squared-distance difference between two sites is linear in t, so we can step
// from one nearest site to the next exactly.
double segment_to_points(Point a, Point b, std::span<const Point> pts) {
  const Point ab = b - a;
  auto nearest_at = [&](double t) {
    const Point s = a + t * ab;
    std::size_t idx = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double d = distance(s, pts[i]);
      if (d < best) {
        best = d;
        idx = i;
      }
    }
    return std::pair{idx, best};
  };
  auto [cur, d0] = nearest_at(0.0);
  double worst = d0;
  double t = 0.0;
  // At most pts.size() changes, but guard against float ping-pong.
  for (std::size_t guard = 0; guard <= 2 * pts.size() + 2; ++guard) {
    // |s-p|^2 - |s-c|^2 = |a-p|^2 - |a-c|^2 + 2t ab.(c - p)
    double next_t = 1.0;
    std::size_t next = cur;
    const Point c = pts[cur];
    const double ac2 = dot(a - c, a - c);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i == cur) continue;
      const Point p = pts[i];
      const double slope = 2.0 * dot(ab, c - p);
      if (slope >= 0.0) continue;  // p never overtakes c going forward
      const double cross_t = -(dot(a - p, a - p) - ac2) / slope;
      if (cross_t > t + 1e-15 && cross_t < next_t) {
        next_t = cross_t;
        next = i;
      }
    }
    worst = std::max(worst, distance(a + next_t * ab, c));
    if (next == cur || next_t >= 1.0) break;
    t = next_t;
    cur = next;
  }
  return std::max(worst, nearest_at(1.0).second);
}

}  // namespace

double hausdorff_distance(std::span<const Point> a, std::span<const Point> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff_distance: empty input");
  return std::max(directed_point_sets(a, b), directed_point_sets(b, a));
}

double hausdorff_distance_to_boundary(std::span<const Point> a, std::span<const Point> polygon) {
  if (a.empty() || polygon.empty()) throw std::invalid_argument("hausdorff_distance: empty input");
  double worst = 0.0;
  for (const Point p : a) worst = std::max(worst, point_polyline_distance(p, polygon, true));
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point u = polygon[i];
    const Point v = polygon[(i + 1) % polygon.size()];
    worst = std::max(worst, segment_to_points(u, v, a));
  }
  return worst;
}

std::vector<Point> densify_closed(std::span<const Point> polygon, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("densify_closed: step must be positive");
  std::vector<Point> out;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point u = polygon[i];
    const Point v = polygon[(i + 1) % polygon.size()];
    const int pieces = std::max(1, static_cast<int>(std::ceil(distance(u, v) / step)));
    for (int j = 0; j < pieces; ++j) out.push_back(u + (static_cast<double>(j) / pieces) * (v - u));
  }
  return out;
}

double boundary_hausdorff(std::span<const Point> a, std::span<const Point> b, double step) {
  const auto da = densify_closed(a, step);
  const auto db = densify_closed(b, step);
  double worst = 0.0;
  for (const Point p : da) worst = std::max(worst, point_polyline_distance(p, b, true));
  for (const Point p : db) worst = std::max(worst, point_polyline_distance(p, a, true));
  return worst;
}

}  // namespace treesplit
