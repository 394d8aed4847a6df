#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace treesplit {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point a, Point b) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Euclidean distance from p to the closed segment [a,b].
double point_segment_distance(Point p, Point a, Point b);

/// Distance from p to an open or closed polyline (closed: last point joins the first).
double point_polyline_distance(Point p, std::span<const Point> chain, bool closed);

/// Even-odd point-in-polygon test. Points within `tol` of the boundary count as inside.
bool point_in_polygon(Point p, std::span<const Point> polygon, double tol = 1e-12);

/// d(p, polygon region): 0 inside or on the boundary, distance to the boundary otherwise.
double point_polygon_distance(Point p, std::span<const Point> polygon);

double signed_area(std::span<const Point> polygon);

/// Hausdorff distance between two finite point sets. Throws on empty input.
double hausdorff_distance(std::span<const Point> a, std::span<const Point> b);

/// Hausdorff distance between a finite point set and a closed polygon boundary,
/// exact in both directions: point-to-boundary by segment projection, and
/// boundary-to-point by following the changes of nearest point along each edge.
double hausdorff_distance_to_boundary(std::span<const Point> a, std::span<const Point> polygon);

/// Hausdorff distance between two closed polygon boundaries, evaluated on both
/// boundaries densified to spacing at most `step` (error at most step/2).
double boundary_hausdorff(std::span<const Point> a, std::span<const Point> b, double step);

/// Points along a closed polygon boundary with spacing at most `step`, vertices included.
std::vector<Point> densify_closed(std::span<const Point> polygon, double step);

}  // namespace treesplit
