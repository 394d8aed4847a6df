#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "treesplit/geometry.hpp"

namespace treesplit {

/// A polyline between two drawing vertices; points include both endpoints.
struct DrawingCurve {
  std::vector<Point> points;
  int from = -1;
  int to = -1;
};

/// A curve traversed forwards (dir = +1) or backwards (dir = -1).
struct FaceSide {
  int curve = -1;
  int dir = 1;

  friend bool operator==(const FaceSide&, const FaceSide&) = default;
};

/// A drawing D of a plane graph: vertices, polyline curves between them, and
/// the k inner faces as closed chains of curves. The outer face is implicit:
/// its boundary is made of the curves used by exactly one inner face.
class PlaneDrawing {
 public:
  PlaneDrawing() = default;
  /// Validates: curve endpoints sit on their vertices, every face chain closes,
  /// curves only meet at shared endpoints, each curve borders one or two faces
  /// and the single-use curves form one closed loop. Throws std::invalid_argument.
  PlaneDrawing(std::vector<Point> vertices, std::vector<DrawingCurve> curves, std::vector<std::vector<FaceSide>> faces);

  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<DrawingCurve>& curves() const { return curves_; }
  const std::vector<std::vector<FaceSide>>& faces() const { return faces_; }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  /// Face i as a polygon (closing point not repeated).
  const std::vector<Point>& face_polygon(int i) const { return polygons_[static_cast<std::size_t>(i)]; }
  const std::vector<Point>& outer_boundary() const { return outer_; }

  /// Largest distance between two points of the drawing.
  double diameter() const;
  /// d(p, face i): 0 inside the face, distance to its boundary otherwise.
  double distance_to_face(Point p, int i) const;

 private:
  std::vector<Point> vertices_;
  std::vector<DrawingCurve> curves_;
  std::vector<std::vector<FaceSide>> faces_;
  std::vector<std::vector<Point>> polygons_;
  std::vector<Point> outer_;
};

/// The axis-parallel box [lo,hi] cut into k vertical strips of equal width.
PlaneDrawing vertical_strips(int k, Point lo = {0.0, 0.0}, Point hi = {1.0, 1.0});

// JSON form: {"vertices":[[x,y],...], "curves":[{"points":[[x,y],...],"from":v,"to":v}],
// "faces":[[side,...],...]} where a side is [curve, +1|-1] or a bare curve id
// (its direction is then inferred from the neighbouring sides).
nlohmann::json to_json(const PlaneDrawing& d);
PlaneDrawing drawing_from_json(const nlohmann::json& j);
PlaneDrawing load_drawing(const std::filesystem::path& path);
void save_drawing(const PlaneDrawing& d, const std::filesystem::path& path);

}  // namespace treesplit
