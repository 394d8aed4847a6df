#pragma once

#include <span>
#include <utility>
#include <vector>

#include "treesplit/geometry.hpp"
#include "treesplit/graph.hpp"

namespace treesplit {

/// A dart is an oriented edge: 2e runs u->v, 2e+1 runs v->u.
using Dart = std::int32_t;

inline constexpr EdgeId dart_edge(Dart d) { return d >> 1; }
inline constexpr Dart reverse_dart(Dart d) { return d ^ 1; }

/// A connected plane multigraph: a Multigraph plus vertex coordinates and a
/// rotation system (per vertex, outgoing darts in counter-clockwise order).
/// Faces are traced from the rotation system so that each face lies to the
/// left of its boundary darts. Immutable after construction.
class PlanarEmbedding {
 public:
  PlanarEmbedding() = default;

  /// Throws std::invalid_argument when the rotation system is malformed or,
  /// for a connected graph, violates Euler's formula.
  PlanarEmbedding(Multigraph graph, std::vector<Point> coords, std::vector<std::vector<Dart>> rotation,
                  int outer_face = -1);

  /// Derives the rotation system by sorting darts by angle. The outer face is
  /// the face with the smallest signed area.
  static PlanarEmbedding from_coordinates(Multigraph graph, std::vector<Point> coords);

  const Multigraph& graph() const { return graph_; }
  int num_vertices() const { return graph_.num_vertices(); }
  int num_edges() const { return graph_.num_edges(); }
  int num_faces() const { return static_cast<int>(face_offsets_.size()) - 1; }
  int outer_face() const { return outer_face_; }

  const std::vector<Point>& coords() const { return coords_; }
  const Point& point(VertexId v) const { return coords_[static_cast<std::size_t>(v)]; }

  VertexId tail(Dart d) const;
  VertexId head(Dart d) const { return tail(reverse_dart(d)); }

  /// Boundary darts of face f in traversal order.
  std::span<const Dart> face(int f) const {
    const auto b = face_offsets_[static_cast<std::size_t>(f)];
    const auto e = face_offsets_[static_cast<std::size_t>(f) + 1];
    return {face_darts_.data() + b, e - b};
  }
  int left_face(Dart d) const { return dart_face_[static_cast<std::size_t>(d)]; }
  /// Faces on the two sides of edge e: (left of u->v, left of v->u).
  std::pair<int, int> edge_faces(EdgeId e) const { return {left_face(2 * e), left_face(2 * e + 1)}; }

  const std::vector<Dart>& rotation(VertexId v) const { return rotation_[static_cast<std::size_t>(v)]; }

  /// Mean of the boundary vertex coordinates of face f.
  Point face_centroid(int f) const;
  double face_signed_area(int f) const;
  std::vector<Point> face_polygon(int f) const;

 private:
  void trace_faces();

  Multigraph graph_;
  std::vector<Point> coords_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<int> rotation_pos_;  // per dart: index in its tail's rotation
  std::vector<int> dart_face_;
  std::vector<std::size_t> face_offsets_{0};
  std::vector<Dart> face_darts_;
  int outer_face_ = -1;
};

/// Index arithmetic for build_grid: vertex (col,row) has id row*m + col and sits
/// at coordinates (col,row). Horizontal edges come first, then vertical ones.
struct GridIndex {
  int m = 0;  // columns (horizontal extent)
  int n = 0;  // rows (vertical extent)

  int num_vertices() const { return m * n; }
  int num_edges() const { return m * (n - 1) + n * (m - 1); }
  VertexId vertex(int col, int row) const { return row * m + col; }
  int col(VertexId v) const { return v % m; }
  int row(VertexId v) const { return v / m; }
  /// Edge (col,row)-(col+1,row).
  EdgeId horizontal_edge(int col, int row) const { return row * (m - 1) + col; }
  /// Edge (col,row)-(col,row+1).
  EdgeId vertical_edge(int col, int row) const { return n * (m - 1) + row * m + col; }
  bool is_vertical(EdgeId e) const { return e >= n * (m - 1); }
};

/// The m x n grid graph (m columns, n rows) with unit spacing.
PlanarEmbedding build_grid(int m, int n);

/// Planar dual. Dual edge i corresponds to primal edge i, so the edge
/// bijection is the identity on ids. Dual vertex positions are face centroids;
/// the root (outer face) has no meaningful position.
struct DualGraph {
  Multigraph graph;
  std::vector<VertexId> face_vertex;  // primal face -> dual vertex
  std::vector<int> vertex_face;       // dual vertex -> primal face (root: outer face)
  std::vector<Point> positions;
  VertexId root = kNoVertex;
  std::vector<int> wired_faces;  // primal faces identified into the root
  int primal_vertices = 0;
};

/// Throws DualityError if g is disconnected or some edge has the same face on
/// both sides. With wire_boundary the root is flagged as a wired boundary
/// (the outer face, plus any extra faces listed in extra_wired).
DualGraph compute_dual(const PlanarEmbedding& g, bool wire_boundary = false, std::span<const int> extra_wired = {});

}  // namespace treesplit
