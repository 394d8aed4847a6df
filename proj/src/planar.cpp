#include "treesplit/planar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace treesplit {

PlanarEmbedding::PlanarEmbedding(Multigraph graph, std::vector<Point> coords, std::vector<std::vector<Dart>> rotation,
                                 int outer_face)
    : graph_(std::move(graph)), coords_(std::move(coords)), rotation_(std::move(rotation)) {
  const auto nv = static_cast<std::size_t>(graph_.num_vertices());
  if (coords_.size() != nv || rotation_.size() != nv) {
    throw std::invalid_argument("coordinate/rotation count does not match vertex count");
  }
  const auto nd = static_cast<std::size_t>(2 * graph_.num_edges());
  rotation_pos_.assign(nd, -1);
  for (std::size_t v = 0; v < nv; ++v) {
    const auto& rot = rotation_[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const Dart d = rot[i];
      if (d < 0 || static_cast<std::size_t>(d) >= nd || tail(d) != static_cast<VertexId>(v) ||
          rotation_pos_[d] != -1) {
        throw std::invalid_argument("malformed rotation at vertex " + std::to_string(v));
      }
      rotation_pos_[d] = static_cast<int>(i);
    }
  }
  if (std::find(rotation_pos_.begin(), rotation_pos_.end(), -1) != rotation_pos_.end()) {
    throw std::invalid_argument("rotation system misses a dart");
  }
  trace_faces();
  if (graph_.num_vertices() > 0 && graph_.is_connected() &&
      graph_.num_vertices() - graph_.num_edges() + num_faces() != 2) {
    throw std::invalid_argument("rotation system violates Euler's formula (not a planar embedding)");
  }
  if (outer_face >= 0) {
    if (outer_face >= num_faces()) throw std::invalid_argument("outer face out of range");
    outer_face_ = outer_face;
  } else if (num_faces() > 0) {
    double smallest = std::numeric_limits<double>::infinity();
    for (int f = 0; f < num_faces(); ++f) {
      const double a = face_signed_area(f);
      if (a < smallest - 1e-12) {
        smallest = a;
        outer_face_ = f;
      }
    }
  }
}

PlanarEmbedding PlanarEmbedding::from_coordinates(Multigraph graph, std::vector<Point> coords) {
  const int nv = graph.num_vertices();
  if (static_cast<int>(coords.size()) != nv) throw std::invalid_argument("coordinate count mismatch");
  std::vector<std::vector<Dart>> rotation(static_cast<std::size_t>(nv));
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    rotation[graph.edge(e).u].push_back(2 * e);
    rotation[graph.edge(e).v].push_back(2 * e + 1);
  }
  for (VertexId v = 0; v < nv; ++v) {
    const Point o = coords[v];
    auto angle = [&](Dart d) {
      const Edge& ed = graph.edge(dart_edge(d));
      const VertexId h = (d & 1) ? ed.u : ed.v;
      const Point p = coords[h] - o;
      return std::atan2(p.y, p.x);
    };
    std::stable_sort(rotation[v].begin(), rotation[v].end(), [&](Dart a, Dart b) { return angle(a) < angle(b); });
  }
  return PlanarEmbedding(std::move(graph), std::move(coords), std::move(rotation));
}

VertexId PlanarEmbedding::tail(Dart d) const {
  const Edge& e = graph_.edge(dart_edge(d));
  return (d & 1) ? e.v : e.u;
}

void PlanarEmbedding::trace_faces() {
  const auto nd = rotation_pos_.size();
  dart_face_.assign(nd, -1);
  face_offsets_.assign(1, 0);
  face_darts_.clear();
  face_darts_.reserve(nd);
  int f = 0;
  for (std::size_t start = 0; start < nd; ++start) {
    if (dart_face_[start] != -1) continue;
    Dart d = static_cast<Dart>(start);
    while (dart_face_[d] == -1) {
      dart_face_[d] = f;
      face_darts_.push_back(d);
      // Arriving at head(d), keep the face on the left: the next dart is the
      // one clockwise from the reversed dart.
      const Dart back = reverse_dart(d);
      const auto& rot = rotation_[tail(back)];
      const int pos = rotation_pos_[back];
      d = rot[(pos + static_cast<int>(rot.size()) - 1) % static_cast<int>(rot.size())];
    }
    face_offsets_.push_back(face_darts_.size());
    ++f;
  }
  // An isolated single vertex still has one (outer) face.
  if (f == 0 && graph_.num_vertices() > 0) face_offsets_.push_back(0);
}

std::vector<Point> PlanarEmbedding::face_polygon(int f) const {
  std::vector<Point> poly;
  for (const Dart d : face(f)) poly.push_back(point(tail(d)));
  return poly;
}

Point PlanarEmbedding::face_centroid(int f) const {
  const auto darts = face(f);
  if (darts.empty()) return {std::nan(""), std::nan("")};
  Point sum;
  for (const Dart d : darts) sum = sum + point(tail(d));
  return (1.0 / static_cast<double>(darts.size())) * sum;
}

double PlanarEmbedding::face_signed_area(int f) const {
  const auto poly = face_polygon(f);
  return poly.empty() ? 0.0 : signed_area(poly);
}

PlanarEmbedding build_grid(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("build_grid: dimensions must be positive");
  const GridIndex idx{m, n};
  std::vector<Edge> edges(static_cast<std::size_t>(idx.num_edges()));
  std::vector<Point> coords(static_cast<std::size_t>(idx.num_vertices()));
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < m; ++col) {
      coords[idx.vertex(col, row)] = {static_cast<double>(col), static_cast<double>(row)};
      if (col + 1 < m) edges[idx.horizontal_edge(col, row)] = {idx.vertex(col, row), idx.vertex(col + 1, row)};
      if (row + 1 < n) edges[idx.vertical_edge(col, row)] = {idx.vertex(col, row), idx.vertex(col, row + 1)};
    }
  }
  return PlanarEmbedding::from_coordinates(Multigraph(idx.num_vertices(), std::move(edges)), std::move(coords));
}

DualGraph compute_dual(const PlanarEmbedding& g, bool wire_boundary, std::span<const int> extra_wired) {
  if (g.num_vertices() == 0 || !g.graph().is_connected()) {
    throw DualityError("compute_dual: primal graph must be connected and nonempty");
  }
  const int nf = g.num_faces();
  std::vector<bool> wired(static_cast<std::size_t>(nf), false);
  wired[g.outer_face()] = true;
  for (const int f : extra_wired) {
    if (f < 0 || f >= nf) throw std::invalid_argument("compute_dual: wired face out of range");
    wired[f] = true;
  }

  DualGraph dual;
  dual.primal_vertices = g.num_vertices();
  dual.face_vertex.assign(static_cast<std::size_t>(nf), kNoVertex);
  dual.root = 0;
  dual.vertex_face.push_back(g.outer_face());
  dual.positions.push_back({std::nan(""), std::nan("")});
  for (int f = 0; f < nf; ++f) {
    if (wired[f]) {
      dual.face_vertex[f] = dual.root;
      if (wire_boundary) dual.wired_faces.push_back(f);
      continue;
    }
    dual.face_vertex[f] = static_cast<VertexId>(dual.vertex_face.size());
    dual.vertex_face.push_back(f);
    dual.positions.push_back(g.face_centroid(f));
  }

  std::vector<Edge> edges(static_cast<std::size_t>(g.num_edges()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [left, right] = g.edge_faces(e);
    const VertexId a = dual.face_vertex[left];
    const VertexId b = dual.face_vertex[right];
    if (a == b) {
      throw DualityError("compute_dual: edge " + std::to_string(e) +
                         " has the same face on both sides (duality hypothesis fails)");
    }
    edges[e] = {a, b};
  }
  dual.graph = Multigraph(static_cast<int>(dual.vertex_face.size()), std::move(edges));
  return dual;
}

}  // namespace treesplit
