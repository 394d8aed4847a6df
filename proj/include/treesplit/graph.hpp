#pragma once

#include <span>
#include <vector>

#include "treesplit/types.hpp"

namespace treesplit {

struct Edge {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;

  VertexId other(VertexId x) const { return x == u ? v : u; }
};

/// One endpoint-side view of an edge: the neighbor reached and the edge used.
struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/// Immutable undirected multigraph. Parallel edges are distinct (each has its
/// own id); self-loops are allowed but listed once per endpoint side, so a
/// loop contributes two incidences to its vertex.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Incidence> incident(VertexId v) const {
    const auto b = offsets_[static_cast<std::size_t>(v)];
    const auto e = offsets_[static_cast<std::size_t>(v) + 1];
    return {incidences_.data() + b, e - b};
  }
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

  bool is_connected() const;
  /// Component label per vertex (labels are 0..count-1 in order of lowest vertex).
  std::vector<int> component_labels(int* count = nullptr) const;

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> incidences_;
};

/// Connected components of the spanning subgraph (all vertices, selected edges).
std::vector<int> component_labels(const Multigraph& g, std::span<const EdgeId> edges, int* count = nullptr);

}  // namespace treesplit
