#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "treesplit/graph.hpp"
#include "treesplit/planar.hpp"

namespace treesplit {

using BigInt = boost::multiprecision::cpp_int;

/// A spanning tree of a host graph, stored as its sorted edge ids together
/// with a parent structure rooted at `root()`. Construction validates that the
/// edges form a spanning tree.
class SpanningTree {
 public:
  SpanningTree() = default;
  /// Throws NotATreeError unless `edges` is acyclic, connected and spanning.
  SpanningTree(const Multigraph& host, std::vector<EdgeId> edges, VertexId root = 0);
  /// Builds from a parent-edge array (kNoEdge at the root) without re-sorting checks.
  static SpanningTree from_parent_edges(const Multigraph& host, std::vector<EdgeId> parent_edge, VertexId root);

  int num_vertices() const { return static_cast<int>(parent_edge_.size()); }
  const std::vector<EdgeId>& edges() const { return edges_; }
  VertexId root() const { return root_; }
  EdgeId parent_edge(VertexId v) const { return parent_edge_[static_cast<std::size_t>(v)]; }
  VertexId parent(VertexId v) const { return parent_[static_cast<std::size_t>(v)]; }
  /// Vertices in BFS order from the root (parents precede children).
  const std::vector<VertexId>& order() const { return order_; }
  bool contains(EdgeId e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

  friend bool operator==(const SpanningTree& a, const SpanningTree& b) { return a.edges_ == b.edges_; }

 private:
  void build(const Multigraph& host);

  std::vector<EdgeId> edges_;
  std::vector<EdgeId> parent_edge_;
  std::vector<VertexId> parent_;
  std::vector<VertexId> order_;
  VertexId root_ = 0;
};

/// T* = complement of T's edges under the (identity) edge bijection.
SpanningTree dual_tree(const PlanarEmbedding& g, const DualGraph& dual, const SpanningTree& t);
/// Inverse of dual_tree.
SpanningTree primal_tree(const PlanarEmbedding& g, const DualGraph& dual, const SpanningTree& t_star);

/// Number of spanning trees by the Matrix-Tree theorem, evaluated with
/// fraction-free (Bareiss) elimination in exact integers. Loops are ignored,
/// a single vertex has exactly one spanning tree, disconnected graphs have none.
BigInt count_spanning_trees(const Multigraph& g);

inline constexpr int kEnumerationEdgeCap = 25;

/// All spanning trees by exhaustive search (edge-id sets, sorted, in
/// lexicographic order). Throws std::invalid_argument when |E| > 25.
std::vector<std::vector<EdgeId>> enumerate_spanning_trees(const Multigraph& g);

/// All spanning forests with exactly k components, same conventions.
std::vector<std::vector<EdgeId>> enumerate_k_forests(const Multigraph& g, int k);

}  // namespace treesplit
