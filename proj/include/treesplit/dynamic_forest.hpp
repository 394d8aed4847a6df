#pragma once

#include <vector>

#include "treesplit/types.hpp"

namespace treesplit {

// Both forests below share one interface: vertices 0..n-1, edges named by
// caller-chosen ids in 0..max_edges-1. link() requires the endpoints to be in
// different trees, cut() requires the edge to be present; violations throw
// std::invalid_argument. Paths are reported from u to v.

/// Link-cut trees (splay-based) over vertex nodes plus one node per edge, so
/// path queries can count and index edges. Amortized O(log n) per operation.
class LinkCutForest {
 public:
  LinkCutForest(int num_vertices, int max_edges);

  int num_vertices() const { return num_vertices_; }
  bool contains(EdgeId e) const;
  void link(VertexId u, VertexId v, EdgeId e);
  void cut(EdgeId e);
  bool connected(VertexId u, VertexId v);
  /// Number of edges on the u-v path; throws if u and v are disconnected.
  int path_length(VertexId u, VertexId v);
  /// The i-th edge (0-based, counted from u) on the u-v path.
  EdgeId path_edge_at(VertexId u, VertexId v, int i);
  std::vector<EdgeId> path_edges(VertexId u, VertexId v);

  /// Length of the u-v path, or -1 if disconnected. On success the path stays
  /// selected and path_edge(i) indexes it until the forest is next touched.
  int select_path(VertexId u, VertexId v);
  EdgeId path_edge(int i);

 private:
  struct Node {
    int ch[2] = {-1, -1};
    int parent = -1;
    int count = 0;  // edge nodes in this splay subtree
    bool flip = false;
    bool is_edge = false;
  };

  bool is_splay_root(int x) const;
  void push(int x);
  void pull(int x);
  void rotate(int x);
  void splay(int x);
  void access(int x);
  void make_root(int x);
  int find_root(int x);
  void expose_path(VertexId u, VertexId v);
  void check_vertex(VertexId v) const;
  void check_edge_id(EdgeId e) const;

  int num_vertices_;
  std::vector<Node> nodes_;
  std::vector<VertexId> edge_u_;
  std::vector<VertexId> edge_v_;
  std::vector<char> present_;
  std::vector<int> scratch_;
  int selected_ = -1;
};

/// Adjacency lists with BFS per query: O(n) per operation. Used as the
/// reference for LinkCutForest and as a drop-in fallback.
class NaiveForest {
 public:
  NaiveForest(int num_vertices, int max_edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  bool contains(EdgeId e) const;
  void link(VertexId u, VertexId v, EdgeId e);
  void cut(EdgeId e);
  bool connected(VertexId u, VertexId v) const;
  int path_length(VertexId u, VertexId v) const;
  EdgeId path_edge_at(VertexId u, VertexId v, int i) const;
  std::vector<EdgeId> path_edges(VertexId u, VertexId v) const;

  int select_path(VertexId u, VertexId v);
  EdgeId path_edge(int i) const;

 private:
  struct Arc {
    VertexId to;
    EdgeId edge;
  };
  void check_vertex(VertexId v) const;
  void check_edge_id(EdgeId e) const;
  // BFS from u; fills from_/via_ and returns whether v was reached.
  bool search(VertexId u, VertexId v) const;

  std::vector<std::vector<Arc>> adj_;
  std::vector<VertexId> edge_u_;
  std::vector<VertexId> edge_v_;
  std::vector<char> present_;
  mutable std::vector<VertexId> from_;
  mutable std::vector<EdgeId> via_;
  mutable std::vector<unsigned> seen_;
  mutable unsigned stamp_ = 0;
  mutable std::vector<VertexId> queue_;
  std::vector<EdgeId> selected_;
};

}  // namespace treesplit
