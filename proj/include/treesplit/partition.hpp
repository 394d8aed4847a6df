#pragma once

#include <span>
#include <vector>

#include "treesplit/graph.hpp"
#include "treesplit/spanning_tree.hpp"

namespace treesplit {

/// k disjoint vertex classes covering the host graph. Classes are listed in
/// order of their smallest vertex and each class is sorted.
struct Partition {
  std::vector<std::vector<VertexId>> classes;
  std::vector<int> label;  // vertex -> class index

  int k() const { return static_cast<int>(classes.size()); }
  std::vector<int> class_sizes() const;
  bool is_balanced() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.classes == b.classes; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.classes < b.classes; }
};

/// Partition whose classes are the connected components of the spanning
/// subgraph (all vertices, `edges`).
Partition partition_from_edges(const Multigraph& g, std::span<const EdgeId> edges);

/// Components of T minus `cut`.
Partition partition_from_cut(const Multigraph& g, const SpanningTree& t, std::span<const EdgeId> cut);

/// Throws std::invalid_argument unless classes are disjoint, cover V and each
/// induces a connected subgraph.
void validate_partition(const Multigraph& g, const Partition& p);

/// G/P: one vertex per class, one edge per primal edge joining two different
/// classes (multiplicity kept, loops dropped). Validates p first.
Multigraph contract_partition(const Multigraph& g, const Partition& p);

/// The subgraph induced by one class, relabelled to 0..|class|-1.
Multigraph induced_subgraph(const Multigraph& g, std::span<const VertexId> vertices);

/// sp(P_i) for each class.
std::vector<BigInt> class_tree_counts(const Multigraph& g, const Partition& p);

}  // namespace treesplit
