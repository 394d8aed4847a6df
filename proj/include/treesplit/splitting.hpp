#pragma once

#include <optional>
#include <utility>
#include <span>
#include <vector>

#include "treesplit/graph.hpp"
#include "treesplit/spanning_tree.hpp"

namespace treesplit {

struct SplitResult {
  std::vector<EdgeId> cut_edges;     // sorted, k-1 edges
  std::vector<int> component_sizes;  // sorted ascending, k entries
  int imbalance = 0;                 // max size - min size
};

/// Orders of the components of T minus `cut`, sorted ascending. Throws
/// std::invalid_argument if an edge of `cut` is not in the tree.
std::vector<int> component_sizes(const Multigraph& g, const SpanningTree& t, std::span<const EdgeId> cut);

/// Size of the subtree hanging below each vertex in t's rooted order.
std::vector<int> subtree_sizes(const SpanningTree& t);

/// The unique set of k-1 edges splitting t into k equal components, found by
/// one bottom-up pass that cuts every residual subtree of size |V|/k.
/// Throws std::invalid_argument if k does not divide |V|.
std::optional<SplitResult> find_balanced_split(const SpanningTree& t, int k);

/// Some k-1 edges leaving every component within (1 +- epsilon) |V|/k, if any.
std::optional<SplitResult> find_approx_split(const SpanningTree& t, int k, double epsilon);

/// A (k-1)-edge cut minimising max - min component size; ties broken by the
/// lexicographically smallest sorted edge-id set.
SplitResult find_min_imbalance_split(const SpanningTree& t, int k);

/// Inclusive integer bounds [lo, hi] of sizes s with (1-eps)N/k <= s <= (1+eps)N/k.
std::pair<int, int> approx_size_window(int n, int k, double epsilon);

}  // namespace treesplit
