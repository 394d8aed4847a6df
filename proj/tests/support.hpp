#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "treesplit/graph.hpp"
#include "treesplit/spanning_tree.hpp"

namespace testing_support {

using namespace treesplit;

inline Multigraph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Multigraph(n, edges);
}

inline Multigraph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Multigraph(n, edges);
}

inline Multigraph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Multigraph(leaves + 1, edges);
}

inline Multigraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Multigraph(n, edges);
}

/// Uniform labelled tree on n >= 2 vertices from a random Pruefer sequence.
inline Multigraph random_tree(int n, std::mt19937_64& gen) {
  if (n == 1) return Multigraph(1, {});
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (auto& c : code) c = pick(gen);
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (const int c : code) ++degree[c];
  std::vector<Edge> edges;
  for (const int c : code) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({leaf, c});
    --degree[leaf];
    --degree[c];
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) rest.push_back(v);
  }
  edges.push_back({rest[0], rest[1]});
  std::shuffle(edges.begin(), edges.end(), gen);
  return Multigraph(n, edges);
}

inline SpanningTree whole_tree(const Multigraph& t, VertexId root = 0) {
  std::vector<EdgeId> all(static_cast<std::size_t>(t.num_edges()));
  for (EdgeId e = 0; e < t.num_edges(); ++e) all[e] = e;
  return SpanningTree(t, all, root);
}

/// Sorted component sizes of the spanning subgraph (all vertices, edges minus cut).
inline std::vector<int> sizes_without(const Multigraph& g, const std::vector<EdgeId>& cut) {
  std::vector<EdgeId> keep;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (std::find(cut.begin(), cut.end(), e) == cut.end()) keep.push_back(e);
  }
  int count = 0;
  const auto label = component_labels(g, keep, &count);
  std::vector<int> sizes(static_cast<std::size_t>(count), 0);
  for (const int l : label) ++sizes[l];
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Calls f(subset) for every r-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(int n, int r, F&& f) {
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[i] = i;
  if (r > n) return;
  for (;;) {
    f(idx);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Index of each edge set in a list, for histogramming samples.
inline std::map<std::vector<EdgeId>, int> index_of(const std::vector<std::vector<EdgeId>>& sets) {
  std::map<std::vector<EdgeId>, int> out;
  for (std::size_t i = 0; i < sets.size(); ++i) out[sets[i]] = static_cast<int>(i);
  return out;
}

}  // namespace testing_support
