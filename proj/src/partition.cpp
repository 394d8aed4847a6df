#include "treesplit/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace treesplit {

std::vector<int> Partition::class_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(classes.size());
  for (const auto& c : classes) sizes.push_back(static_cast<int>(c.size()));
  return sizes;
}

bool Partition::is_balanced() const {
  if (classes.empty()) return true;
  const auto s = classes.front().size();
  return std::all_of(classes.begin(), classes.end(), [s](const auto& c) { return c.size() == s; });
}

namespace {

Partition from_labels(std::vector<int> label, int count) {
  Partition p;
  p.classes.resize(static_cast<std::size_t>(count));
  for (std::size_t v = 0; v < label.size(); ++v) p.classes[label[v]].push_back(static_cast<VertexId>(v));
  p.label = std::move(label);
  return p;
}

}  // namespace

Partition partition_from_edges(const Multigraph& g, std::span<const EdgeId> edges) {
  int count = 0;
  auto label = component_labels(g, edges, &count);
  return from_labels(std::move(label), count);
}

Partition partition_from_cut(const Multigraph& g, const SpanningTree& t, std::span<const EdgeId> cut) {
  std::vector<EdgeId> kept;
  kept.reserve(t.edges().size());
  std::vector<EdgeId> sorted_cut(cut.begin(), cut.end());
  std::sort(sorted_cut.begin(), sorted_cut.end());
  for (const EdgeId e : sorted_cut) {
    if (!t.contains(e)) throw std::invalid_argument("cut edge " + std::to_string(e) + " is not in the tree");
  }
  std::set_difference(t.edges().begin(), t.edges().end(), sorted_cut.begin(), sorted_cut.end(),
                      std::back_inserter(kept));
  return partition_from_edges(g, kept);
}

void validate_partition(const Multigraph& g, const Partition& p) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  if (p.label.size() != n) throw std::invalid_argument("partition label size does not match graph");
  std::vector<int> seen(n, -1);
  for (std::size_t c = 0; c < p.classes.size(); ++c) {
    if (p.classes[c].empty()) throw std::invalid_argument("partition has an empty class");
    for (const VertexId v : p.classes[c]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v] != -1) {
        throw std::invalid_argument("partition classes overlap or are out of range");
      }
      if (p.label[v] != static_cast<int>(c)) throw std::invalid_argument("partition label disagrees with classes");
      seen[v] = static_cast<int>(c);
    }
  }
  if (std::find(seen.begin(), seen.end(), -1) != seen.end()) {
    throw std::invalid_argument("partition does not cover every vertex");
  }
  // Connectivity: count components of the graph restricted to intra-class edges.
  std::vector<EdgeId> inner;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (p.label[g.edge(e).u] == p.label[g.edge(e).v]) inner.push_back(e);
  }
  int count = 0;
  component_labels(g, inner, &count);
  if (count != p.k()) throw std::invalid_argument("partition has a disconnected class");
}

Multigraph contract_partition(const Multigraph& g, const Partition& p) {
  validate_partition(g, p);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = p.label[e.u];
    const int b = p.label[e.v];
    if (a != b) edges.push_back({a, b});
  }
  return Multigraph(p.k(), std::move(edges));
}

Multigraph induced_subgraph(const Multigraph& g, std::span<const VertexId> vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) edges.push_back({local[e.u], local[e.v]});
  }
  return Multigraph(static_cast<int>(vertices.size()), std::move(edges));
}

std::vector<BigInt> class_tree_counts(const Multigraph& g, const Partition& p) {
  std::vector<BigInt> counts;
  counts.reserve(p.classes.size());
  for (const auto& c : p.classes) counts.push_back(count_spanning_trees(induced_subgraph(g, c)));
  return counts;
}

}  // namespace treesplit
