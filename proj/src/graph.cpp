#include "treesplit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace treesplit {

namespace {

// Iterative union-find; only used for component labelling.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

std::vector<int> labels_from_sets(DisjointSets& sets, int n, int* count) {
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<int> root_label(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    const int r = sets.find(v);
    if (root_label[r] < 0) root_label[r] = next++;
    label[v] = root_label[r];
  }
  if (count != nullptr) *count = next;
  return label;
}

}  // namespace

Multigraph::Multigraph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
  std::vector<std::size_t> deg(static_cast<std::size_t>(num_vertices) + 1, 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= num_vertices || e.v >= num_vertices) {
      throw std::invalid_argument("edge " + std::to_string(i) + " has an endpoint out of range");
    }
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(static_cast<std::size_t>(num_vertices) + 1, 0);
  for (int v = 0; v < num_vertices; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  incidences_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    const auto id = static_cast<EdgeId>(i);
    incidences_[fill[e.u]++] = {e.v, id};
    incidences_[fill[e.v]++] = {e.u, id};
  }
}

std::vector<int> Multigraph::component_labels(int* count) const {
  DisjointSets sets(num_vertices_);
  for (const auto& e : edges_) sets.unite(e.u, e.v);
  return labels_from_sets(sets, num_vertices_, count);
}

bool Multigraph::is_connected() const {
  int count = 0;
  component_labels(&count);
  return count <= 1;
}

std::vector<int> component_labels(const Multigraph& g, std::span<const EdgeId> edges, int* count) {
  DisjointSets sets(g.num_vertices());
  for (const EdgeId e : edges) sets.unite(g.edge(e).u, g.edge(e).v);
  return labels_from_sets(sets, g.num_vertices(), count);
}

}  // namespace treesplit
