#include "treesplit/spanning_tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace treesplit {

SpanningTree::SpanningTree(const Multigraph& host, std::vector<EdgeId> edges, VertexId root)
    : edges_(std::move(edges)), root_(root) {
  std::sort(edges_.begin(), edges_.end());
  if (host.num_vertices() == 0) throw NotATreeError("spanning tree of an empty graph");
  if (root < 0 || root >= host.num_vertices()) throw std::invalid_argument("tree root out of range");
  if (static_cast<int>(edges_.size()) != host.num_vertices() - 1) {
    throw NotATreeError("spanning tree needs |V|-1 = " + std::to_string(host.num_vertices() - 1) + " edges, got " +
                        std::to_string(edges_.size()));
  }
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw NotATreeError("duplicate edge in spanning tree");
  }
  for (const EdgeId e : edges_) {
    if (e < 0 || e >= host.num_edges()) throw NotATreeError("edge id out of range");
  }
  build(host);
}

SpanningTree SpanningTree::from_parent_edges(const Multigraph& host, std::vector<EdgeId> parent_edge, VertexId root) {
  std::vector<EdgeId> edges;
  edges.reserve(parent_edge.size());
  for (std::size_t v = 0; v < parent_edge.size(); ++v) {
    if (static_cast<VertexId>(v) != root) edges.push_back(parent_edge[v]);
  }
  return SpanningTree(host, std::move(edges), root);
}

void SpanningTree::build(const Multigraph& host) {
  const auto n = static_cast<std::size_t>(host.num_vertices());
  std::vector<char> in_tree(static_cast<std::size_t>(host.num_edges()), 0);
  for (const EdgeId e : edges_) in_tree[e] = 1;
  parent_edge_.assign(n, kNoEdge);
  parent_.assign(n, kNoVertex);
  order_.clear();
  order_.reserve(n);
  std::vector<char> seen(n, 0);
  seen[root_] = 1;
  order_.push_back(root_);
  for (std::size_t head = 0; head < order_.size(); ++head) {
    const VertexId v = order_[head];
    for (const auto& inc : host.incident(v)) {
      if (!in_tree[inc.edge] || inc.edge == parent_edge_[v]) continue;
      if (seen[inc.neighbor]) throw NotATreeError("edge set contains a cycle");
      seen[inc.neighbor] = 1;
      parent_edge_[inc.neighbor] = inc.edge;
      parent_[inc.neighbor] = v;
      order_.push_back(inc.neighbor);
    }
  }
  if (order_.size() != n) throw NotATreeError("edge set does not span the graph");
}

namespace {

std::vector<EdgeId> complement(int num_edges, const std::vector<EdgeId>& sorted) {
  std::vector<EdgeId> out;
  out.reserve(static_cast<std::size_t>(num_edges) - sorted.size());
  std::size_t i = 0;
  for (EdgeId e = 0; e < num_edges; ++e) {
    if (i < sorted.size() && sorted[i] == e) {
      ++i;
    } else {
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace

SpanningTree dual_tree(const PlanarEmbedding& g, const DualGraph& dual, const SpanningTree& t) {
  if (t.num_vertices() != g.num_vertices()) throw NotATreeError("tree does not belong to this primal graph");
  return SpanningTree(dual.graph, complement(g.num_edges(), t.edges()), dual.root);
}

SpanningTree primal_tree(const PlanarEmbedding& g, const DualGraph& dual, const SpanningTree& t_star) {
  if (t_star.num_vertices() != dual.graph.num_vertices()) throw NotATreeError("tree does not belong to this dual");
  return SpanningTree(g.graph(), complement(dual.graph.num_edges(), t_star.edges()), 0);
}

BigInt count_spanning_trees(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n <= 0) throw std::invalid_argument("count_spanning_trees: graph needs at least one vertex");
  if (n == 1) return 1;
  // Laplacian with the last row/column deleted.
  const int dim = n - 1;
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(dim), std::vector<BigInt>(static_cast<std::size_t>(dim)));
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    if (e.u < dim) a[e.u][e.u] += 1;
    if (e.v < dim) a[e.v][e.v] += 1;
    if (e.u < dim && e.v < dim) {
      a[e.u][e.v] -= 1;
      a[e.v][e.u] -= 1;
    }
  }
  // Bareiss: after step k, a[i][j] (i,j > k) holds a (k+1)x(k+1) minor, and
  // the division by the previous pivot is exact.
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < dim; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < dim; ++i) {
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < dim; ++i) {
      for (int j = k + 1; j < dim; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  BigInt det = a[dim - 1][dim - 1];
  if (sign < 0) det = -det;
  return det;
}

namespace {

// Union-find with rollback so the exhaustive search can undo unions.
class RollbackSets {
 public:
  explicit RollbackSets(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }
  void undo() {
    const int b = history_.back();
    history_.pop_back();
    const int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

void enumerate_acyclic(const Multigraph& g, int target, EdgeId next, std::vector<EdgeId>& chosen, RollbackSets& sets,
                       std::vector<std::vector<EdgeId>>& out) {
  if (static_cast<int>(chosen.size()) == target) {
    out.push_back(chosen);
    return;
  }
  const int remaining_needed = target - static_cast<int>(chosen.size());
  for (EdgeId e = next; e + remaining_needed <= g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (!sets.unite(ed.u, ed.v)) continue;
    chosen.push_back(e);
    enumerate_acyclic(g, target, e + 1, chosen, sets, out);
    chosen.pop_back();
    sets.undo();
  }
}

void check_cap(const Multigraph& g) {
  if (g.num_edges() > kEnumerationEdgeCap) {
    throw std::invalid_argument("enumeration oracle limited to " + std::to_string(kEnumerationEdgeCap) +
                                " edges, graph has " + std::to_string(g.num_edges()));
  }
}

}  // namespace

std::vector<std::vector<EdgeId>> enumerate_k_forests(const Multigraph& g, int k) {
  check_cap(g);
  if (k < 1 || k > g.num_vertices()) throw std::invalid_argument("enumerate_k_forests: need 1 <= k <= |V|");
  std::vector<std::vector<EdgeId>> out;
  std::vector<EdgeId> chosen;
  RollbackSets sets(g.num_vertices());
  enumerate_acyclic(g, g.num_vertices() - k, 0, chosen, sets, out);
  return out;
}

std::vector<std::vector<EdgeId>> enumerate_spanning_trees(const Multigraph& g) { return enumerate_k_forests(g, 1); }

}  // namespace treesplit
