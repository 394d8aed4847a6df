#include "treesplit/walks.hpp"

#include <stdexcept>
#include <string>

#include "json.hpp"

namespace treesplit {

void write_walk_record(std::ostream& out, const WalkRecord& r) {
  const nlohmann::json j = {
      {"phase", r.phase}, {"start", r.start}, {"end", r.end}, {"raw_len", r.raw_len}, {"erased_len", r.erased_len}};
  out << j.dump() << '\n';
}

WalkTrace loop_erased_walk(const Multigraph& g, VertexId start, std::span<const VertexId> absorb, RngStream& rng,
                           std::uint64_t budget) {
  if (absorb.empty()) throw std::invalid_argument("loop_erased_walk: absorbing set is empty");
  const auto n = static_cast<std::size_t>(g.num_vertices());
  if (start < 0 || static_cast<std::size_t>(start) >= n) throw std::invalid_argument("start vertex out of range");
  std::vector<char> absorbing(n, 0);
  for (const VertexId v : absorb) absorbing.at(static_cast<std::size_t>(v)) = 1;

  WalkTrace trace;
  trace.raw.push_back(start);
  trace.path.push_back(start);
  std::vector<std::int64_t> position(n, -1);  // index of v in path, or -1
  position[start] = 0;
  VertexId v = start;
  while (!absorbing[v]) {
    if (trace.step_count >= budget) {
      throw BudgetExceeded("loop_erased_walk: no absorbing vertex reached from " + std::to_string(start) + " within " +
                           std::to_string(budget) + " steps (unreachable absorbing set?)");
    }
    const auto inc = g.incident(v);
    if (inc.empty()) throw BudgetExceeded("loop_erased_walk: stuck at isolated vertex " + std::to_string(v));
    const Incidence& pick = inc[rng.uniform_below(inc.size())];
    ++trace.step_count;
    v = pick.neighbor;
    trace.raw.push_back(v);
    if (position[v] >= 0) {
      const auto keep = static_cast<std::size_t>(position[v]) + 1;
      for (std::size_t i = keep; i < trace.path.size(); ++i) position[trace.path[i]] = -1;
      trace.erased.push_back({trace.raw.size() - 1, trace.path.size() - keep});
      trace.path.resize(keep);
      trace.path_edges.resize(keep - 1);
    } else {
      position[v] = static_cast<std::int64_t>(trace.path.size());
      trace.path.push_back(v);
      trace.path_edges.push_back(pick.edge);
    }
  }
  return trace;
}

std::vector<VertexId> erase_loops(std::span<const VertexId> raw) {
  std::vector<VertexId> path;
  for (const VertexId v : raw) {
    std::size_t i = 0;
    while (i < path.size() && path[i] != v) ++i;
    if (i < path.size()) {
      path.resize(i + 1);
    } else {
      path.push_back(v);
    }
  }
  return path;
}

std::vector<EdgeId> wilson_parent_edges(const Multigraph& g, VertexId root, RngStream& rng, WilsonStats* stats,
                                        const WilsonOptions& options) {
  const int n = g.num_vertices();
  if (root < 0 || root >= n) throw std::invalid_argument("wilson: root out of range");
  std::vector<char> in_tree(static_cast<std::size_t>(n), 0);
  std::vector<EdgeId> next_edge(static_cast<std::size_t>(n), kNoEdge);
  std::vector<VertexId> next_vertex(static_cast<std::size_t>(n), kNoVertex);
  std::vector<EdgeId> parent(static_cast<std::size_t>(n), kNoEdge);
  in_tree[root] = 1;
  std::uint64_t total_steps = 0;
  std::uint64_t walks = 0;

  auto grow_from = [&](VertexId start) {
    if (in_tree[start]) return;
    std::uint64_t steps = 0;
    VertexId v = start;
    while (!in_tree[v]) {
      const auto inc = g.incident(v);
      const Incidence& pick = inc[rng.uniform_below(inc.size())];
      next_edge[v] = pick.edge;
      next_vertex[v] = pick.neighbor;
      v = pick.neighbor;
      if (++steps > options.step_budget) {
        throw BudgetExceeded("wilson: walk from " + std::to_string(start) + " exceeded the step budget");
      }
    }
    const VertexId end = v;
    std::uint64_t len = 0;
    for (v = start; !in_tree[v]; v = next_vertex[v]) {
      in_tree[v] = 1;
      parent[v] = next_edge[v];
      ++len;
    }
    total_steps += steps;
    ++walks;
    if (options.observer != nullptr) (*options.observer)({-1, start, end, steps, len});
  };

  for (const VertexId s : options.starts) {
    if (s < 0 || s >= n) throw std::invalid_argument("wilson: start vertex out of range");
    grow_from(s);
  }
  for (VertexId s = 0; s < n; ++s) grow_from(s);
  if (stats != nullptr) {
    stats->steps += total_steps;
    stats->walks += walks;
  }
  return parent;
}

SpanningTree wilson(const Multigraph& g, VertexId root, std::span<const VertexId> starts, RngStream& rng,
                    WilsonStats* stats) {
  if (g.num_vertices() == 0 || !g.is_connected()) throw std::invalid_argument("wilson: graph must be connected");
  WilsonOptions options;
  options.starts = starts;
  return SpanningTree::from_parent_edges(g, wilson_parent_edges(g, root, rng, stats, options), root);
}

DualTreeSampler::DualTreeSampler(const PlanarEmbedding& g) : DualTreeSampler(g, compute_dual(g)) {}

DualTreeSampler::DualTreeSampler(const PlanarEmbedding& g, DualGraph dual) : primal_(&g), dual_(std::move(dual)) {
  if (!dual_.graph.is_connected()) throw DualityError("dual graph is disconnected");
}

std::vector<EdgeId> DualTreeSampler::sample_dual_parents(RngStream& rng, WilsonStats* stats,
                                                         const WilsonOptions& options) const {
  return wilson_parent_edges(dual_.graph, dual_.root, rng, stats, options);
}

SpanningTree DualTreeSampler::to_primal(const std::vector<EdgeId>& dual_parents) const {
  std::vector<char> in_dual(static_cast<std::size_t>(dual_.graph.num_edges()), 0);
  for (const EdgeId e : dual_parents) {
    if (e != kNoEdge) in_dual[e] = 1;
  }
  std::vector<EdgeId> edges;
  edges.reserve(static_cast<std::size_t>(primal_->num_vertices()));
  for (EdgeId e = 0; e < dual_.graph.num_edges(); ++e) {
    if (!in_dual[e]) edges.push_back(e);
  }
  return SpanningTree(primal_->graph(), std::move(edges), 0);
}

SpanningTree DualTreeSampler::sample(RngStream& rng, WilsonStats* stats, const WilsonOptions& options) const {
  return to_primal(sample_dual_parents(rng, stats, options));
}

SpanningTree wilson_on_dual(const PlanarEmbedding& g, std::span<const VertexId> dual_starts, RngStream& rng,
                            WilsonStats* stats) {
  const DualTreeSampler sampler(g);
  WilsonOptions options;
  options.starts = dual_starts;
  return sampler.sample(rng, stats, options);
}

}  // namespace treesplit
