#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <vector>

#include "treesplit/graph.hpp"
#include "treesplit/planar.hpp"
#include "treesplit/rng.hpp"
#include "treesplit/spanning_tree.hpp"

namespace treesplit {

inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000'000ULL;

/// A loop erased at a revisit: `raw_index` is the position in the raw
/// sequence of the revisit, `length` the number of vertices removed.
struct ErasedLoop {
  std::size_t raw_index = 0;
  std::size_t length = 0;
};

struct WalkTrace {
  std::vector<VertexId> raw;  // raw vertex sequence, start first
  std::vector<VertexId> path;  // loop-erased simple path, start first
  std::vector<EdgeId> path_edges;  // edges along `path`
  std::vector<ErasedLoop> erased;
  std::uint64_t step_count = 0;
};

/// One line of the optional walk trace.
struct WalkRecord {
  int phase = -1;  // -1 outside a phased plan
  VertexId start = kNoVertex;
  VertexId end = kNoVertex;
  std::uint64_t raw_len = 0;
  std::uint64_t erased_len = 0;  // edges in the loop-erased path (0 for plain walks)
};

using WalkObserver = std::function<void(const WalkRecord&)>;

/// Writes {"phase","start","end","raw_len","erased_len"} as one JSON line.
void write_walk_record(std::ostream& out, const WalkRecord& r);

/// Loop-erased random walk from `start` until the first vertex of `absorb`.
/// Neighbors are chosen uniformly over incident edges (multiplicity counts).
/// Throws BudgetExceeded after `budget` steps.
WalkTrace loop_erased_walk(const Multigraph& g, VertexId start, std::span<const VertexId> absorb, RngStream& rng,
                           std::uint64_t budget = kDefaultStepBudget);

/// Erases loops from a raw vertex sequence in chronological order.
std::vector<VertexId> erase_loops(std::span<const VertexId> raw);

struct WilsonStats {
  std::uint64_t steps = 0;  // random-neighbor draws
  std::uint64_t walks = 0;
};

struct WilsonOptions {
  std::span<const VertexId> starts;  // tried first, in order; then ascending vertex id
  std::uint64_t step_budget = kDefaultStepBudget;
  const WalkObserver* observer = nullptr;
};

/// Wilson's algorithm. Returns, per vertex, the edge towards the root
/// (kNoEdge at the root). Does not check connectivity.
std::vector<EdgeId> wilson_parent_edges(const Multigraph& g, VertexId root, RngStream& rng, WilsonStats* stats = nullptr,
                                        const WilsonOptions& options = {});

/// Uniform spanning tree by Wilson's algorithm. Throws std::invalid_argument
/// on a disconnected graph.
SpanningTree wilson(const Multigraph& g, VertexId root, std::span<const VertexId> starts, RngStream& rng,
                    WilsonStats* stats = nullptr);

/// Samples uniform spanning trees of a planar graph by running Wilson on the
/// dual rooted at the outer face and mapping back through the duality
/// bijection. Holds the dual so repeated sampling does not rebuild it.
class DualTreeSampler {
 public:
  explicit DualTreeSampler(const PlanarEmbedding& g);
  DualTreeSampler(const PlanarEmbedding& g, DualGraph dual);

  const PlanarEmbedding& primal() const { return *primal_; }
  const DualGraph& dual() const { return dual_; }

  /// Dual parent edges (see wilson_parent_edges); cheapest form of a sample.
  std::vector<EdgeId> sample_dual_parents(RngStream& rng, WilsonStats* stats = nullptr,
                                          const WilsonOptions& options = {}) const;
  SpanningTree sample(RngStream& rng, WilsonStats* stats = nullptr, const WilsonOptions& options = {}) const;
  /// Primal tree from dual parent edges.
  SpanningTree to_primal(const std::vector<EdgeId>& dual_parents) const;

 private:
  const PlanarEmbedding* primal_;
  DualGraph dual_;
};

/// Convenience form: builds the dual, samples once.
SpanningTree wilson_on_dual(const PlanarEmbedding& g, std::span<const VertexId> dual_starts, RngStream& rng,
                            WilsonStats* stats = nullptr);

}  // namespace treesplit
