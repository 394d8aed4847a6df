#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "treesplit/planar.hpp"
#include "treesplit/walks.hpp"

namespace treesplit {

/// How a phase picks the vertex its walk starts from.
struct PhaseSource {
  enum class Rule {
    kVertex,        // `vertex` itself
    kNearestPoint,  // non-root dual vertex whose position is nearest `point`
    kAdjacentToTree,  // a neighbor of tree vertex `vertex` outside the tree (nearest `point` if given)
  };
  Rule rule = Rule::kVertex;
  VertexId vertex = kNoVertex;
  std::optional<Point> point;
};

struct Phase {
  PhaseSource source;
  /// Target set; only vertices already in the tree at phase start count.
  std::vector<VertexId> target;
  /// Use the whole tree at phase start as the target (ignores `target`).
  bool target_is_tree = false;
  /// Tube predicate over dual vertices; empty means "everywhere".
  std::function<bool(VertexId)> tube;
};

struct PhasePlan {
  std::vector<Phase> phases;
};

struct PhaseOutcome {
  VertexId source = kNoVertex;
  bool target_hit = false;
  VertexId hit_vertex = kNoVertex;  // tree vertex where the phase ended (if target_hit)
  bool stayed_in_tube = true;       // every vertex of the phase walk satisfied the tube
  int loop_erased_walks = 0;
  std::uint64_t lerw_steps = 0;
  std::uint64_t plain_steps = 0;
};

struct PhasedResult {
  SpanningTree tree;  // spanning tree of the dual graph
  std::vector<PhaseOutcome> phases;
  /// Start vertices of every loop-erased walk, in order; running plain Wilson
  /// with these starts and the same stream reproduces `tree`.
  std::vector<VertexId> induced_starts;
  WilsonStats stats;  // loop-erased steps only
};

/// Wilson's algorithm on the (wired) dual with phase-scheduled starts: inside a
/// phase, a source outside the tree starts a loop-erased walk; a source inside
/// the tree starts a plain walk that runs until it leaves the tree, and the
/// exit vertex becomes the next source. A phase ends when a loop-erased walk
/// hits the target or the tree is complete. Remaining vertices are then added
/// by ordinary Wilson in ascending id order. Loop-erased walks draw from `rng`;
/// plain walks draw from a stream derived from it.
PhasedResult wilson_phased(const DualGraph& dual, const PhasePlan& plan, RngStream& rng,
                           const WalkObserver* observer = nullptr, std::uint64_t step_budget = kDefaultStepBudget);

}  // namespace treesplit
