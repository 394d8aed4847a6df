#include "treesplit/phased_wilson.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace treesplit {

namespace {

class PhasedBuilder {
 public:
  PhasedBuilder(const DualGraph& dual, RngStream& rng, const WalkObserver* observer, std::uint64_t budget)
      : dual_(dual),
        g_(dual.graph),
        rng_(rng),
        selector_(rng.derive(0x5e1ec7)),
        observer_(observer),
        budget_(budget),
        in_tree_(static_cast<std::size_t>(g_.num_vertices()), 0),
        next_edge_(static_cast<std::size_t>(g_.num_vertices()), kNoEdge),
        next_vertex_(static_cast<std::size_t>(g_.num_vertices()), kNoVertex),
        parent_(static_cast<std::size_t>(g_.num_vertices()), kNoEdge) {
    in_tree_[dual.root] = 1;
    tree_size_ = 1;
  }

  PhaseOutcome run_phase(int index, const Phase& phase) {
    std::vector<char> target(in_tree_.size(), 0);
    bool any = false;
    if (phase.target_is_tree) {
      target = in_tree_;
      any = true;
    } else {
      for (const VertexId t : phase.target) {
        if (t < 0 || t >= g_.num_vertices()) throw std::invalid_argument("phase target vertex out of range");
        if (in_tree_[t]) {
          target[t] = 1;
          any = true;
        }
      }
    }
    if (!any) {
      throw std::invalid_argument("phase " + std::to_string(index) + ": target set is empty at phase start");
    }

    PhaseOutcome out;
    out.source = resolve_source(phase.source);
    auto in_tube = [&](VertexId v) { return !phase.tube || phase.tube(v); };
    out.stayed_in_tube = in_tube(out.source);

    VertexId source = out.source;
    while (tree_size_ < g_.num_vertices()) {
      if (!in_tree_[source]) {
        // Case (a): loop-erased walk into the current tree.
        const VertexId hit = loop_erased_step(index, source, in_tube, out);
        if (target[hit]) {
          out.target_hit = true;
          out.hit_vertex = hit;
          break;
        }
        source = hit;
      } else {
        // Case (b): plain walk until the walk leaves the current tree.
        source = exit_walk(index, source, in_tube, out);
      }
    }
    return out;
  }

  void finish() {
    for (VertexId s = 0; s < g_.num_vertices(); ++s) {
      if (in_tree_[s]) continue;
      PhaseOutcome scratch;
      loop_erased_step(-1, s, [](VertexId) { return true; }, scratch);
    }
  }

  PhasedResult result(std::vector<PhaseOutcome> phases) {
    PhasedResult r;
    r.tree = SpanningTree::from_parent_edges(g_, parent_, dual_.root);
    r.phases = std::move(phases);
    r.induced_starts = std::move(starts_);
    r.stats = stats_;
    return r;
  }

 private:
  VertexId resolve_source(const PhaseSource& s) const {
    switch (s.rule) {
      case PhaseSource::Rule::kVertex:
        if (s.vertex < 0 || s.vertex >= g_.num_vertices()) throw std::invalid_argument("phase source out of range");
        return s.vertex;
      case PhaseSource::Rule::kNearestPoint: {
        if (!s.point) throw std::invalid_argument("nearest-point source needs a point");
        VertexId best = kNoVertex;
        double best_d = std::numeric_limits<double>::infinity();
        for (VertexId v = 0; v < g_.num_vertices(); ++v) {
          if (v == dual_.root) continue;
          const double d = distance(dual_.positions[v], *s.point);
          if (d < best_d) {
            best_d = d;
            best = v;
          }
        }
        if (best == kNoVertex) throw std::invalid_argument("dual has no positioned vertex");
        return best;
      }
      case PhaseSource::Rule::kAdjacentToTree: {
        if (s.vertex < 0 || s.vertex >= g_.num_vertices() || !in_tree_[s.vertex]) {
          throw std::invalid_argument("adjacent-to-tree source needs a tree vertex");
        }
        VertexId best = kNoVertex;
        double best_d = std::numeric_limits<double>::infinity();
        for (const auto& inc : g_.incident(s.vertex)) {
          if (in_tree_[inc.neighbor]) continue;
          const double d = s.point ? distance(dual_.positions[inc.neighbor], *s.point) : 0.0;
          if (best == kNoVertex || d < best_d) {
            best_d = d;
            best = inc.neighbor;
          }
        }
        if (best == kNoVertex) throw std::invalid_argument("tree vertex has no neighbor outside the tree");
        return best;
      }
    }
    return kNoVertex;
  }

  template <class Tube>
  VertexId loop_erased_step(int phase, VertexId start, const Tube& in_tube, PhaseOutcome& out) {
    std::uint64_t steps = 0;
    VertexId v = start;
    while (!in_tree_[v]) {
      const auto inc = g_.incident(v);
      const Incidence& pick = inc[rng_.uniform_below(inc.size())];
      next_edge_[v] = pick.edge;
      next_vertex_[v] = pick.neighbor;
      v = pick.neighbor;
      if (!in_tube(v)) out.stayed_in_tube = false;
      if (++steps > budget_) throw BudgetExceeded("wilson_phased: loop-erased walk exceeded the step budget");
    }
    const VertexId hit = v;
    std::uint64_t len = 0;
    for (v = start; !in_tree_[v]; v = next_vertex_[v]) {
      in_tree_[v] = 1;
      parent_[v] = next_edge_[v];
      ++tree_size_;
      ++len;
    }
    starts_.push_back(start);
    stats_.steps += steps;
    ++stats_.walks;
    ++out.loop_erased_walks;
    out.lerw_steps += steps;
    if (observer_ != nullptr) (*observer_)({phase, start, hit, steps, len});
    return hit;
  }

  template <class Tube>
  VertexId exit_walk(int phase, VertexId start, const Tube& in_tube, PhaseOutcome& out) {
    std::uint64_t steps = 0;
    VertexId v = start;
    while (in_tree_[v]) {
      const auto inc = g_.incident(v);
      v = inc[selector_.uniform_below(inc.size())].neighbor;
      if (!in_tube(v)) out.stayed_in_tube = false;
      if (++steps > budget_) throw BudgetExceeded("wilson_phased: tree-exit walk exceeded the step budget");
    }
    out.plain_steps += steps;
    if (observer_ != nullptr) (*observer_)({phase, start, v, steps, 0});
    return v;
  }

  const DualGraph& dual_;
  const Multigraph& g_;
  RngStream& rng_;
  RngStream selector_;
  const WalkObserver* observer_;
  std::uint64_t budget_;
  std::vector<char> in_tree_;
  std::vector<EdgeId> next_edge_;
  std::vector<VertexId> next_vertex_;
  std::vector<EdgeId> parent_;
  int tree_size_ = 0;
  std::vector<VertexId> starts_;
  WilsonStats stats_;
};

}  // namespace

PhasedResult wilson_phased(const DualGraph& dual, const PhasePlan& plan, RngStream& rng, const WalkObserver* observer,
                           std::uint64_t step_budget) {
  if (dual.root == kNoVertex) throw std::invalid_argument("wilson_phased: dual has no root");
  if (!dual.graph.is_connected()) throw std::invalid_argument("wilson_phased: dual graph must be connected");
  PhasedBuilder builder(dual, rng, observer, step_budget);
  std::vector<PhaseOutcome> outcomes;
  outcomes.reserve(plan.phases.size());
  for (std::size_t i = 0; i < plan.phases.size(); ++i) {
    outcomes.push_back(builder.run_phase(static_cast<int>(i), plan.phases[i]));
  }
  builder.finish();
  return builder.result(std::move(outcomes));
}

}  // namespace treesplit
