#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <span>
#include <vector>

#include "treesplit/dynamic_forest.hpp"
#include "treesplit/partition.hpp"
#include "treesplit/planar.hpp"
#include "treesplit/rng.hpp"
#include "treesplit/walks.hpp"

namespace treesplit {

/// Spanning forest of a host graph with component bookkeeping.
struct KForest {
  std::vector<EdgeId> edges;   // sorted
  std::vector<int> component;  // vertex -> component index (ordered by lowest vertex)
  std::vector<int> sizes;      // per component

  int k() const { return static_cast<int>(sizes.size()); }
  bool is_balanced() const;
};

/// Throws NotATreeError if `edges` contains a cycle.
KForest make_k_forest(const Multigraph& g, std::vector<EdgeId> edges);

struct SamplerReport {
  std::uint64_t seed = 0;
  std::uint64_t rounds_attempted = 0;
  std::uint64_t accepted = 0;
  std::uint64_t trees_sampled = 0;  // perfect sampler
  std::uint64_t steps_taken = 0;    // up-down sampler
  std::uint64_t rejected_not_splittable = 0;
  std::uint64_t rejected_final_coin = 0;
  std::uint64_t rejected_not_balanced = 0;
  bool unmixed = false;  // up-down run with zero steps per round
  double wall_seconds = 0.0;

  std::uint64_t rejected() const { return rejected_not_splittable + rejected_final_coin + rejected_not_balanced; }
  void merge(const SamplerReport& other);
};

struct SampleResult {
  Partition partition;
  std::vector<EdgeId> cut_edges;  // the split edges of the accepted tree; empty for up-down samples
  SamplerReport report;
};

inline constexpr std::uint64_t kDefaultRoundCap = 100'000'000;

/// Exact sampler from the spanning tree distribution conditioned on balance:
/// draw a uniform spanning tree, keep it only if it splits into k equal parts,
/// then accept the partition P with probability 1/sp(G/P).
class PerfectSampler {
 public:
  /// Throws std::invalid_argument unless 1 <= k and k divides |V|.
  PerfectSampler(const PlanarEmbedding& g, int k, std::uint64_t round_cap = kDefaultRoundCap);

  /// One accepted partition. Throws BudgetExceeded after round_cap rounds.
  SampleResult sample(RngStream& rng);

 private:
  const PlanarEmbedding* g_;
  int k_;
  std::uint64_t round_cap_;
  DualTreeSampler trees_;
};

std::pair<Partition, SamplerReport> perfect_balanced_sample(const PlanarEmbedding& g, int k, RngStream& rng,
                                                            std::uint64_t round_cap = kDefaultRoundCap);

struct UpDownMove {
  EdgeId added = kNoEdge;
  EdgeId removed = kNoEdge;  // equals `added` when the step leaves the forest unchanged
};

/// The up-down walk on k-forests: add a uniform non-forest edge e; if it
/// closes a cycle drop a uniform edge of that cycle (e included), otherwise
/// drop a uniform edge of F + e. Forest is LinkCutForest or NaiveForest.
template <class Forest>
class UpDownChain {
 public:
  UpDownChain(const Multigraph& g, std::span<const EdgeId> forest);

  UpDownMove step(RngStream& rng);
  void run(std::uint64_t steps, RngStream& rng);
  void reset(std::span<const EdgeId> forest);

  const Multigraph& graph() const { return *g_; }
  std::vector<EdgeId> edges() const;  // sorted
  KForest forest() const;
  bool in_forest(EdgeId e) const { return in_[static_cast<std::size_t>(e)] != 0; }
  std::uint64_t steps() const { return steps_; }

 private:
  void move_edge(EdgeId e, bool to_forest);

  const Multigraph* g_;
  Forest dyn_;
  std::vector<EdgeId> inside_;   // forest edges
  std::vector<EdgeId> outside_;  // non-forest edges
  std::vector<std::int64_t> position_;
  std::vector<char> in_;
  std::uint64_t steps_ = 0;
};

extern template class UpDownChain<LinkCutForest>;
extern template class UpDownChain<NaiveForest>;

/// One up-down step applied to `f` (convenience; builds a fresh dynamic forest).
KForest updown_step(const Multigraph& g, const KForest& f, RngStream& rng);

/// Approximate balanced sampler: up-down rounds of ceil(multiplier * M ln M)
/// steps, returning the first balanced forest seen at a round boundary. The
/// chain persists across sample() calls. The first forest (and, with
/// multiplier 0, every forest) is a Wilson tree minus a min-imbalance cut.
class ApproxSampler {
 public:
  ApproxSampler(const PlanarEmbedding& g, int k, double mixing_multiplier,
                std::uint64_t round_cap = kDefaultRoundCap);

  SampleResult sample(RngStream& rng);
  std::uint64_t steps_per_round() const { return steps_per_round_; }

 private:
  std::vector<EdgeId> initial_forest(RngStream& rng) const;

  const PlanarEmbedding* g_;
  int k_;
  std::uint64_t steps_per_round_;
  std::uint64_t round_cap_;
  DualTreeSampler trees_;
  std::variant<std::monostate, UpDownChain<NaiveForest>, UpDownChain<LinkCutForest>> chain_;
};

std::pair<Partition, SamplerReport> approx_balanced_sample(const PlanarEmbedding& g, int k, double mixing_multiplier,
                                                           RngStream& rng, std::uint64_t round_cap = kDefaultRoundCap);

}  // namespace treesplit
