#include "treesplit/samplers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "treesplit/splitting.hpp"

namespace treesplit {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void check_k_divides(int n, int k, const char* who) {
  if (k < 1 || n % k != 0) {
    throw std::invalid_argument(std::string(who) + ": k=" + std::to_string(k) + " must divide |V|=" +
                                std::to_string(n));
  }
}

[[noreturn]] void round_cap_tripped(const char* who, const SamplerReport& r) {
  throw BudgetExceeded(std::string(who) + ": no balanced partition accepted after " +
                       std::to_string(r.rounds_attempted) + " rounds (not splittable " +
                       std::to_string(r.rejected_not_splittable) + ", coin " + std::to_string(r.rejected_final_coin) +
                       ", not balanced " + std::to_string(r.rejected_not_balanced) +
                       "); the graph may have no balanced partition");
}

}  // namespace

bool KForest::is_balanced() const {
  return !sizes.empty() && std::all_of(sizes.begin(), sizes.end(), [&](int s) { return s == sizes.front(); });
}

KForest make_k_forest(const Multigraph& g, std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  int count = 0;
  KForest f;
  f.component = component_labels(g, edges, &count);
  if (static_cast<int>(edges.size()) != g.num_vertices() - count) throw NotATreeError("edge set contains a cycle");
  f.sizes.assign(static_cast<std::size_t>(count), 0);
  for (const int c : f.component) ++f.sizes[c];
  f.edges = std::move(edges);
  return f;
}

void SamplerReport::merge(const SamplerReport& o) {
  rounds_attempted += o.rounds_attempted;
  accepted += o.accepted;
  trees_sampled += o.trees_sampled;
  steps_taken += o.steps_taken;
  rejected_not_splittable += o.rejected_not_splittable;
  rejected_final_coin += o.rejected_final_coin;
  rejected_not_balanced += o.rejected_not_balanced;
  unmixed = unmixed || o.unmixed;
  wall_seconds += o.wall_seconds;
}

// ---- perfect sampler ----

PerfectSampler::PerfectSampler(const PlanarEmbedding& g, int k, std::uint64_t round_cap)
    : g_(&g), k_(k), round_cap_(round_cap), trees_(g) {
  check_k_divides(g.num_vertices(), k, "perfect sampler");
}

SampleResult PerfectSampler::sample(RngStream& rng) {
  const auto t0 = std::chrono::steady_clock::now();
  SampleResult out;
  SamplerReport& rep = out.report;
  rep.seed = rng.seed();
  const Multigraph& g = g_->graph();
  for (;;) {
    if (rep.rounds_attempted >= round_cap_) round_cap_tripped("perfect sampler", rep);
    ++rep.rounds_attempted;
    ++rep.trees_sampled;
    const SpanningTree t = trees_.sample(rng);
    auto split = find_balanced_split(t, k_);
    if (!split) {
      ++rep.rejected_not_splittable;
      continue;
    }
    Partition p = partition_from_cut(g, t, split->cut_edges);
    const BigInt s = count_spanning_trees(contract_partition(g, p));
    if (rng.uniform_below(s) != 0) {
      ++rep.rejected_final_coin;
      continue;
    }
    ++rep.accepted;
    out.partition = std::move(p);
    out.cut_edges = std::move(split->cut_edges);
    break;
  }
  rep.wall_seconds = seconds_since(t0);
  return out;
}

std::pair<Partition, SamplerReport> perfect_balanced_sample(const PlanarEmbedding& g, int k, RngStream& rng,
                                                            std::uint64_t round_cap) {
  PerfectSampler sampler(g, k, round_cap);
  auto r = sampler.sample(rng);
  return {std::move(r.partition), r.report};
}

// ---- up-down chain ----

template <class Forest>
UpDownChain<Forest>::UpDownChain(const Multigraph& g, std::span<const EdgeId> forest)
    : g_(&g), dyn_(g.num_vertices(), g.num_edges()) {
  reset(forest);
}

template <class Forest>
void UpDownChain<Forest>::reset(std::span<const EdgeId> forest) {
  const int m = g_->num_edges();
  dyn_ = Forest(g_->num_vertices(), m);
  in_.assign(static_cast<std::size_t>(m), 0);
  position_.assign(static_cast<std::size_t>(m), -1);
  inside_.clear();
  outside_.clear();
  for (const EdgeId e : forest) {
    if (e < 0 || e >= m) throw std::invalid_argument("up-down: edge id out of range");
    const Edge& ed = g_->edge(e);
    if (in_[e] || dyn_.connected(ed.u, ed.v)) throw NotATreeError("up-down: initial edge set contains a cycle");
    dyn_.link(ed.u, ed.v, e);
    in_[e] = 1;
    position_[e] = static_cast<std::int64_t>(inside_.size());
    inside_.push_back(e);
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (in_[e]) continue;
    position_[e] = static_cast<std::int64_t>(outside_.size());
    outside_.push_back(e);
  }
  steps_ = 0;
}

template <class Forest>
void UpDownChain<Forest>::move_edge(EdgeId e, bool to_forest) {
  auto& from = to_forest ? outside_ : inside_;
  auto& to = to_forest ? inside_ : outside_;
  const auto pos = static_cast<std::size_t>(position_[e]);
  from[pos] = from.back();
  position_[from[pos]] = static_cast<std::int64_t>(pos);
  from.pop_back();
  position_[e] = static_cast<std::int64_t>(to.size());
  to.push_back(e);
  in_[e] = to_forest ? 1 : 0;
}

template <class Forest>
UpDownMove UpDownChain<Forest>::step(RngStream& rng) {
  ++steps_;
  UpDownMove mv;
  if (outside_.empty()) return mv;
  const EdgeId e = outside_[rng.uniform_below(outside_.size())];
  mv.added = e;
  mv.removed = e;
  const Edge& ed = g_->edge(e);
  EdgeId f = kNoEdge;
  const int len = dyn_.select_path(ed.u, ed.v);
  if (len >= 0) {
    const auto r = rng.uniform_below(static_cast<std::uint64_t>(len) + 1);
    if (r < static_cast<std::uint64_t>(len)) f = dyn_.path_edge(static_cast<int>(r));
  } else {
    const auto r = rng.uniform_below(inside_.size() + 1);
    if (r < inside_.size()) f = inside_[r];
  }
  if (f == kNoEdge) return mv;
  dyn_.cut(f);
  dyn_.link(ed.u, ed.v, e);
  move_edge(f, false);
  move_edge(e, true);
  mv.removed = f;
  return mv;
}

template <class Forest>
void UpDownChain<Forest>::run(std::uint64_t steps, RngStream& rng) {
  for (std::uint64_t i = 0; i < steps; ++i) step(rng);
}

template <class Forest>
std::vector<EdgeId> UpDownChain<Forest>::edges() const {
  std::vector<EdgeId> out = inside_;
  std::sort(out.begin(), out.end());
  return out;
}

template <class Forest>
KForest UpDownChain<Forest>::forest() const {
  return make_k_forest(*g_, edges());
}

template class UpDownChain<LinkCutForest>;
template class UpDownChain<NaiveForest>;

KForest updown_step(const Multigraph& g, const KForest& f, RngStream& rng) {
  UpDownChain<LinkCutForest> chain(g, f.edges);
  chain.step(rng);
  return chain.forest();
}

// ---- approximate sampler ----

namespace {

constexpr int kSmallForest = 64;

void reset_chain(std::monostate, const std::vector<EdgeId>&) {}
template <class C>
void reset_chain(C& c, const std::vector<EdgeId>& f) {
  c.reset(f);
}

void run_chain(std::monostate, std::uint64_t, RngStream&) {}
template <class C>
void run_chain(C& c, std::uint64_t steps, RngStream& rng) {
  c.run(steps, rng);
}

KForest forest_of(std::monostate) { return {}; }
template <class C>
KForest forest_of(const C& c) {
  return c.forest();
}

}  // namespace

ApproxSampler::ApproxSampler(const PlanarEmbedding& g, int k, double mixing_multiplier, std::uint64_t round_cap)
    : g_(&g), k_(k), round_cap_(round_cap), trees_(g) {
  check_k_divides(g.num_vertices(), k, "up-down sampler");
  if (!(mixing_multiplier >= 0.0) || !std::isfinite(mixing_multiplier)) {
    throw std::invalid_argument("mixing multiplier must be a finite nonnegative number");
  }
  const double m = g.num_edges();
  steps_per_round_ = m > 1 ? static_cast<std::uint64_t>(std::ceil(mixing_multiplier * m * std::log(m))) : 0;
}

std::vector<EdgeId> ApproxSampler::initial_forest(RngStream& rng) const {
  const SpanningTree t = trees_.sample(rng);
  const auto split = find_min_imbalance_split(t, k_);
  std::vector<EdgeId> edges;
  std::set_difference(t.edges().begin(), t.edges().end(), split.cut_edges.begin(), split.cut_edges.end(),
                      std::back_inserter(edges));
  return edges;
}

SampleResult ApproxSampler::sample(RngStream& rng) {
  const auto t0 = std::chrono::steady_clock::now();
  SampleResult out;
  SamplerReport& rep = out.report;
  rep.seed = rng.seed();
  rep.unmixed = steps_per_round_ == 0;
  const Multigraph& g = g_->graph();
  for (;;) {
    if (rep.rounds_attempted >= round_cap_) round_cap_tripped("up-down sampler", rep);
    ++rep.rounds_attempted;
    if (std::holds_alternative<std::monostate>(chain_)) {
      // BFS forests beat link-cut trees until paths get long.
      if (g.num_vertices() <= kSmallForest) {
        chain_.emplace<UpDownChain<NaiveForest>>(g, initial_forest(rng));
      } else {
        chain_.emplace<UpDownChain<LinkCutForest>>(g, initial_forest(rng));
      }
      ++rep.trees_sampled;
    } else if (steps_per_round_ == 0) {
      std::visit([&](auto& c) { reset_chain(c, initial_forest(rng)); }, chain_);
      ++rep.trees_sampled;
    }
    KForest f = std::visit(
        [&](auto& c) {
          run_chain(c, steps_per_round_, rng);
          return forest_of(c);
        },
        chain_);
    rep.steps_taken += steps_per_round_;
    if (!f.is_balanced()) {
      ++rep.rejected_not_balanced;
      continue;
    }
    ++rep.accepted;
    out.partition = partition_from_edges(g, f.edges);
    break;
  }
  rep.wall_seconds = seconds_since(t0);
  return out;
}

std::pair<Partition, SamplerReport> approx_balanced_sample(const PlanarEmbedding& g, int k, double mixing_multiplier,
                                                           RngStream& rng, std::uint64_t round_cap) {
  ApproxSampler sampler(g, k, mixing_multiplier, round_cap);
  auto r = sampler.sample(rng);
  return {std::move(r.partition), r.report};
}

}  // namespace treesplit
