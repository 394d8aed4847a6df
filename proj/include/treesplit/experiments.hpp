#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "treesplit/drawing.hpp"
#include "treesplit/lattice.hpp"
#include "treesplit/samplers.hpp"
#include "treesplit/stats.hpp"

namespace treesplit {

inline constexpr const char* kLibraryVersion = "0.1.0";

struct ExperimentConfig {
  std::string subcommand;
  int m = 10;
  int n = 10;
  int k = 2;
  double epsilon = 0.1;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  int workers = 1;
  std::string out;
  std::string svg_out;
  std::string mode = "exact";  // sample: exact | updown
  double mixing_multiplier = 10.0;
  int bin_size = 1;

  // histogram edge; -1 picks the vertical edge in the middle row
  int edge_col = -1;
  int edge_row = -1;
  char orientation = 'v';

  // walk-bounds starts; -1 picks the box centre
  int i0 = -1;
  int j0 = -1;
  int ell = 5;

  // lattice
  std::string lattice = "square";
  double delta = 0.1;
  std::string drawing;  // JSON path; empty means k vertical strips of the unit square

  /// Throws std::invalid_argument on values the subcommand cannot run with.
  void validate() const;
};

nlohmann::json to_json(const ExperimentConfig& c);

/// TREESPLIT_WORKERS if set to a positive integer, else 1.
int default_workers();

/// Runs body(acc, trial) for trial = 0..trials-1. Worker w owns a copy of
/// `init` and a contiguous block of trials; the copies are then folded with
/// Acc::merge in worker order. Results do not depend on the worker count as
/// long as the body draws only from per-trial streams and merge is
/// order-independent.
template <class Acc, class Body>
Acc run_trials(std::uint64_t trials, int workers, const Acc& init, Body body) {
  const auto w = static_cast<std::uint64_t>(std::max(1, workers));
  const auto used = std::max<std::uint64_t>(1, std::min(w, trials));
  std::vector<Acc> parts(used, init);
  auto run = [&](std::uint64_t i) {
    const std::uint64_t begin = trials * i / used;
    const std::uint64_t end = trials * (i + 1) / used;
    for (std::uint64_t t = begin; t < end; ++t) body(parts[i], t);
  };
  if (used == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t i = 0; i < used; ++i) pool.emplace_back(run, i);
    for (auto& th : pool) th.join();
  }
  Acc total = init;
  for (const auto& p : parts) total.merge(p);
  return total;
}

// heatmap

struct EdgeCount {
  int col = 0;
  int row = 0;
  char orientation = 'v';
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  Interval ci;
};

struct HeatmapResult {
  int m = 0;
  int n = 0;
  std::uint64_t trials = 0;
  std::vector<EdgeCount> edges;  // every vertical edge, row-major by lower endpoint
  std::uint64_t splittable = 0;  // trees with at least one balanced split edge
  int classes = 0;

  const EdgeCount& at(int col, int row) const { return edges[static_cast<std::size_t>(row * m + col)]; }
};

/// Symmetry class of vertical edge (col,row) of the m x n grid under the
/// reflections that map vertical edges to vertical edges.
std::pair<int, int> vertical_edge_class(int m, int n, int col, int row);

/// For each class of vertical edges, counts trials whose uniform spanning tree
/// contains the class representative e with T - e balanced. One tree per trial
/// serves all classes; counts are then copied to every member of a class.
HeatmapResult run_heatmap(int m, int n, std::uint64_t trials, std::uint64_t seed, int workers);

void write_heatmap_csv(std::ostream& out, const HeatmapResult& h);
void write_heatmap_svg(std::ostream& out, const HeatmapResult& h);

// histogram

struct HistogramResult {
  int m = 0;
  int n = 0;
  int col = 0;
  int row = 0;
  char orientation = 'v';
  std::uint64_t trials = 0;
  std::vector<std::uint64_t> counts;  // counts[s]: edge in T and the lower/left side has s vertices

  HistogramResult& merge(const HistogramResult& o);
};

/// The vertical edge in the middle row of the grid (central edge for even n).
std::pair<int, int> default_histogram_edge(int m, int n);

HistogramResult run_histogram(int m, int n, int col, int row, char orientation, std::uint64_t trials,
                              std::uint64_t seed, int workers);

struct HistogramBin {
  int lo = 0;
  int hi = 0;
  std::uint64_t count = 0;
};

/// Bins sizes 1..N-1 into runs of bin_size with one bin centred on N/2;
/// partial bins at either end are kept as they are.
std::vector<HistogramBin> bin_histogram(const HistogramResult& h, int bin_size);

void write_histogram_csv(std::ostream& out, const HistogramResult& h, int bin_size);

// bounds

/// beta^beta_exp * n^n_exp * m^m_exp, the shape of the grid bound denominators.
struct Monomial {
  int beta_exp = 0;
  int n_exp = 0;
  int m_exp = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct BoundRow {
  std::string name;
  std::string formula;
  std::string scope;
  double log10_value = 0.0;  // beta = 1
  double value = 0.0;        // beta = 1; may underflow to 0 for large k, log10_value does not
  int beta_exp = 0;
};

struct BoundsTable {
  int m = 0;
  int n = 0;
  int k = 0;
  long long vertices = 0;
  long long edges = 0;
  bool k_divides_m = true;
  std::vector<BoundRow> rows;

  const BoundRow& row(const std::string& name) const;
};

/// Denominator of the grid bound obtained by pushing the tree-level bound
/// through the forest-to-partition transfer, with M - N + 1 counted as m n.
Monomial transferred_grid_bound(int k);
Monomial direct_grid_bound(int k);

BoundsTable compute_bounds(int m, int n, int k);
void write_bounds(std::ostream& out, const BoundsTable& t);

// walk bounds

struct WalkEstimate {
  std::string geometry;
  int width = 0;
  int height = 0;
  int start_i = 0;
  int start_j = 0;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double frequency = 0.0;
  Interval ci;
  double bound = -1.0;  // negative: no explicit bound
};

/// Simple random walk on Z^2 from `start` inside the box [x0,x1] x [y0,y1];
/// returns the first point outside it.
std::pair<int, int> first_exit(int x0, int x1, int y0, int y1, int i, int j, RngStream& rng);

/// Exit frequencies for the three boxes: not through the bottom of
/// [1..m]x[1..n] from (i0,j0); through the top of the square
/// [-ell..ell]x[0..2 ell] from (0,0); through the top of [0..m]x[0..n] from
/// (m/2, 0).
std::vector<WalkEstimate> run_walk_bounds(const ExperimentConfig& c);
void write_walk_csv(std::ostream& out, const std::vector<WalkEstimate>& rows);

// sample

struct SampleRun {
  std::vector<SampleResult> samples;
  SamplerReport report;

  double splittable_fraction() const;
};

/// exact: sample i uses stream (seed, i), so the output does not depend on
/// the worker count. updown: one chain, one stream, sequential.
SampleRun run_sample(const ExperimentConfig& c);
/// One JSON line per sample, then a footer line. Wall time is left out so
/// that reruns are byte-identical.
void write_sample_stream(std::ostream& out, const ExperimentConfig& c, const SampleRun& run);

// lattice

struct LatticeRun {
  LatticeRegion region;
  CompatibilityEstimate estimate;
};

PlaneDrawing experiment_drawing(const ExperimentConfig& c);
LatticeRun run_lattice(const ExperimentConfig& c);
void write_lattice_csv(std::ostream& out, const ExperimentConfig& c, const LatticeRun& run);

/// Writes <out>.meta.json with the config, library version and wall time.
void write_metadata(const std::filesystem::path& out, const ExperimentConfig& c, double wall_seconds,
                    const nlohmann::json& extra = nlohmann::json::object());

}  // namespace treesplit
