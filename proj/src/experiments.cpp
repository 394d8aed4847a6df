#include "treesplit/experiments.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "treesplit/planar.hpp"
#include "treesplit/splitting.hpp"

namespace treesplit {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::string fmt(double x, int precision = 6) {
  std::ostringstream s;
  s << std::setprecision(precision) << x;
  return s.str();
}

}  // namespace

void ExperimentConfig::validate() const {
  require(trials >= 1, "trials must be at least 1");
  require(workers >= 1, "workers must be at least 1");
  require(m >= 1 && n >= 1, "grid dimensions must be positive");
  require(k >= 1, "k must be positive");
  const auto& s = subcommand;
  if (s == "heatmap") {
    require(k == 2, "heatmap needs k = 2");
    require(n >= 2, "heatmap needs at least two rows");
  } else if (s == "histogram") {
    require(k == 2, "histogram needs k = 2");
    require(bin_size >= 1, "bin size must be positive");
    require(orientation == 'v' || orientation == 'h', "orientation must be v or h");
    require(m * n >= 2, "histogram needs at least two vertices");
    if (edge_col >= 0 || edge_row >= 0) {
      const int cols = orientation == 'v' ? m : m - 1;
      const int rows = orientation == 'v' ? n - 1 : n;
      require(edge_col >= 0 && edge_col < cols && edge_row >= 0 && edge_row < rows, "edge is not in the grid");
    } else {
      require(n >= 2, "default histogram edge needs at least two rows");
    }
  } else if (s == "sample") {
    require(mode == "exact" || mode == "updown", "mode must be exact or updown");
    require((m * n) % k == 0, "k must divide the number of vertices");
    require(mixing_multiplier >= 0.0, "mixing multiplier must be non-negative");
  } else if (s == "walk-bounds") {
    require(i0 == -1 || (i0 >= 1 && i0 <= m), "i0 must lie in 1..m");
    require(j0 == -1 || (j0 >= 1 && j0 <= n), "j0 must lie in 1..n");
    require(ell >= 1, "ell must be positive");
  } else if (s == "lattice") {
    parse_lattice_kind(lattice);
    require(n >= 2, "lattice scale must be at least 2");
    require(epsilon >= 0.0, "epsilon must be non-negative");
    require(delta > 0.0, "delta must be positive");
    require(k <= 8, "lattice compatibility supports k <= 8");
  } else if (s != "bounds") {
    throw std::invalid_argument("unknown subcommand '" + s + "'");
  }
}

nlohmann::json to_json(const ExperimentConfig& c) {
  return {{"subcommand", c.subcommand},
          {"m", c.m},
          {"n", c.n},
          {"k", c.k},
          {"epsilon", c.epsilon},
          {"trials", c.trials},
          {"seed", c.seed},
          {"workers", c.workers},
          {"out", c.out},
          {"svg_out", c.svg_out},
          {"mode", c.mode},
          {"mixing_multiplier", c.mixing_multiplier},
          {"bin_size", c.bin_size},
          {"edge_col", c.edge_col},
          {"edge_row", c.edge_row},
          {"orientation", std::string(1, c.orientation)},
          {"i0", c.i0},
          {"j0", c.j0},
          {"ell", c.ell},
          {"lattice", c.lattice},
          {"delta", c.delta},
          {"drawing", c.drawing}};
}

int default_workers() {
  if (const char* env = std::getenv("TREESPLIT_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 4096) return static_cast<int>(v);
  }
  return 1;
}

// heatmap

std::pair<int, int> vertical_edge_class(int m, int n, int col, int row) {
  return {std::min(col, m - 1 - col), std::min(row, n - 2 - row)};
}

namespace {

// Side of edge (a,b) holding `a` when the edge is in t.
int side_size(const SpanningTree& t, const std::vector<int>& sub, int total, VertexId a, VertexId b, EdgeId e) {
  if (t.parent_edge(a) == e) return sub[static_cast<std::size_t>(a)];
  return total - sub[static_cast<std::size_t>(b)];
}

struct HeatAcc {
  std::vector<std::uint64_t> successes;
  std::uint64_t splittable = 0;

  void merge(const HeatAcc& o) {
    for (std::size_t i = 0; i < successes.size(); ++i) successes[i] += o.successes[i];
    splittable += o.splittable;
  }
};

}  // namespace

HeatmapResult run_heatmap(int m, int n, std::uint64_t trials, std::uint64_t seed, int workers) {
  const GridIndex gi{m, n};
  const auto g = build_grid(m, n);
  const DualTreeSampler sampler(g);
  const int total = gi.num_vertices();

  // one representative edge per class
  std::vector<int> class_of(static_cast<std::size_t>(m * (n - 1)));
  std::vector<std::array<int, 2>> reps;
  for (int row = 0; row + 1 < n; ++row) {
    for (int col = 0; col < m; ++col) {
      const auto [c, r] = vertical_edge_class(m, n, col, row);
      if (c == col && r == row) reps.push_back({col, row});
    }
  }
  for (int row = 0; row + 1 < n; ++row) {
    for (int col = 0; col < m; ++col) {
      const auto [c, r] = vertical_edge_class(m, n, col, row);
      const auto it = std::find(reps.begin(), reps.end(), std::array<int, 2>{c, r});
      class_of[static_cast<std::size_t>(row * m + col)] = static_cast<int>(it - reps.begin());
    }
  }

  HeatAcc init;
  init.successes.assign(reps.size(), 0);
  const auto acc = run_trials(trials, workers, init, [&](HeatAcc& a, std::uint64_t trial) {
    RngStream rng(seed, trial);
    const auto t = sampler.sample(rng);
    const auto sub = subtree_sizes(t);
    if (total % 2 != 0) return;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const VertexId lo = gi.vertex(reps[i][0], reps[i][1]);
      const VertexId hi = gi.vertex(reps[i][0], reps[i][1] + 1);
      const EdgeId e = gi.vertical_edge(reps[i][0], reps[i][1]);
      if (!t.contains(e)) continue;
      if (2 * side_size(t, sub, total, lo, hi, e) == total) ++a.successes[i];
    }
    for (VertexId v = 0; v < total; ++v) {
      if (v != t.root() && 2 * sub[static_cast<std::size_t>(v)] == total) {
        ++a.splittable;
        break;
      }
    }
  });

  HeatmapResult h;
  h.m = m;
  h.n = n;
  h.trials = trials;
  h.splittable = acc.splittable;
  h.classes = static_cast<int>(reps.size());
  for (int row = 0; row + 1 < n; ++row) {
    for (int col = 0; col < m; ++col) {
      EdgeCount ec;
      ec.col = col;
      ec.row = row;
      ec.successes = acc.successes[static_cast<std::size_t>(class_of[static_cast<std::size_t>(row * m + col)])];
      ec.trials = trials;
      ec.ci = wilson_interval(ec.successes, trials);
      h.edges.push_back(ec);
    }
  }
  return h;
}

void write_heatmap_csv(std::ostream& out, const HeatmapResult& h) {
  out << "col,row,orientation,successes,trials,ci_lo,ci_hi\n";
  for (const auto& e : h.edges) {
    out << e.col << ',' << e.row << ',' << e.orientation << ',' << e.successes << ',' << e.trials << ','
        << fmt(e.ci.lo, 8) << ',' << fmt(e.ci.hi, 8) << '\n';
  }
}

namespace {

// Piecewise-linear viridis approximation.
std::string heat_colour(double t) {
  static constexpr std::array<std::array<double, 3>, 5> stops{{
      {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};
  t = std::clamp(t, 0.0, 1.0) * (stops.size() - 1);
  const auto i = std::min<std::size_t>(static_cast<std::size_t>(t), stops.size() - 2);
  const double f = t - static_cast<double>(i);
  std::ostringstream s;
  s << "rgb(";
  for (int c = 0; c < 3; ++c) {
    s << static_cast<int>(std::lround(stops[i][c] + f * (stops[i + 1][c] - stops[i][c]))) << (c < 2 ? "," : ")");
  }
  return s.str();
}

}  // namespace

void write_heatmap_svg(std::ostream& out, const HeatmapResult& h) {
  const int cell = 40;
  const int rows = h.n - 1;
  const int width = h.m * cell;
  const int height = rows * cell;
  std::uint64_t lo = UINT64_MAX, hi = 0;
  for (const auto& e : h.edges) {
    lo = std::min(lo, e.successes);
    hi = std::max(hi, e.successes);
  }
  if (h.edges.empty()) lo = 0;
  const double span = hi > lo ? static_cast<double>(hi - lo) : 1.0;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width + 20 << "\" height=\"" << height + 50
      << "\" font-family=\"sans-serif\">\n";
  out << "<title>balanced split edge counts, " << h.m << "x" << h.n << " grid, " << h.trials
      << " trials per class</title>\n";
  for (const auto& e : h.edges) {
    // row 0 at the bottom, like the grid coordinates
    const int x = 10 + e.col * cell;
    const int y = 10 + (rows - 1 - e.row) * cell;
    const double t = (static_cast<double>(e.successes) - static_cast<double>(lo)) / span;
    out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\""
        << heat_colour(t) << "\"><title>(" << e.col << "," << e.row << ")-(" << e.col << "," << e.row + 1
        << "): " << e.successes << "</title></rect>\n";
    if (h.m <= 20) {
      out << "<text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 4
          << "\" font-size=\"10\" text-anchor=\"middle\" fill=\"" << (t > 0.6 ? "black" : "white") << "\">"
          << e.successes << "</text>\n";
    }
  }
  out << "<text x=\"10\" y=\"" << height + 35 << "\" font-size=\"12\">min " << lo << ", max " << hi
      << "</text>\n</svg>\n";
}

// histogram

HistogramResult& HistogramResult::merge(const HistogramResult& o) {
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
  return *this;
}

std::pair<int, int> default_histogram_edge(int m, int n) { return {(m - 1) / 2, n / 2 - 1}; }

HistogramResult run_histogram(int m, int n, int col, int row, char orientation, std::uint64_t trials,
                              std::uint64_t seed, int workers) {
  const GridIndex gi{m, n};
  const auto g = build_grid(m, n);
  const DualTreeSampler sampler(g);
  const int total = gi.num_vertices();
  const bool vertical = orientation == 'v';
  const VertexId a = gi.vertex(col, row);
  const VertexId b = vertical ? gi.vertex(col, row + 1) : gi.vertex(col + 1, row);
  const EdgeId e = vertical ? gi.vertical_edge(col, row) : gi.horizontal_edge(col, row);

  HistogramResult init;
  init.m = m;
  init.n = n;
  init.col = col;
  init.row = row;
  init.orientation = orientation;
  init.trials = trials;
  init.counts.assign(static_cast<std::size_t>(total) + 1, 0);
  return run_trials(trials, workers, init, [&](HistogramResult& acc, std::uint64_t trial) {
    RngStream rng(seed, trial);
    const auto t = sampler.sample(rng);
    if (!t.contains(e)) return;
    const auto sub = subtree_sizes(t);
    ++acc.counts[static_cast<std::size_t>(side_size(t, sub, total, a, b, e))];
  });
}

std::vector<HistogramBin> bin_histogram(const HistogramResult& h, int bin_size) {
  if (bin_size < 1) throw std::invalid_argument("bin size must be positive");
  const int total = static_cast<int>(h.counts.size()) - 1;
  std::vector<HistogramBin> bins;
  if (total < 2) return bins;
  const int centre_lo = total / 2 - (bin_size - 1) / 2;
  int first = centre_lo;
  while (first > 1) first -= bin_size;
  for (int lo = first; lo <= total - 1; lo += bin_size) {
    HistogramBin b{std::max(lo, 1), std::min(lo + bin_size - 1, total - 1), 0};
    if (b.lo > b.hi) continue;
    for (int s = b.lo; s <= b.hi; ++s) b.count += h.counts[static_cast<std::size_t>(s)];
    bins.push_back(b);
  }
  return bins;
}

void write_histogram_csv(std::ostream& out, const HistogramResult& h, int bin_size) {
  out << "size_lo,size_hi,count,trials\n";
  for (const auto& b : bin_histogram(h, bin_size)) {
    out << b.lo << ',' << b.hi << ',' << b.count << ',' << h.trials << '\n';
  }
}

// bounds

const BoundRow& BoundsTable::row(const std::string& name) const {
  for (const auto& r : rows) {
    if (r.name == name) return r;
  }
  throw std::out_of_range("no bound named " + name);
}

Monomial direct_grid_bound(int k) { return {k * k, 5 * k - 5, 3 * k - 3}; }

Monomial transferred_grid_bound(int k) {
  const Monomial tree{k * k, 3 * k - 3, k - 1};
  // N^{k-1} (M - N + 1)^{k-1} with N = mn and M - N + 1 = (m-1)(n-1) ~ mn
  const Monomial vertices{0, k - 1, k - 1};
  const Monomial cycles{0, k - 1, k - 1};
  return {tree.beta_exp + vertices.beta_exp + cycles.beta_exp, tree.n_exp + vertices.n_exp + cycles.n_exp,
          tree.m_exp + vertices.m_exp + cycles.m_exp};
}

BoundsTable compute_bounds(int m, int n, int k) {
  if (m < 1 || n < 1 || k < 1) throw std::invalid_argument("m, n, k must be positive");
  BoundsTable t;
  t.m = m;
  t.n = n;
  t.k = k;
  t.vertices = static_cast<long long>(m) * n;
  t.edges = static_cast<long long>(m) * (n - 1) + static_cast<long long>(n) * (m - 1);
  t.k_divides_m = m % k == 0;
  const double lm = std::log10(m), ln = std::log10(n), lN = std::log10(static_cast<double>(t.vertices));
  const double lcyc = std::log10(static_cast<double>(std::max<long long>(1, t.edges - t.vertices + 1)));
  const double km1 = k - 1;
  const auto add = [&](std::string name, std::string formula, std::string scope, double log10_value, int beta) {
    log10_value += 0.0;  // no -0 in the output
    t.rows.push_back({std::move(name), std::move(formula), std::move(scope), log10_value, std::pow(10.0, log10_value),
                      beta});
  };
  const bool pair = k == 2;
  const std::string pair_scope = k == 1 ? "k = 1 (trivial)" : pair ? "k = 2" : "stated for k = 2 only";
  add("partition_grid", "1/(beta^(k^2) n^(5k-5) m^(3k-3))", "k | m, partition level", -((5 * k - 5) * ln + (3 * k - 3) * lm),
      k * k);
  add("two_split", "1/N^2", pair_scope, k == 1 ? 0.0 : -2 * lN, 0);
  add("central_edge", m % 2 == 0 ? "1/(m n^3)" : "1/(4 m n^3)", k == 2 ? "k = 2, central edge" : pair_scope,
      k == 1 ? 0.0 : -(lm + 3 * ln + (m % 2 == 0 ? 0.0 : std::log10(4.0))), 0);
  const double tree = -((3 * k - 3) * ln + km1 * lm);
  add("tree_grid", "1/(beta^(k^2) n^(3k-3) m^(k-1))", "k | m, tree level", tree, k * k);
  add("forest_transfer", "alpha/(N^(k-1) (M-N+1)^(k-1)), alpha = tree_grid", "forest to partition transfer",
      tree - km1 * (lN + lcyc), k * k);
  return t;
}

void write_bounds(std::ostream& out, const BoundsTable& t) {
  out << "bound,formula,scope,beta_exponent,value_beta1,log10_value_beta1\n";
  for (const auto& r : t.rows) {
    out << r.name << ",\"" << r.formula << "\",\"" << r.scope << "\"," << r.beta_exp << ',' << fmt(r.value, 8)
        << ',' << fmt(r.log10_value, 8) << '\n';
  }
}

// walk bounds

std::pair<int, int> first_exit(int x0, int x1, int y0, int y1, int i, int j, RngStream& rng) {
  while (i >= x0 && i <= x1 && j >= y0 && j <= y1) {
    switch (rng.uniform_below(4)) {
      case 0: ++i; break;
      case 1: --i; break;
      case 2: ++j; break;
      default: --j; break;
    }
  }
  return {i, j};
}

namespace {

struct WalkAcc {
  std::array<std::uint64_t, 3> hits{};
  void merge(const WalkAcc& o) {
    for (std::size_t i = 0; i < hits.size(); ++i) hits[i] += o.hits[i];
  }
};

}  // namespace

std::vector<WalkEstimate> run_walk_bounds(const ExperimentConfig& c) {
  const int m = c.m, n = c.n, ell = c.ell;
  const int i0 = c.i0 > 0 ? c.i0 : (m + 1) / 2;
  const int j0 = c.j0 > 0 ? c.j0 : (n + 1) / 2;
  const auto acc = run_trials(c.trials, c.workers, WalkAcc{}, [&](WalkAcc& a, std::uint64_t trial) {
    const RngStream base(c.seed, trial);
    auto r0 = base.derive(0);
    if (first_exit(1, m, 1, n, i0, j0, r0).second > 0) ++a.hits[0];
    auto r1 = base.derive(1);
    if (first_exit(-ell, ell, 0, 2 * ell, 0, 0, r1).second == 2 * ell + 1) ++a.hits[1];
    auto r2 = base.derive(2);
    if (first_exit(0, m, 0, n, m / 2, 0, r2).second == n + 1) ++a.hits[2];
  });
  std::vector<WalkEstimate> rows(3);
  rows[0] = {"box_exit_not_below", m, n, i0, j0, 0, 0, 0.0, {}, static_cast<double>(j0) / (n + 1)};
  rows[1] = {"square_exit_top", 2 * ell + 1, 2 * ell + 1, 0, 0, 0, 0, 0.0, {}, -1.0};
  rows[2] = {"rectangle_exit_top", m + 1, n + 1, m / 2, 0, 0, 0, 0.0, {}, -1.0};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].successes = acc.hits[i];
    rows[i].trials = c.trials;
    rows[i].frequency = static_cast<double>(acc.hits[i]) / static_cast<double>(c.trials);
    rows[i].ci = wilson_interval(acc.hits[i], c.trials);
  }
  return rows;
}

void write_walk_csv(std::ostream& out, const std::vector<WalkEstimate>& rows) {
  out << "geometry,width,height,start_i,start_j,successes,trials,frequency,ci_lo,ci_hi,bound\n";
  for (const auto& r : rows) {
    out << r.geometry << ',' << r.width << ',' << r.height << ',' << r.start_i << ',' << r.start_j << ','
        << r.successes << ',' << r.trials << ',' << fmt(r.frequency, 8) << ',' << fmt(r.ci.lo, 8) << ','
        << fmt(r.ci.hi, 8) << ',';
    if (r.bound >= 0.0) out << fmt(r.bound, 8);
    out << '\n';
  }
}

// sample

double SampleRun::splittable_fraction() const {
  if (report.rounds_attempted == 0) return 0.0;
  const auto bad = report.rejected_not_splittable + report.rejected_not_balanced;
  return static_cast<double>(report.rounds_attempted - bad) / static_cast<double>(report.rounds_attempted);
}

namespace {

struct SampleAcc {
  std::shared_ptr<PerfectSampler> sampler;  // per worker, built on first use
  void merge(const SampleAcc&) {}
};

}  // namespace

SampleRun run_sample(const ExperimentConfig& c) {
  const auto g = build_grid(c.m, c.n);
  SampleRun run;
  run.samples.resize(c.trials);
  if (c.mode == "exact") {
    run_trials(c.trials, c.workers, SampleAcc{}, [&](SampleAcc& a, std::uint64_t i) {
      if (!a.sampler) a.sampler = std::make_shared<PerfectSampler>(g, c.k);
      RngStream rng(c.seed, i);
      run.samples[i] = a.sampler->sample(rng);
    });
  } else {
    ApproxSampler sampler(g, c.k, c.mixing_multiplier);
    RngStream rng(c.seed, 0);
    for (auto& s : run.samples) s = sampler.sample(rng);
  }
  run.report.seed = c.seed;
  for (const auto& s : run.samples) run.report.merge(s.report);
  run.report.seed = c.seed;
  return run;
}

void write_sample_stream(std::ostream& out, const ExperimentConfig& c, const SampleRun& run) {
  for (std::size_t i = 0; i < run.samples.size(); ++i) {
    const auto& s = run.samples[i];
    const nlohmann::json line = {{"index", i},
                                 {"m", c.m},
                                 {"n", c.n},
                                 {"k", c.k},
                                 {"seed", c.seed},
                                 {"classes", s.partition.classes},
                                 {"cut_edges", s.cut_edges},
                                 {"rounds", s.report.rounds_attempted}};
    out << line.dump() << '\n';
  }
  const auto& r = run.report;
  const nlohmann::json footer = {{"footer", true},
                                 {"mode", c.mode},
                                 {"samples", run.samples.size()},
                                 {"report",
                                  {{"seed", r.seed},
                                   {"rounds_attempted", r.rounds_attempted},
                                   {"accepted", r.accepted},
                                   {"trees_sampled", r.trees_sampled},
                                   {"steps_taken", r.steps_taken},
                                   {"rejected_not_splittable", r.rejected_not_splittable},
                                   {"rejected_final_coin", r.rejected_final_coin},
                                   {"rejected_not_balanced", r.rejected_not_balanced},
                                   {"unmixed", r.unmixed}}},
                                 {"splittable_fraction", run.splittable_fraction()}};
  out << footer.dump() << '\n';
}

// lattice

PlaneDrawing experiment_drawing(const ExperimentConfig& c) {
  return c.drawing.empty() ? vertical_strips(c.k) : load_drawing(c.drawing);
}

namespace {

struct CompatAcc {
  std::shared_ptr<CompatibilityOracle> oracle;  // per worker: its DP table is scratch
  std::uint64_t successes = 0;
  void merge(const CompatAcc& o) { successes += o.successes; }
};

}  // namespace

LatticeRun run_lattice(const ExperimentConfig& c) {
  const auto d = experiment_drawing(c);
  LatticeRun run{build_lattice_region(parse_lattice_kind(c.lattice), c.n, d, c.delta), {}};
  const DualTreeSampler sampler(run.region.omega, run.region.dual);
  const auto acc = run_trials(c.trials, c.workers, CompatAcc{}, [&](CompatAcc& a, std::uint64_t trial) {
    if (!a.oracle) a.oracle = std::make_shared<CompatibilityOracle>(run.region.omega.coords(), d, c.epsilon);
    RngStream rng(c.seed, trial);
    if (a.oracle->splits(sampler.sample(rng))) ++a.successes;
  });
  auto& e = run.estimate;
  e.successes = acc.successes;
  e.trials = c.trials;
  e.frequency = static_cast<double>(e.successes) / static_cast<double>(e.trials);
  e.ci = wilson_interval(e.successes, e.trials);
  return run;
}

void write_lattice_csv(std::ostream& out, const ExperimentConfig& c, const LatticeRun& run) {
  out << "lattice,n,k,epsilon,delta,vertices,boundary_distance,successes,trials,frequency,ci_lo,ci_hi\n";
  const auto& e = run.estimate;
  out << c.lattice << ',' << c.n << ',' << c.k << ',' << fmt(c.epsilon) << ',' << fmt(c.delta) << ','
      << run.region.omega.num_vertices() << ',' << fmt(run.region.boundary_distance, 8) << ',' << e.successes << ','
      << e.trials << ',' << fmt(e.frequency, 8) << ',' << fmt(e.ci.lo, 8) << ',' << fmt(e.ci.hi, 8) << '\n';
}

void write_metadata(const std::filesystem::path& out, const ExperimentConfig& c, double wall_seconds,
                    const nlohmann::json& extra) {
  nlohmann::json j = {{"config", to_json(c)},
                      {"library", "treesplit"},
                      {"library_version", kLibraryVersion},
                      {"wall_seconds", wall_seconds}};
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  auto path = out;
  path += ".meta.json";
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << j.dump(2) << '\n';
}

}  // namespace treesplit
