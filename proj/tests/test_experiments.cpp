#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "treesplit/experiments.hpp"
#include "treesplit/io.hpp"
#include "treesplit/planar.hpp"
#include "treesplit/splitting.hpp"

using namespace treesplit;
using namespace testing_support;

namespace {

// P(edge in T and the side holding `a` has s vertices), over all spanning trees.
std::vector<double> exact_side_law(int m, int n, VertexId a, EdgeId e) {
  const auto g = build_grid(m, n);
  const auto trees = enumerate_spanning_trees(g.graph());
  std::vector<double> law(static_cast<std::size_t>(m * n) + 1, 0.0);
  for (const auto& edges : trees) {
    if (!std::binary_search(edges.begin(), edges.end(), e)) continue;
    std::vector<EdgeId> rest;
    for (const EdgeId f : edges) {
      if (f != e) rest.push_back(f);
    }
    const auto label = component_labels(g.graph(), rest);
    const auto s = std::count(label.begin(), label.end(), label[static_cast<std::size_t>(a)]);
    law[static_cast<std::size_t>(s)] += 1.0 / static_cast<double>(trees.size());
  }
  return law;
}

// Probability that the walk from (i,j) leaves [1..m]x[1..n] anywhere but the
// bottom, by Gauss-Seidel on the discrete Dirichlet problem.
double harmonic_not_below(int m, int n, int i0, int j0) {
  std::vector<double> h(static_cast<std::size_t>((m + 2) * (n + 2)), 1.0);
  const auto at = [&](int i, int j) -> double& { return h[static_cast<std::size_t>(j * (m + 2) + i)]; };
  for (int i = 0; i < m + 2; ++i) at(i, 0) = 0.0;
  for (int it = 0; it < 100000; ++it) {
    double change = 0;
    for (int j = 1; j <= n; ++j) {
      for (int i = 1; i <= m; ++i) {
        const double v = 0.25 * (at(i - 1, j) + at(i + 1, j) + at(i, j - 1) + at(i, j + 1));
        change = std::max(change, std::abs(v - at(i, j)));
        at(i, j) = v;
      }
    }
    if (change < 1e-13) break;
  }
  return at(i0, j0);
}

std::string heatmap_csv(int m, int n, std::uint64_t trials, std::uint64_t seed, int workers) {
  std::ostringstream s;
  write_heatmap_csv(s, run_heatmap(m, n, trials, seed, workers));
  return s.str();
}

ExperimentConfig config(const std::string& sub) {
  ExperimentConfig c;
  c.subcommand = sub;
  return c;
}

}  // namespace

TEST_CASE("vertical edge classes") {
  std::set<std::pair<int, int>> classes;
  for (int row = 0; row < 9; ++row) {
    for (int col = 0; col < 10; ++col) {
      const auto c = vertical_edge_class(10, 10, col, row);
      CHECK(c == vertical_edge_class(10, 10, 9 - col, row));
      CHECK(c == vertical_edge_class(10, 10, col, 8 - row));
      CHECK(c == vertical_edge_class(10, 10, c.first, c.second));
      classes.insert(c);
    }
  }
  CHECK(classes.size() == 25);
}

TEST_CASE("heatmap on 2x2 is symmetric") {
  const auto h = run_heatmap(2, 2, 2000, 7, 1);
  REQUIRE(h.edges.size() == 2);
  CHECK(h.classes == 1);
  CHECK(h.edges[0].successes == h.edges[1].successes);
  // 4 spanning trees, each contains exactly one vertical edge half the time
  CHECK(h.edges[0].successes > 0);
}

TEST_CASE("heatmap is invariant under the grid reflections") {
  const auto h = run_heatmap(6, 5, 3000, 3, 1);
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 6; ++col) {
      CHECK(h.at(col, row).successes == h.at(5 - col, row).successes);
      CHECK(h.at(col, row).successes == h.at(col, 3 - row).successes);
      CHECK(h.at(col, row).ci.lo <= h.at(col, row).ci.hi);
    }
  }
}

TEST_CASE("heatmap counts match exact enumeration on 3x4") {
  const GridIndex gi{3, 4};
  const std::uint64_t trials = 200000;
  const auto h = run_heatmap(3, 4, trials, 11, 1);
  for (int row = 0; row < 3; ++row) {
    for (int col = 0; col < 3; ++col) {
      const auto law = exact_side_law(3, 4, gi.vertex(col, row), gi.vertical_edge(col, row));
      const double p = law[6];
      const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(trials));
      CHECK(std::abs(static_cast<double>(h.at(col, row).successes) / trials - p) < 5 * sigma + 1e-9);
    }
  }
  // 2-splittable trees: some edge leaves 6 + 6
  const auto g = build_grid(3, 4);
  double splittable = 0;
  const auto trees = enumerate_spanning_trees(g.graph());
  for (const auto& edges : trees) {
    if (find_balanced_split(SpanningTree(g.graph(), edges), 2)) splittable += 1;
  }
  const double p = splittable / static_cast<double>(trees.size());
  CHECK(std::abs(static_cast<double>(h.splittable) / trials - p) < 5 * std::sqrt(p * (1 - p) / trials));
}

TEST_CASE("heatmap output is reproducible and worker independent") {
  const auto a = heatmap_csv(5, 6, 4000, 5, 1);
  CHECK(a == heatmap_csv(5, 6, 4000, 5, 1));
  CHECK(a == heatmap_csv(5, 6, 4000, 5, 3));
  CHECK(a != heatmap_csv(5, 6, 4000, 6, 1));
  CHECK(a.rfind("col,row,orientation,successes,trials,ci_lo,ci_hi\n", 0) == 0);
}

TEST_CASE("heatmap svg has one cell per vertical edge") {
  const auto h = run_heatmap(4, 4, 500, 1, 1);
  std::ostringstream s;
  write_heatmap_svg(s, h);
  const auto svg = s.str();
  std::size_t cells = 0;
  for (auto p = svg.find("<rect"); p != std::string::npos; p = svg.find("<rect", p + 1)) ++cells;
  CHECK(cells == 12);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("histogram matches exact enumeration on 3x4") {
  const GridIndex gi{3, 4};
  const auto [col, row] = default_histogram_edge(3, 4);
  CHECK(col == 1);
  CHECK(row == 1);
  const std::uint64_t trials = 100000;
  const auto h = run_histogram(3, 4, col, row, 'v', trials, 2, 1);
  const auto law = exact_side_law(3, 4, gi.vertex(col, row), gi.vertical_edge(col, row));
  std::vector<double> emp(law.size());
  for (std::size_t s = 0; s < law.size(); ++s) emp[s] = static_cast<double>(h.counts[s]) / trials;
  CHECK(total_variation(emp, law) < 0.01);
  const auto mass = std::accumulate(h.counts.begin(), h.counts.end(), std::uint64_t{0});
  CHECK(mass < trials);
  CHECK(h.counts[0] == 0);
  CHECK(h.counts[12] == 0);
}

TEST_CASE("histogram of a horizontal edge") {
  const GridIndex gi{4, 3};
  const auto h = run_histogram(4, 3, 1, 1, 'h', 50000, 9, 2);
  const auto law = exact_side_law(4, 3, gi.vertex(1, 1), gi.horizontal_edge(1, 1));
  std::vector<double> emp(law.size());
  for (std::size_t s = 0; s < law.size(); ++s) emp[s] = static_cast<double>(h.counts[s]) / 50000;
  CHECK(total_variation(emp, law) < 0.015);
}

TEST_CASE("histogram of a middle-row edge is symmetric") {
  const auto h = run_histogram(4, 4, 1, 1, 'v', 100000, 4, 1);
  const auto law = exact_side_law(4, 4, 5, GridIndex{4, 4}.vertical_edge(1, 1));
  for (int s = 1; s < 16; ++s) CHECK(law[s] == doctest::Approx(law[16 - s]).epsilon(1e-12));
  double tv = 0;
  for (int s = 1; s < 16; ++s) tv += std::abs(static_cast<double>(h.counts[s]) - h.counts[16 - s]) / 100000.0;
  CHECK(tv / 2 < 0.01);
}

TEST_CASE("histogram binning") {
  HistogramResult h;
  h.counts.assign(101, 0);
  for (int s = 1; s < 100; ++s) h.counts[s] = static_cast<std::uint64_t>(s);
  for (const int b : {1, 2, 7, 25, 101}) {
    const auto bins = bin_histogram(h, b);
    REQUIRE(!bins.empty());
    CHECK(bins.front().lo == 1);
    CHECK(bins.back().hi == 99);
    std::uint64_t total = 0;
    bool centred = false;
    for (std::size_t i = 0; i < bins.size(); ++i) {
      CHECK(bins[i].lo <= bins[i].hi);
      CHECK(bins[i].hi - bins[i].lo + 1 <= b);
      if (i > 0) CHECK(bins[i].lo == bins[i - 1].hi + 1);
      total += bins[i].count;
      if (bins[i].lo <= 50 && 50 <= bins[i].hi) {
        centred = true;
        CHECK(bins[i].lo == std::max(1, 50 - (b - 1) / 2));
      }
    }
    CHECK(centred);
    CHECK(total == 99 * 100 / 2);
  }
  const auto bins = bin_histogram(h, 25);
  REQUIRE(bins.size() == 5);
  CHECK(bins[2].lo == 38);
  CHECK(bins[2].hi == 62);
  CHECK_THROWS_AS(bin_histogram(h, 0), std::invalid_argument);

  std::ostringstream s;
  h.trials = 10;
  write_histogram_csv(s, h, 50);
  CHECK(s.str().rfind("size_lo,size_hi,count,trials\n", 0) == 0);
}

TEST_CASE("bounds examples") {
  const auto t = compute_bounds(10, 10, 2);
  CHECK(t.row("two_split").value == doctest::Approx(1e-4));
  CHECK(t.row("central_edge").value == doctest::Approx(1e-4));
  CHECK(t.row("partition_grid").value == doctest::Approx(1e-8));
  CHECK(t.row("partition_grid").beta_exp == 4);
  CHECK(t.row("tree_grid").value == doctest::Approx(1e-4));
  // 1e-4 / (100 * 81)
  CHECK(t.row("forest_transfer").value == doctest::Approx(1e-4 / 8100.0));
  CHECK(compute_bounds(9, 10, 2).row("central_edge").value == doctest::Approx(1.0 / (4 * 9 * 1000.0)));
  CHECK(t.k_divides_m);
  CHECK_FALSE(compute_bounds(10, 10, 3).k_divides_m);

  for (const int m : {1, 4, 7}) {
    for (const auto& r : compute_bounds(m, 5, 1).rows) {
      CHECK(r.value == 1.0);
      CHECK(r.log10_value == 0.0);
    }
  }
  for (const auto& r : compute_bounds(50, 50, 10).rows) {
    CHECK(r.value > 0.0);
    CHECK(std::isfinite(r.log10_value));
  }
  CHECK(compute_bounds(1000, 1000, 30).row("partition_grid").log10_value == doctest::Approx(-(145 + 87) * 3.0));
  CHECK_THROWS_AS(compute_bounds(0, 3, 2), std::invalid_argument);
}

TEST_CASE("transferring the tree bound gives the partition bound exponents") {
  for (int k = 1; k <= 12; ++k) {
    CHECK(transferred_grid_bound(k) == direct_grid_bound(k));
    CHECK(direct_grid_bound(k).n_exp == 5 * k - 5);
    CHECK(direct_grid_bound(k).m_exp == 3 * k - 3);
  }
  // numerically, with M - N + 1 = (m-1)(n-1) in place of mn
  for (const int k : {2, 3, 5}) {
    const auto t = compute_bounds(20, 30, k);
    const double correction = (k - 1) * std::log10(20.0 * 30.0 / (19.0 * 29.0));
    CHECK(t.row("forest_transfer").log10_value == doctest::Approx(t.row("partition_grid").log10_value + correction));
  }
}

TEST_CASE("first exit leaves the box by one step") {
  RngStream rng(1, 0);
  for (int t = 0; t < 1000; ++t) {
    const auto [i, j] = first_exit(1, 4, 1, 3, 2, 2, rng);
    const bool out_x = i == 0 || i == 5;
    const bool out_y = j == 0 || j == 4;
    CHECK(out_x != out_y);
    CHECK((out_x ? (j >= 1 && j <= 3) : (i >= 1 && i <= 4)));
  }
  CHECK(first_exit(0, 0, 0, 0, 5, 5, rng) == std::pair{5, 5});
}

TEST_CASE("walk bounds match the discrete harmonic function") {
  auto c = config("walk-bounds");
  c.m = 8;
  c.n = 7;
  c.i0 = 4;
  c.j0 = 4;
  c.trials = 100000;
  const auto rows = run_walk_bounds(c);
  REQUIRE(rows.size() == 3);
  const auto& box = rows[0];
  const double exact = harmonic_not_below(8, 7, 4, 4);
  CHECK(exact >= 4.0 / 8.0);
  CHECK(box.bound == doctest::Approx(0.5));
  CHECK(box.ci.lo <= exact);
  CHECK(exact <= box.ci.hi);
  const double sigma = std::sqrt(0.25 / 100000);
  CHECK(box.frequency >= 0.5 - 3 * sigma);
  CHECK(rows[1].bound < 0);
  CHECK(rows[1].frequency > 0);
  CHECK(rows[2].frequency > 0);

  c.j0 = 7;
  c.trials = 20000;
  const auto top = run_walk_bounds(c);
  CHECK(top[0].frequency >= 7.0 / 8.0 - 3 * std::sqrt(7.0 / 64 / 20000));
  CHECK(std::abs(top[0].frequency - harmonic_not_below(8, 7, 4, 7)) < 4 * std::sqrt(0.25 / 20000));
}

TEST_CASE("walk bounds are worker independent") {
  auto c = config("walk-bounds");
  c.trials = 5000;
  std::ostringstream a, b;
  write_walk_csv(a, run_walk_bounds(c));
  c.workers = 4;
  write_walk_csv(b, run_walk_bounds(c));
  CHECK(a.str() == b.str());
}

TEST_CASE("exact sample stream") {
  auto c = config("sample");
  c.m = 3;
  c.n = 4;
  c.trials = 200;
  c.seed = 42;
  const auto run = run_sample(c);
  REQUIRE(run.samples.size() == 200);
  for (const auto& s : run.samples) {
    CHECK(s.partition.is_balanced());
    CHECK(s.cut_edges.size() == 1);
  }
  CHECK(run.report.accepted == 200);
  CHECK(run.splittable_fraction() >= 1.0 / 144);

  std::ostringstream a, b, w;
  write_sample_stream(a, c, run);
  write_sample_stream(b, c, run_sample(c));
  CHECK(a.str() == b.str());
  c.workers = 3;
  write_sample_stream(w, c, run_sample(c));
  CHECK(w.str() == a.str());

  std::istringstream lines(a.str());
  std::string line;
  int count = 0;
  nlohmann::json last;
  while (std::getline(lines, line)) {
    last = nlohmann::json::parse(line);
    ++count;
  }
  CHECK(count == 201);
  CHECK(last.at("footer") == true);
  CHECK(last.at("splittable_fraction").get<double>() == doctest::Approx(run.splittable_fraction()));
}

TEST_CASE("updown sample stream") {
  auto c = config("sample");
  c.m = 3;
  c.n = 4;
  c.mode = "updown";
  c.mixing_multiplier = 1;
  c.trials = 20;
  const auto run = run_sample(c);
  for (const auto& s : run.samples) {
    CHECK(s.partition.is_balanced());
    CHECK(s.cut_edges.empty());
  }
  CHECK(run.report.steps_taken > 0);
}

TEST_CASE("lattice run") {
  auto c = config("lattice");
  c.n = 10;
  c.epsilon = 1.5;
  c.trials = 50;
  const auto all = run_lattice(c);
  CHECK(all.estimate.successes == 50);
  CHECK(all.region.omega.num_vertices() == 100);

  c.epsilon = 0.1;
  c.trials = 3000;
  const auto a = run_lattice(c);
  c.workers = 3;
  const auto b = run_lattice(c);
  CHECK(a.estimate.successes == b.estimate.successes);
  CHECK(a.estimate.frequency > 0.0);
  CHECK(a.estimate.frequency < 1.0);

  std::ostringstream s;
  write_lattice_csv(s, c, a);
  CHECK(s.str().find("square,10,2,") != std::string::npos);
}

TEST_CASE("config validation") {
  auto c = config("heatmap");
  CHECK_NOTHROW(c.validate());
  c.k = 3;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = config("heatmap");
  c.trials = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = config("heatmap");
  c.workers = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = config("sample");
  c.mode = "gibbs";
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = config("sample");
  c.m = 3;
  c.n = 3;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = config("histogram");
  c.edge_col = 10;
  c.edge_row = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.edge_col = 9;
  CHECK_NOTHROW(c.validate());
  c.orientation = 'h';
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = config("walk-bounds");
  c.j0 = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = config("lattice");
  c.lattice = "kagome";
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK_THROWS_AS(config("plot").validate(), std::invalid_argument);
}

TEST_CASE("run metadata echoes the config") {
  auto c = config("bounds");
  c.m = 12;
  c.seed = 99;
  const auto dir = std::filesystem::temp_directory_path() / "treesplit_meta_test";
  std::filesystem::create_directories(dir);
  const auto out = dir / "bounds.csv";
  write_metadata(out, c, 0.5, {{"classes", 3}});
  std::ifstream f(dir / "bounds.csv.meta.json");
  REQUIRE(f);
  const auto j = nlohmann::json::parse(f);
  CHECK(j.at("config") == to_json(c));
  CHECK(j.at("config").at("m") == 12);
  CHECK(j.at("library_version") == kLibraryVersion);
  CHECK(j.at("classes") == 3);
  std::filesystem::remove_all(dir);
}

TEST_CASE("graph json round trip") {
  const auto g = build_grid(3, 4);
  const auto j = to_json(g);
  CHECK(j.at("vertices").size() == 12);
  CHECK(j.at("edges").size() == 17);
  const auto back = embedding_from_json(j);
  CHECK(back.num_faces() == g.num_faces());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    CHECK(back.graph().edge(e).u == g.graph().edge(e).u);
    CHECK(back.graph().edge(e).v == g.graph().edge(e).v);
  }
  CHECK(count_spanning_trees(back.graph()) == count_spanning_trees(g.graph()));

  auto shuffled = j;
  std::reverse(shuffled["vertices"].begin(), shuffled["vertices"].end());
  std::reverse(shuffled["edges"].begin(), shuffled["edges"].end());
  CHECK(to_json(embedding_from_json(shuffled)) == j);

  auto dup = j;
  dup["vertices"][1]["id"] = 0;
  CHECK_THROWS_AS(embedding_from_json(dup), std::invalid_argument);
  auto far = j;
  far["edges"][0]["v"] = 12;
  CHECK_THROWS_AS(embedding_from_json(far), std::invalid_argument);
  CHECK_THROWS_AS(embedding_from_json(nlohmann::json::object()), std::invalid_argument);

  const auto path = std::filesystem::temp_directory_path() / "treesplit_graph_test.json";
  save_embedding(g, path);
  CHECK(to_json(load_embedding(path)) == j);
  std::filesystem::remove(path);
}
