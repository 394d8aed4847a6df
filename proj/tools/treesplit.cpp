#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "treesplit/experiments.hpp"

using namespace treesplit;

namespace {

// Writes to --out (plus its metadata file) or to stdout.
void emit(const ExperimentConfig& c, double seconds, const std::function<void(std::ostream&)>& body,
          const nlohmann::json& extra = nlohmann::json::object()) {
  if (c.out.empty()) {
    body(std::cout);
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw std::runtime_error("cannot write " + c.out);
  body(f);
  write_metadata(c.out, c, seconds, extra);
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run(ExperimentConfig& c) {
  c.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const auto& s = c.subcommand;
  if (s == "heatmap") {
    const auto h = run_heatmap(c.m, c.n, c.trials, c.seed, c.workers);
    const double secs = since(t0);
    emit(c, secs, [&](std::ostream& o) { write_heatmap_csv(o, h); },
         {{"classes", h.classes}, {"splittable_trees", h.splittable}});
    if (!c.svg_out.empty()) {
      std::ofstream f(c.svg_out);
      if (!f) throw std::runtime_error("cannot write " + c.svg_out);
      write_heatmap_svg(f, h);
    }
    std::cerr << "splittable trees: " << h.splittable << " / " << h.trials << '\n';
  } else if (s == "histogram") {
    if (c.edge_col < 0) std::tie(c.edge_col, c.edge_row) = default_histogram_edge(c.m, c.n);
    const auto h = run_histogram(c.m, c.n, c.edge_col, c.edge_row, c.orientation, c.trials, c.seed, c.workers);
    emit(c, since(t0), [&](std::ostream& o) { write_histogram_csv(o, h, c.bin_size); });
  } else if (s == "bounds") {
    const auto t = compute_bounds(c.m, c.n, c.k);
    if (!t.k_divides_m) std::cerr << "warning: k = " << c.k << " does not divide m = " << c.m << '\n';
    emit(c, since(t0), [&](std::ostream& o) { write_bounds(o, t); });
  } else if (s == "sample") {
    const auto r = run_sample(c);
    emit(c, since(t0), [&](std::ostream& o) { write_sample_stream(o, c, r); });
  } else if (s == "walk-bounds") {
    const auto rows = run_walk_bounds(c);
    emit(c, since(t0), [&](std::ostream& o) { write_walk_csv(o, rows); });
  } else if (s == "lattice") {
    const auto r = run_lattice(c);
    emit(c, since(t0), [&](std::ostream& o) { write_lattice_csv(o, c, r); });
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"treesplit: balanced spanning-tree partitions of planar grids"};
  app.require_subcommand(1);

  ExperimentConfig c;
  c.workers = default_workers();
  const std::map<std::string, std::string> about{
      {"heatmap", "balanced split-edge counts for every vertical edge (CSV, optional SVG)"},
      {"histogram", "component-size distribution after removing one edge (CSV)"},
      {"bounds", "closed-form lower bounds for (m, n, k)"},
      {"sample", "balanced partitions as JSON lines with a report footer"},
      {"walk-bounds", "first-exit frequencies of simple random walks in boxes (CSV)"},
      {"lattice", "epsilon-compatibility frequency on a lattice clipped to a drawing (CSV)"},
  };
  for (const auto& [name, text] : about) {
    auto* sub = app.add_subcommand(name, text);
    sub->add_option("--m", c.m, "grid columns (walk-bounds: box width)")->capture_default_str();
    sub->add_option("--n", c.n, "grid rows (lattice: scale)")->capture_default_str();
    sub->add_option("--k", c.k, "number of parts")->capture_default_str();
    sub->add_option("--epsilon", c.epsilon, "compatibility tolerance")->capture_default_str();
    sub->add_option("--trials", c.trials, "trials (sample: number of partitions)")->capture_default_str();
    sub->add_option("--seed", c.seed)->capture_default_str();
    sub->add_option("--workers", c.workers, "threads (default TREESPLIT_WORKERS or 1)")->capture_default_str();
    sub->add_option("--out", c.out, "output file; a .meta.json is written next to it");
    sub->add_option("--svg-out", c.svg_out, "heatmap SVG");
    sub->add_option("--mode", c.mode, "sample mode: exact or updown")->capture_default_str();
    sub->add_option("--mixing-multiplier", c.mixing_multiplier)->capture_default_str();
    sub->add_option("--bin-size", c.bin_size)->capture_default_str();
    sub->add_option("--edge-col", c.edge_col, "histogram edge column");
    sub->add_option("--edge-row", c.edge_row, "histogram edge row (lower or left endpoint)");
    sub->add_option("--orientation", c.orientation, "histogram edge orientation: v or h")->capture_default_str();
    sub->add_option("--i0", c.i0, "walk start column in the box");
    sub->add_option("--j0", c.j0, "walk start row in the box");
    sub->add_option("--ell", c.ell, "half width of the square box")->capture_default_str();
    sub->add_option("--lattice", c.lattice, "square, triangular or hexagonal")->capture_default_str();
    sub->add_option("--delta", c.delta, "allowed boundary distance")->capture_default_str();
    sub->add_option("--drawing", c.drawing, "drawing JSON (default: k vertical strips)");
    sub->callback([&c, sub] { c.subcommand = sub->get_name(); });
  }

  CLI11_PARSE(app, argc, argv);
  try {
    return run(c);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
