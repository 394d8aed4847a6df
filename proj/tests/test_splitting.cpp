#include <limits>
#include <optional>

#include "doctest.h"
#include "support.hpp"
#include "treesplit/planar.hpp"
#include "treesplit/splitting.hpp"
#include "treesplit/walks.hpp"

using namespace treesplit;
using namespace testing_support;

namespace {

struct BruteForce {
  std::vector<std::vector<EdgeId>> balanced;
  std::optional<std::vector<EdgeId>> first_within;  // first subset inside the epsilon window
  std::vector<EdgeId> min_cut;
  int min_imbalance = std::numeric_limits<int>::max();
};

BruteForce brute_force(const Multigraph& t, int k, int lo, int hi) {
  BruteForce b;
  const int n = t.num_vertices();
  for_each_subset(t.num_edges(), k - 1, [&](const std::vector<int>& idx) {
    const std::vector<EdgeId> cut(idx.begin(), idx.end());
    const auto sizes = sizes_without(t, cut);
    const int imb = sizes.back() - sizes.front();
    if (imb == 0 && n % k == 0) b.balanced.push_back(cut);
    if (!b.first_within && sizes.front() >= lo && sizes.back() <= hi) b.first_within = cut;
    if (imb < b.min_imbalance) {
      b.min_imbalance = imb;
      b.min_cut = cut;
    }
  });
  return b;
}

void check_consistent(const Multigraph& g, const SpanningTree& t, const SplitResult& r, int k) {
  CHECK(r.cut_edges.size() == static_cast<std::size_t>(k - 1));
  CHECK(std::is_sorted(r.cut_edges.begin(), r.cut_edges.end()));
  CHECK(component_sizes(g, t, r.cut_edges) == r.component_sizes);
  std::vector<EdgeId> rest;
  for (const EdgeId e : t.edges()) {
    if (!std::binary_search(r.cut_edges.begin(), r.cut_edges.end(), e)) rest.push_back(e);
  }
  int count = 0;
  const auto label = component_labels(g, rest, &count);
  std::vector<int> sizes(static_cast<std::size_t>(count), 0);
  for (const int l : label) ++sizes[l];
  std::sort(sizes.begin(), sizes.end());
  CHECK(r.component_sizes == sizes);
  CHECK(r.imbalance == r.component_sizes.back() - r.component_sizes.front());
}

}  // namespace

TEST_CASE("component_sizes examples") {
  const auto p4 = path_graph(4);
  const auto t4 = whole_tree(p4);
  CHECK(component_sizes(p4, t4, std::vector<EdgeId>{1}) == std::vector<int>{2, 2});
  CHECK(component_sizes(p4, t4, std::vector<EdgeId>{}) == std::vector<int>{4});
  const auto p6 = path_graph(6);
  CHECK(component_sizes(p6, whole_tree(p6), std::vector<EdgeId>{1, 3}) == std::vector<int>{2, 2, 2});

  const auto c = cycle_graph(4);
  const SpanningTree t(c, {0, 1, 2});
  CHECK_THROWS_AS(component_sizes(c, t, std::vector<EdgeId>{3}), std::invalid_argument);
}

TEST_CASE("subtree sizes") {
  const auto p = path_graph(5);
  CHECK(subtree_sizes(whole_tree(p, 0)) == std::vector<int>{5, 4, 3, 2, 1});
  CHECK(subtree_sizes(whole_tree(p, 2)) == std::vector<int>{1, 2, 5, 2, 1});
}

TEST_CASE("balanced split examples") {
  const auto p4 = path_graph(4);
  const auto r = find_balanced_split(whole_tree(p4), 2);
  REQUIRE(r);
  CHECK(r->cut_edges == std::vector<EdgeId>{1});
  CHECK(r->component_sizes == std::vector<int>{2, 2});
  CHECK(r->imbalance == 0);

  CHECK_FALSE(find_balanced_split(whole_tree(star_graph(3)), 2));
  CHECK_THROWS_AS(find_balanced_split(whole_tree(path_graph(5)), 2), std::invalid_argument);
  CHECK(find_balanced_split(whole_tree(path_graph(5)), 1)->cut_edges.empty());
  CHECK(find_balanced_split(whole_tree(path_graph(5)), 5)->cut_edges.size() == 4);
}

TEST_CASE("approx split examples") {
  const auto p5 = path_graph(5);
  const auto t5 = whole_tree(p5);
  const auto r = find_approx_split(t5, 2, 0.25);
  REQUIRE(r);
  CHECK(r->component_sizes == std::vector<int>{2, 3});
  CHECK_FALSE(find_approx_split(t5, 2, 0.1));
  CHECK(approx_size_window(5, 2, 0.25) == std::pair{2, 3});
  CHECK(approx_size_window(5, 2, 0.1) == std::pair{3, 2});
  // exact boundary: (1 +- 0.5) * 4 / 2 = [1, 3]
  CHECK(approx_size_window(4, 2, 0.5) == std::pair{1, 3});
  CHECK_THROWS_AS(find_approx_split(t5, 2, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(find_approx_split(t5, 0, 0.1), std::invalid_argument);
}

TEST_CASE("min-imbalance examples") {
  CHECK(find_min_imbalance_split(whole_tree(path_graph(5)), 2).imbalance == 1);
  CHECK(find_min_imbalance_split(whole_tree(star_graph(3)), 2).imbalance == 2);
  CHECK(find_min_imbalance_split(whole_tree(path_graph(7)), 3).component_sizes == std::vector<int>{2, 2, 3});
  CHECK(find_min_imbalance_split(whole_tree(path_graph(7)), 1).cut_edges.empty());
  // ties go to the lexicographically smallest cut: path 0-1-2-3-4 can cut edge 1 or 2
  CHECK(find_min_imbalance_split(whole_tree(path_graph(5)), 2).cut_edges == std::vector<EdgeId>{1});
}

TEST_CASE("splitters agree with brute force on random trees") {
  std::mt19937_64 gen(20240601);
  int trees = 0;
  for (int n = 2; n <= 14; ++n) {
    for (int rep = 0; rep < 40; ++rep, ++trees) {
      const auto g = random_tree(n, gen);
      const auto root = static_cast<VertexId>(gen() % static_cast<std::uint64_t>(n));
      const auto t = whole_tree(g, root);
      for (const int k : {2, 3}) {
        if (k > n) continue;
        const double eps = std::uniform_real_distribution<double>(0.0, 0.6)(gen);
        const auto [lo, hi] = approx_size_window(n, k, eps);
        const auto b = brute_force(g, k, lo, hi);

        CHECK(b.balanced.size() <= 1);  // uniqueness
        if (n % k == 0) {
          const auto r = find_balanced_split(t, k);
          CHECK(r.has_value() == !b.balanced.empty());
          if (r) {
            check_consistent(g, t, *r, k);
            CHECK(r->cut_edges == b.balanced.front());
          }
        }

        const auto a = find_approx_split(t, k, eps);
        CHECK(a.has_value() == b.first_within.has_value());
        if (a) {
          check_consistent(g, t, *a, k);
          CHECK(a->component_sizes.front() >= lo);
          CHECK(a->component_sizes.back() <= hi);
        }

        const auto m = find_min_imbalance_split(t, k);
        check_consistent(g, t, m, k);
        CHECK(m.imbalance == b.min_imbalance);
        CHECK(m.cut_edges == b.min_cut);
        if (n % k == 0) CHECK((m.imbalance == 0) == !b.balanced.empty());
      }
    }
  }
  CHECK(trees >= 500);
}

TEST_CASE("approx splittability is monotone in epsilon") {
  std::mt19937_64 gen(5);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 6 + static_cast<int>(gen() % 20);
    const auto t = whole_tree(random_tree(n, gen));
    for (const int k : {2, 3, 4}) {
      bool seen = false;
      for (double eps = 0.9; eps >= 0.0; eps -= 0.05) {
        const bool ok = find_approx_split(t, k, eps).has_value();
        if (!ok) seen = true;
        if (seen) CHECK_FALSE(ok);
      }
    }
  }
}

TEST_CASE("balanced splits of 4x4 grid trees match single-edge brute force") {
  const auto g = build_grid(4, 4);
  const DualTreeSampler sampler(g);
  RngStream rng(99, 0);
  for (int i = 0; i < 10000; ++i) {
    const auto t = sampler.sample(rng);
    std::optional<EdgeId> expected;
    for (const EdgeId e : t.edges()) {
      std::vector<EdgeId> rest;
      for (const EdgeId x : t.edges()) {
        if (x != e) rest.push_back(x);
      }
      int count = 0;
      const auto label = component_labels(g.graph(), rest, &count);
      if (std::count(label.begin(), label.end(), 0) == 8) expected = e;
    }
    const auto r = find_balanced_split(t, 2);
    CHECK(r.has_value() == expected.has_value());
    if (r && expected) CHECK(r->cut_edges.front() == *expected);
  }
}

TEST_CASE("splitting a large tree") {
  const auto g = build_grid(30, 30);
  RngStream rng(3, 3);
  const auto t = wilson_on_dual(g, {}, rng);
  for (const int k : {2, 3, 5}) {
    const auto m = find_min_imbalance_split(t, k);
    check_consistent(g.graph(), t, m, k);
    const auto a = find_approx_split(t, k, 0.5);
    if (a) check_consistent(g.graph(), t, *a, k);
    const auto again = find_approx_split(t, k, 1.0 * m.imbalance / (900.0 / k) + 1e-9);
    CHECK(again.has_value());
  }
}
