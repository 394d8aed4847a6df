#include <set>

#include "doctest.h"
#include "support.hpp"
#include "treesplit/partition.hpp"
#include "treesplit/planar.hpp"
#include "treesplit/spanning_tree.hpp"

using namespace treesplit;
using namespace testing_support;

namespace {

int euler(const PlanarEmbedding& g) { return g.num_vertices() - g.num_edges() + g.num_faces(); }

Partition classes_of(const Multigraph& g, std::vector<std::vector<VertexId>> classes) {
  Partition p;
  p.label.assign(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (const VertexId v : classes[i]) p.label[v] = static_cast<int>(i);
  }
  p.classes = std::move(classes);
  return p;
}

}  // namespace

TEST_CASE("grid sizes") {
  auto g = build_grid(2, 2);
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 4);
  CHECK(g.num_faces() == 2);

  g = build_grid(1, 5);
  CHECK(g.num_vertices() == 5);
  CHECK(g.num_edges() == 4);
  CHECK(g.num_faces() == 1);

  g = build_grid(10, 10);
  CHECK(g.num_vertices() == 100);
  CHECK(g.num_edges() == 180);
  CHECK(g.num_faces() == 82);

  CHECK_THROWS_AS(build_grid(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_grid(3, 0), std::invalid_argument);
}

TEST_CASE("grid embeddings satisfy Euler and edge-face incidence") {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      const auto g = build_grid(m, n);
      CHECK(euler(g) == 2);
      CHECK(g.num_edges() == m * (n - 1) + n * (m - 1));
      // every dart lies on exactly one face, so each edge is seen twice
      std::vector<int> seen(static_cast<std::size_t>(g.num_edges()), 0);
      for (int f = 0; f < g.num_faces(); ++f) {
        for (const Dart d : g.face(f)) ++seen[dart_edge(d)];
      }
      for (const int s : seen) CHECK(s == 2);
    }
  }
}

TEST_CASE("grid index layout") {
  const GridIndex gi{4, 3};
  const auto g = build_grid(4, 3);
  for (int row = 0; row < 3; ++row) {
    for (int col = 0; col + 1 < 4; ++col) {
      const Edge& e = g.graph().edge(gi.horizontal_edge(col, row));
      CHECK(e.u == gi.vertex(col, row));
      CHECK(e.v == gi.vertex(col + 1, row));
      CHECK_FALSE(gi.is_vertical(gi.horizontal_edge(col, row)));
    }
  }
  for (int row = 0; row + 1 < 3; ++row) {
    for (int col = 0; col < 4; ++col) {
      const Edge& e = g.graph().edge(gi.vertical_edge(col, row));
      CHECK(e.u == gi.vertex(col, row));
      CHECK(e.v == gi.vertex(col, row + 1));
      CHECK(gi.is_vertical(gi.vertical_edge(col, row)));
    }
  }
  CHECK(g.point(gi.vertex(3, 2)) == Point{3, 2});
}

TEST_CASE("compute_dual examples") {
  const auto d2 = compute_dual(build_grid(2, 2));
  CHECK(d2.graph.num_vertices() == 2);
  CHECK(d2.graph.num_edges() == 4);
  for (const Edge& e : d2.graph.edges()) CHECK(e.u != e.v);

  const auto d3 = compute_dual(build_grid(3, 3));
  CHECK(d3.graph.num_vertices() == 5);
  CHECK(d3.graph.num_edges() == 12);
  CHECK(d3.root == d3.face_vertex[build_grid(3, 3).outer_face()]);

  CHECK_THROWS_AS(compute_dual(build_grid(1, 5)), DualityError);
}

TEST_CASE("dual edges cross their primal edges") {
  const auto g = build_grid(4, 3);
  const auto d = compute_dual(g);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [f1, f2] = g.edge_faces(e);
    const Edge& de = d.graph.edge(e);
    CHECK(std::set<VertexId>{de.u, de.v} == std::set<VertexId>{d.face_vertex[f1], d.face_vertex[f2]});
  }
}

TEST_CASE("wired dual flags the boundary into the root") {
  const auto g = build_grid(3, 3);
  const auto d = compute_dual(g, true);
  CHECK(d.wired_faces == std::vector<int>{g.outer_face()});
  CHECK(d.graph.num_vertices() == 5);
  // wiring a face that touches the outer face turns shared edges into loops
  const int inner = g.outer_face() == 0 ? 1 : 0;
  CHECK_THROWS_AS(compute_dual(g, true, std::vector<int>{inner}), DualityError);

  const auto g4 = build_grid(4, 4);
  int centre = -1;
  for (int f = 0; f < g4.num_faces(); ++f) {
    if (f != g4.outer_face() && g4.face_centroid(f) == Point{1.5, 1.5}) centre = f;
  }
  REQUIRE(centre >= 0);
  const auto w = compute_dual(g4, true, std::vector<int>{centre});
  CHECK(w.graph.num_vertices() == 9);
  CHECK(w.face_vertex[centre] == w.root);
  CHECK(w.wired_faces.size() == 2);
}

TEST_CASE("dual_tree on 2x2") {
  const auto g = build_grid(2, 2);
  const auto d = compute_dual(g);
  const SpanningTree t(g.graph(), {0, 1, 2});
  const auto ts = dual_tree(g, d, t);
  CHECK(ts.edges() == std::vector<EdgeId>{3});
  CHECK(primal_tree(g, d, ts) == t);
}

TEST_CASE("duality is a bijection on enumerated trees") {
  for (const auto [m, n] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{3, 2}, std::pair{2, 4}}) {
    const auto g = build_grid(m, n);
    const auto d = compute_dual(g);
    const auto trees = enumerate_spanning_trees(g.graph());
    const auto dual_trees = enumerate_spanning_trees(d.graph);
    CHECK(trees.size() == dual_trees.size());
    std::set<std::vector<EdgeId>> images;
    for (const auto& edges : trees) {
      const SpanningTree t(g.graph(), edges);
      const auto ts = dual_tree(g, d, t);
      CHECK(primal_tree(g, d, ts) == t);
      images.insert(ts.edges());
    }
    CHECK(images == std::set<std::vector<EdgeId>>(dual_trees.begin(), dual_trees.end()));
    CHECK(count_spanning_trees(g.graph()) == count_spanning_trees(d.graph));
  }
}

TEST_CASE("spanning tree validation") {
  const auto c = cycle_graph(4);
  CHECK_THROWS_AS(SpanningTree(c, {0, 1}), NotATreeError);
  CHECK_THROWS_AS(SpanningTree(c, {0, 1, 2, 3}), NotATreeError);
  CHECK_THROWS_AS(SpanningTree(c, {0, 0, 1}), NotATreeError);
  const SpanningTree t(c, {3, 0, 1}, 2);
  CHECK(t.edges() == std::vector<EdgeId>{0, 1, 3});
  CHECK(t.parent(2) == kNoVertex);
  CHECK(t.parent(1) == 2);
  CHECK(t.parent(0) == 1);
  CHECK(t.parent_edge(2) == kNoEdge);
  CHECK(t.parent_edge(3) == 3);
  CHECK(t.contains(3));
  CHECK_FALSE(t.contains(2));
}

TEST_CASE("count_spanning_trees examples") {
  CHECK(count_spanning_trees(cycle_graph(4)) == 4);
  CHECK(count_spanning_trees(Multigraph(2, {{0, 1}, {0, 1}})) == 2);
  CHECK(count_spanning_trees(build_grid(2, 3).graph()) == 15);
  CHECK(count_spanning_trees(Multigraph(1, {})) == 1);
  CHECK(count_spanning_trees(Multigraph(3, {{0, 1}})) == 0);
  CHECK(count_spanning_trees(Multigraph(2, {{0, 1}, {0, 0}, {1, 1}})) == 1);
  CHECK(count_spanning_trees(complete_graph(6)) == 1296);  // n^(n-2)
}

TEST_CASE("count_spanning_trees on square grids") {
  // number of spanning trees of the n x n grid, n = 1..6
  const std::vector<std::string> known{"1", "4", "192", "100352", "557568000", "32565539635200"};
  for (int n = 1; n <= 6; ++n) CHECK(count_spanning_trees(build_grid(n, n).graph()) == BigInt(known[n - 1]));
  // large enough to overflow 64-bit arithmetic
  CHECK(count_spanning_trees(build_grid(12, 12).graph()) > BigInt("1000000000000000000000000000000"));
}

TEST_CASE("matrix-tree agrees with enumeration") {
  std::vector<Multigraph> graphs{cycle_graph(5), complete_graph(5), build_grid(3, 3).graph(), build_grid(2, 5).graph(),
                                 Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}, {2, 2}})};
  for (const auto& g : graphs) {
    CHECK(count_spanning_trees(g) == BigInt(enumerate_spanning_trees(g).size()));
  }
}

TEST_CASE("enumeration oracle") {
  CHECK(enumerate_k_forests(cycle_graph(4), 2).size() == 6);
  CHECK(enumerate_spanning_trees(cycle_graph(3)).size() == 3);
  CHECK(enumerate_spanning_trees(build_grid(2, 3).graph()).size() == 15);
  CHECK(enumerate_k_forests(cycle_graph(4), 1).size() == 4);
  CHECK(enumerate_k_forests(cycle_graph(4), 4).size() == 1);
  CHECK_THROWS_AS(enumerate_spanning_trees(build_grid(4, 5).graph()), std::invalid_argument);
  // k-forests counted independently: k-subsets of a tree's edges removed
  const auto p = path_graph(6);
  CHECK(enumerate_k_forests(p, 3).size() == 10);
}

TEST_CASE("contract_partition examples") {
  const auto g = build_grid(2, 2).graph();
  const auto top_bottom = contract_partition(g, classes_of(g, {{0, 1}, {2, 3}}));
  CHECK(top_bottom.num_vertices() == 2);
  CHECK(top_bottom.num_edges() == 2);
  const auto left_right = contract_partition(g, classes_of(g, {{0, 2}, {1, 3}}));
  CHECK(left_right.num_edges() == 2);

  const auto g3 = build_grid(3, 3).graph();
  const auto cols = contract_partition(g3, classes_of(g3, {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}}));
  CHECK(cols.num_vertices() == 3);
  int m01 = 0, m12 = 0, m02 = 0;
  for (const Edge& e : cols.edges()) {
    const auto lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
    if (lo == 0 && hi == 1) ++m01;
    if (lo == 1 && hi == 2) ++m12;
    if (lo == 0 && hi == 2) ++m02;
  }
  CHECK(m01 == 3);
  CHECK(m12 == 3);
  CHECK(m02 == 0);

  // diagonal pair is not connected
  CHECK_THROWS_AS(contract_partition(g, classes_of(g, {{0, 3}, {1, 2}})), std::invalid_argument);
  CHECK_THROWS_AS(contract_partition(g, classes_of(g, {{0, 1}, {1, 2, 3}})), std::invalid_argument);
}

TEST_CASE("contraction keeps the crossing-edge count") {
  const auto g = build_grid(4, 4).graph();
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    // random connected partition: components of a random subset of a spanning tree
    std::vector<EdgeId> keep;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (gen() % 3 != 0) keep.push_back(e);
    }
    const auto p = partition_from_edges(g, keep);
    int crossing = 0;
    for (const Edge& e : g.edges()) crossing += p.label[e.u] != p.label[e.v] ? 1 : 0;
    const auto q = contract_partition(g, p);
    CHECK(q.num_vertices() == p.k());
    CHECK(q.num_edges() == crossing);
  }
}

TEST_CASE("partition helpers") {
  const auto g = build_grid(3, 2).graph();
  const SpanningTree t(g, enumerate_spanning_trees(g).front());
  const auto p = partition_from_cut(g, t, std::vector<EdgeId>{t.edges().front()});
  CHECK(p.k() == 2);
  validate_partition(g, p);
  const auto counts = class_tree_counts(g, p);
  CHECK(counts.size() == 2);
  CHECK_THROWS_AS(partition_from_cut(g, t, std::vector<EdgeId>{-1}), std::invalid_argument);
}
