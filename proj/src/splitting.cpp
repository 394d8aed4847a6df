#include "treesplit/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/dynamic_bitset.hpp>

namespace treesplit {

namespace {

void check_k(const SpanningTree& t, int k) {
  if (k < 1 || k > t.num_vertices()) {
    throw std::invalid_argument("split: need 1 <= k <= |V| (k=" + std::to_string(k) + ")");
  }
}

SplitResult make_result(const SpanningTree& t, std::vector<EdgeId> cut) {
  // Component sizes from subtree sizes: each cut edge (parent, child) closes a
  // component whose order is sub[child] minus the orders of the cut subtrees
  // nested directly inside it.
  std::sort(cut.begin(), cut.end());
  const int n = t.num_vertices();
  std::vector<char> is_cut_child(static_cast<std::size_t>(n), 0);
  for (VertexId v = 0; v < n; ++v) {
    if (v != t.root() && std::binary_search(cut.begin(), cut.end(), t.parent_edge(v))) is_cut_child[v] = 1;
  }
  std::vector<int> size(static_cast<std::size_t>(n), 0);
  std::vector<int> comps;
  const auto& order = t.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    size[v] += 1;
    if (v == t.root() || is_cut_child[v]) {
      comps.push_back(size[v]);
    } else {
      size[t.parent(v)] += size[v];
    }
  }
  std::sort(comps.begin(), comps.end());
  SplitResult r;
  r.cut_edges = std::move(cut);
  r.component_sizes = std::move(comps);
  r.imbalance = r.component_sizes.back() - r.component_sizes.front();
  return r;
}

// Feasibility DP for "cut k-1 edges so that every component size lies in
// [lo, hi]". Per vertex and number of components already closed inside its
// subtree, a bitset holds the achievable sizes of the component still open at
// that vertex. Tables after each child are kept for witness recovery.
class WindowSplitter {
 public:
  enum Force : signed char { kFree = 0, kKeep = 1, kCut = 2 };

  explicit WindowSplitter(const SpanningTree& t) : t_(t), children_(static_cast<std::size_t>(t.num_vertices())) {
    for (const VertexId v : t.order()) {
      if (v != t.root()) children_[t.parent(v)].push_back(v);
    }
    child_of_edge_.assign(static_cast<std::size_t>(max_edge_id() + 1), kNoVertex);
    for (VertexId v = 0; v < t.num_vertices(); ++v) {
      if (v != t.root()) child_of_edge_[t.parent_edge(v)] = v;
    }
  }

  VertexId child_of_edge(EdgeId e) const { return child_of_edge_[static_cast<std::size_t>(e)]; }

  /// force is indexed by child vertex (the edge to its parent).
  bool feasible(int k, int lo, int hi, const std::vector<signed char>& force) {
    run(k, lo, hi, force);
    return root_residual(k, lo, hi) >= 0;
  }

  std::optional<std::vector<EdgeId>> solve(int k, int lo, int hi, const std::vector<signed char>& force) {
    run(k, lo, hi, force);
    const int r = root_residual(k, lo, hi);
    if (r < 0) return std::nullopt;
    return recover(k, lo, hi, force, r);
  }

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  using Table = std::vector<Bits>;  // index: components closed

  int max_edge_id() const {
    int m = -1;
    for (const EdgeId e : t_.edges()) m = std::max(m, e);
    return m;
  }

  void run(int k, int lo, int hi, const std::vector<signed char>& force) {
    const auto n = static_cast<std::size_t>(t_.num_vertices());
    const auto width = static_cast<std::size_t>(hi + 1);
    stages_.assign(n, std::vector<Table>{});
    for (auto it = t_.order().rbegin(); it != t_.order().rend(); ++it) {
      const VertexId v = *it;
      auto& st = stages_[v];
      st.reserve(children_[v].size() + 1);
      Table cur(static_cast<std::size_t>(k), Bits(width));
      if (hi >= 1) cur[0].set(1);
      st.push_back(cur);
      for (const VertexId c : children_[v]) {
        const Table& child = stages_[c].back();
        const signed char f = force.empty() ? static_cast<signed char>(kFree) : force[c];
        Table next(static_cast<std::size_t>(k), Bits(width));
        for (int jc = 0; jc < k; ++jc) {
          const Bits& cb = child[jc];
          if (cb.none()) continue;
          if (f != kCut) {
            for (auto r2 = cb.find_first(); r2 != Bits::npos; r2 = cb.find_next(r2)) {
              for (int j1 = 0; j1 + jc < k; ++j1) {
                if (cur[j1].none()) continue;
                next[j1 + jc] |= cur[j1] << r2;
              }
            }
          }
          if (f != kKeep && closes(cb, lo, hi)) {
            for (int j1 = 0; j1 + jc + 1 < k; ++j1) next[j1 + jc + 1] |= cur[j1];
          }
        }
        cur = std::move(next);
        st.push_back(cur);
      }
    }
  }

  static bool closes(const Bits& b, int lo, int hi) {
    auto r = b.find_next(static_cast<std::size_t>(lo) - 1);
    if (lo == 0) r = b.find_first();
    return r != Bits::npos && r <= static_cast<std::size_t>(hi);
  }

  int root_residual(int k, int lo, int hi) const {
    const Bits& b = stages_[t_.root()].back()[static_cast<std::size_t>(k - 1)];
    for (int r = std::max(lo, 1); r <= hi; ++r) {
      if (b.test(static_cast<std::size_t>(r))) return r;
    }
    return -1;
  }

  std::vector<EdgeId> recover(int k, int lo, int hi, const std::vector<signed char>& force, int root_r) const {
    std::vector<EdgeId> cut;
    struct Item {
      VertexId v;
      int j;
      int r;
    };
    std::vector<Item> stack{{t_.root(), k - 1, root_r}};
    while (!stack.empty()) {
      auto [v, j, r] = stack.back();
      stack.pop_back();
      const auto& st = stages_[v];
      for (std::size_t i = children_[v].size(); i-- > 0;) {
        const VertexId c = children_[v][i];
        const Table& prev = st[i];
        const Table& child = stages_[c].back();
        const signed char f = force.empty() ? static_cast<signed char>(kFree) : force[c];
        bool done = false;
        if (f != kCut) {
          for (int jc = 0; jc <= j && !done; ++jc) {
            const Bits& cb = child[jc];
            for (auto r2 = cb.find_first(); r2 != Bits::npos && static_cast<int>(r2) < r; r2 = cb.find_next(r2)) {
              if (prev[j - jc].test(static_cast<std::size_t>(r) - r2)) {
                stack.push_back({c, jc, static_cast<int>(r2)});
                j -= jc;
                r -= static_cast<int>(r2);
                done = true;
                break;
              }
            }
          }
        }
        if (!done && f != kKeep) {
          for (int jc = 0; jc + 1 <= j && !done; ++jc) {
            if (!prev[j - jc - 1].test(static_cast<std::size_t>(r))) continue;
            const Bits& cb = child[jc];
            for (int r2 = std::max(lo, 1); r2 <= hi; ++r2) {
              if (cb.test(static_cast<std::size_t>(r2))) {
                stack.push_back({c, jc, r2});
                cut.push_back(t_.parent_edge(c));
                j -= jc + 1;
                done = true;
                break;
              }
            }
          }
        }
        if (!done) throw std::logic_error("split witness recovery failed");
      }
    }
    std::sort(cut.begin(), cut.end());
    return cut;
  }

  const SpanningTree& t_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<VertexId> child_of_edge_;
  std::vector<std::vector<Table>> stages_;
};

}  // namespace

std::vector<int> subtree_sizes(const SpanningTree& t) {
  std::vector<int> size(static_cast<std::size_t>(t.num_vertices()), 1);
  const auto& order = t.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it != t.root()) size[t.parent(*it)] += size[*it];
  }
  return size;
}

std::vector<int> component_sizes(const Multigraph& g, const SpanningTree& t, std::span<const EdgeId> cut) {
  std::vector<EdgeId> sorted(cut.begin(), cut.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("component_sizes: repeated cut edge");
  }
  for (const EdgeId e : sorted) {
    if (!t.contains(e)) throw std::invalid_argument("component_sizes: edge " + std::to_string(e) + " not in tree");
  }
  if (t.num_vertices() != g.num_vertices()) throw std::invalid_argument("component_sizes: tree/graph mismatch");
  return make_result(t, std::move(sorted)).component_sizes;
}

std::optional<SplitResult> find_balanced_split(const SpanningTree& t, int k) {
  check_k(t, k);
  const int n = t.num_vertices();
  if (n % k != 0) {
    throw std::invalid_argument("find_balanced_split: k=" + std::to_string(k) + " does not divide |V|=" +
                                std::to_string(n));
  }
  const int target = n / k;
  std::vector<int> residual(static_cast<std::size_t>(n), 1);
  std::vector<EdgeId> cut;
  const auto& order = t.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    if (v == t.root()) continue;
    if (residual[v] == target) {
      cut.push_back(t.parent_edge(v));
    } else {
      residual[t.parent(v)] += residual[v];
    }
  }
  if (static_cast<int>(cut.size()) != k - 1 || residual[t.root()] != target) return std::nullopt;
  std::sort(cut.begin(), cut.end());
  SplitResult r;
  r.cut_edges = std::move(cut);
  r.component_sizes.assign(static_cast<std::size_t>(k), target);
  r.imbalance = 0;
  return r;
}

std::pair<int, int> approx_size_window(int n, int k, double epsilon) {
  if (!(epsilon >= 0.0) || epsilon >= 1.0) throw std::invalid_argument("epsilon must lie in [0, 1)");
  const double ideal = static_cast<double>(n) / k;
  const int lo = std::max(1, static_cast<int>(std::ceil((1.0 - epsilon) * ideal - 1e-9)));
  const int hi = std::min(n, static_cast<int>(std::floor((1.0 + epsilon) * ideal + 1e-9)));
  return {lo, hi};
}

std::optional<SplitResult> find_approx_split(const SpanningTree& t, int k, double epsilon) {
  check_k(t, k);
  const auto [lo, hi] = approx_size_window(t.num_vertices(), k, epsilon);
  if (lo > hi) return std::nullopt;
  WindowSplitter dp(t);
  auto cut = dp.solve(k, lo, hi, std::vector<signed char>{});
  if (!cut) return std::nullopt;
  return make_result(t, std::move(*cut));
}

SplitResult find_min_imbalance_split(const SpanningTree& t, int k) {
  check_k(t, k);
  const int n = t.num_vertices();
  if (k == 1) return make_result(t, {});
  if (k == 2) {
    const auto sub = subtree_sizes(t);
    int best = std::numeric_limits<int>::max();
    EdgeId best_edge = kNoEdge;
    for (VertexId v = 0; v < n; ++v) {
      if (v == t.root()) continue;
      const int imb = std::abs(n - 2 * sub[v]);
      const EdgeId e = t.parent_edge(v);
      if (imb < best || (imb == best && e < best_edge)) {
        best = imb;
        best_edge = e;
      }
    }
    return make_result(t, {best_edge});
  }

  WindowSplitter dp(t);
  const std::vector<signed char> free_all;
  // Smallest feasible upper bound is nondecreasing in the lower bound.
  int best_width = std::numeric_limits<int>::max();
  int hi = (n + k - 1) / k;
  for (int lo = 1; lo <= n / k; ++lo) {
    hi = std::max(hi, lo);
    while (hi <= n && !dp.feasible(k, lo, hi, free_all)) ++hi;
    if (hi > n) break;
    best_width = std::min(best_width, hi - lo);
  }
  std::vector<int> windows;
  for (int lo = 1; lo <= n / k; ++lo) {
    if (lo + best_width <= n && dp.feasible(k, lo, lo + best_width, free_all)) windows.push_back(lo);
  }

  // Lexicographically smallest optimal cut: fix edges in increasing id order.
  std::vector<signed char> force(static_cast<std::size_t>(n), WindowSplitter::kFree);
  std::vector<EdgeId> chosen;
  const auto& edges = t.edges();
  std::size_t pos = 0;
  while (static_cast<int>(chosen.size()) < k - 1) {
    bool placed = false;
    for (; pos < edges.size(); ++pos) {
      const VertexId c = dp.child_of_edge(edges[pos]);
      force[c] = WindowSplitter::kCut;
      bool ok = false;
      for (const int lo : windows) {
        if (dp.feasible(k, lo, lo + best_width, force)) {
          ok = true;
          break;
        }
      }
      if (ok) {
        chosen.push_back(edges[pos]);
        ++pos;
        placed = true;
        break;
      }
      force[c] = WindowSplitter::kKeep;
    }
    if (!placed) throw std::logic_error("min-imbalance tie-break lost feasibility");
  }
  return make_result(t, std::move(chosen));
}

}  // namespace treesplit
