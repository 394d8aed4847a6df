#include "treesplit/dynamic_forest.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace treesplit {

// ---- LinkCutForest ----

LinkCutForest::LinkCutForest(int num_vertices, int max_edges)
    : num_vertices_(num_vertices),
      nodes_(static_cast<std::size_t>(num_vertices + max_edges)),
      edge_u_(static_cast<std::size_t>(max_edges), kNoVertex),
      edge_v_(static_cast<std::size_t>(max_edges), kNoVertex),
      present_(static_cast<std::size_t>(max_edges), 0) {
  if (num_vertices < 0 || max_edges < 0) throw std::invalid_argument("LinkCutForest: negative size");
  for (int e = 0; e < max_edges; ++e) {
    auto& node = nodes_[static_cast<std::size_t>(num_vertices + e)];
    node.is_edge = true;
    node.count = 1;
  }
}

void LinkCutForest::check_vertex(VertexId v) const {
  if (v < 0 || v >= num_vertices_) throw std::invalid_argument("forest: vertex " + std::to_string(v) + " out of range");
}

void LinkCutForest::check_edge_id(EdgeId e) const {
  if (e < 0 || static_cast<std::size_t>(e) >= present_.size()) {
    throw std::invalid_argument("forest: edge id " + std::to_string(e) + " out of range");
  }
}

bool LinkCutForest::contains(EdgeId e) const {
  check_edge_id(e);
  return present_[e] != 0;
}

bool LinkCutForest::is_splay_root(int x) const {
  const int p = nodes_[x].parent;
  return p < 0 || (nodes_[p].ch[0] != x && nodes_[p].ch[1] != x);
}

void LinkCutForest::push(int x) {
  Node& n = nodes_[x];
  if (!n.flip) return;
  std::swap(n.ch[0], n.ch[1]);
  for (const int c : n.ch) {
    if (c >= 0) nodes_[c].flip = !nodes_[c].flip;
  }
  n.flip = false;
}

void LinkCutForest::pull(int x) {
  Node& n = nodes_[x];
  n.count = n.is_edge ? 1 : 0;
  for (const int c : n.ch) {
    if (c >= 0) n.count += nodes_[c].count;
  }
}

void LinkCutForest::rotate(int x) {
  const int p = nodes_[x].parent;
  const int g = nodes_[p].parent;
  const int dir = nodes_[p].ch[1] == x ? 1 : 0;
  const int b = nodes_[x].ch[1 - dir];
  if (!is_splay_root(p)) {
    if (nodes_[g].ch[0] == p) {
      nodes_[g].ch[0] = x;
    } else {
      nodes_[g].ch[1] = x;
    }
  }
  nodes_[x].parent = g;
  nodes_[x].ch[1 - dir] = p;
  nodes_[p].parent = x;
  nodes_[p].ch[dir] = b;
  if (b >= 0) nodes_[b].parent = p;
  pull(p);
  pull(x);
}

void LinkCutForest::splay(int x) {
  // Push pending flips from the splay root down to x first.
  scratch_.clear();
  scratch_.push_back(x);
  for (int y = x; !is_splay_root(y); y = nodes_[y].parent) scratch_.push_back(nodes_[y].parent);
  for (auto it = scratch_.rbegin(); it != scratch_.rend(); ++it) push(*it);
  while (!is_splay_root(x)) {
    const int p = nodes_[x].parent;
    if (!is_splay_root(p)) {
      const int g = nodes_[p].parent;
      const bool zigzig = (nodes_[g].ch[0] == p) == (nodes_[p].ch[0] == x);
      rotate(zigzig ? p : x);
    }
    rotate(x);
  }
}

void LinkCutForest::access(int x) {
  int last = -1;
  for (int y = x; y >= 0; y = nodes_[y].parent) {
    splay(y);
    nodes_[y].ch[1] = last;
    pull(y);
    last = y;
  }
  splay(x);
}

void LinkCutForest::make_root(int x) {
  access(x);
  nodes_[x].flip = !nodes_[x].flip;
  push(x);
}

int LinkCutForest::find_root(int x) {
  access(x);
  for (;;) {
    push(x);
    if (nodes_[x].ch[0] < 0) break;
    x = nodes_[x].ch[0];
  }
  splay(x);
  return x;
}

void LinkCutForest::link(VertexId u, VertexId v, EdgeId e) {
  check_vertex(u);
  check_vertex(v);
  check_edge_id(e);
  if (present_[e]) throw std::invalid_argument("forest: edge " + std::to_string(e) + " already linked");
  if (connected(u, v)) throw std::invalid_argument("forest: link would close a cycle");
  // connected() left u as the root of its tree; hang it below the isolated
  // edge node, which in turn hangs below v.
  const int w = num_vertices_ + e;
  access(u);
  nodes_[u].parent = w;
  nodes_[w].parent = v;
  present_[e] = 1;
  edge_u_[e] = u;
  edge_v_[e] = v;
  selected_ = -1;
}

void LinkCutForest::cut(EdgeId e) {
  check_edge_id(e);
  if (!present_[e]) throw std::invalid_argument("forest: edge " + std::to_string(e) + " is not in the forest");
  const int w = num_vertices_ + e;
  const int u = edge_u_[e];
  const int v = edge_v_[e];
  make_root(u);
  access(v);
  // The splay tree of v now holds exactly the path u, w, v.
  splay(w);
  push(w);
  for (const int c : nodes_[w].ch) nodes_[c].parent = -1;
  nodes_[w] = Node{};
  nodes_[w].is_edge = true;
  nodes_[w].count = 1;
  present_[e] = 0;
  selected_ = -1;
}

bool LinkCutForest::connected(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  selected_ = -1;
  make_root(u);
  return u == v || find_root(v) == u;
}

int LinkCutForest::select_path(VertexId u, VertexId v) {
  if (!connected(u, v)) return -1;
  access(v);
  selected_ = v;
  return nodes_[v].count;
}

EdgeId LinkCutForest::path_edge(int i) {
  if (selected_ < 0) throw std::logic_error("forest: no path selected");
  if (i < 0 || i >= nodes_[selected_].count) throw std::invalid_argument("forest: path index out of range");
  int x = selected_;
  for (;;) {
    push(x);
    const int left = nodes_[x].ch[0];
    const int left_count = left >= 0 ? nodes_[left].count : 0;
    if (i < left_count) {
      x = left;
      continue;
    }
    i -= left_count;
    if (nodes_[x].is_edge) {
      if (i == 0) break;
      --i;
    }
    x = nodes_[x].ch[1];
  }
  splay(x);
  selected_ = x;
  return x - num_vertices_;
}

void LinkCutForest::expose_path(VertexId u, VertexId v) {
  if (select_path(u, v) < 0) throw std::invalid_argument("forest: vertices are not connected");
}

int LinkCutForest::path_length(VertexId u, VertexId v) {
  expose_path(u, v);
  return nodes_[v].count;
}

EdgeId LinkCutForest::path_edge_at(VertexId u, VertexId v, int i) {
  expose_path(u, v);
  return path_edge(i);
}

std::vector<EdgeId> LinkCutForest::path_edges(VertexId u, VertexId v) {
  expose_path(u, v);
  std::vector<EdgeId> out;
  out.reserve(static_cast<std::size_t>(nodes_[v].count));
  // In-order walk of v's splay tree is the path from u to v.
  std::vector<int> stack;
  int x = v;
  while (x >= 0 || !stack.empty()) {
    while (x >= 0) {
      push(x);
      stack.push_back(x);
      x = nodes_[x].ch[0];
    }
    x = stack.back();
    stack.pop_back();
    if (nodes_[x].is_edge) out.push_back(x - num_vertices_);
    x = nodes_[x].ch[1];
  }
  return out;
}

// ---- NaiveForest ----

NaiveForest::NaiveForest(int num_vertices, int max_edges)
    : adj_(static_cast<std::size_t>(num_vertices)),
      edge_u_(static_cast<std::size_t>(max_edges), kNoVertex),
      edge_v_(static_cast<std::size_t>(max_edges), kNoVertex),
      present_(static_cast<std::size_t>(max_edges), 0) {}

void NaiveForest::check_vertex(VertexId v) const {
  if (v < 0 || v >= num_vertices()) throw std::invalid_argument("forest: vertex " + std::to_string(v) + " out of range");
}

void NaiveForest::check_edge_id(EdgeId e) const {
  if (e < 0 || static_cast<std::size_t>(e) >= present_.size()) {
    throw std::invalid_argument("forest: edge id " + std::to_string(e) + " out of range");
  }
}

bool NaiveForest::contains(EdgeId e) const {
  check_edge_id(e);
  return present_[e] != 0;
}

void NaiveForest::link(VertexId u, VertexId v, EdgeId e) {
  check_vertex(u);
  check_vertex(v);
  check_edge_id(e);
  if (present_[e]) throw std::invalid_argument("forest: edge " + std::to_string(e) + " already linked");
  if (connected(u, v)) throw std::invalid_argument("forest: link would close a cycle");
  adj_[u].push_back({v, e});
  adj_[v].push_back({u, e});
  present_[e] = 1;
  selected_.clear();
  edge_u_[e] = u;
  edge_v_[e] = v;
}

void NaiveForest::cut(EdgeId e) {
  check_edge_id(e);
  if (!present_[e]) throw std::invalid_argument("forest: edge " + std::to_string(e) + " is not in the forest");
  for (const VertexId x : {edge_u_[e], edge_v_[e]}) {
    auto& list = adj_[x];
    list.erase(std::find_if(list.begin(), list.end(), [e](const Arc& a) { return a.edge == e; }));
  }
  present_[e] = 0;
  selected_.clear();
}

bool NaiveForest::search(VertexId u, VertexId v) const {
  const auto n = adj_.size();
  if (seen_.size() != n) {
    seen_.assign(n, 0);
    from_.assign(n, kNoVertex);
    via_.assign(n, kNoEdge);
  }
  if (++stamp_ == 0) {
    std::fill(seen_.begin(), seen_.end(), 0);
    stamp_ = 1;
  }
  queue_.clear();
  queue_.push_back(u);
  seen_[u] = stamp_;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const VertexId x = queue_[head];
    if (x == v) return true;
    for (const Arc& a : adj_[x]) {
      if (seen_[a.to] == stamp_) continue;
      seen_[a.to] = stamp_;
      via_[a.to] = a.edge;
      from_[a.to] = x;
      queue_.push_back(a.to);
    }
  }
  return false;
}

std::vector<EdgeId> NaiveForest::path_edges(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  if (!search(u, v)) throw std::invalid_argument("forest: vertices are not connected");
  std::vector<EdgeId> out;
  for (VertexId x = v; x != u; x = from_[x]) out.push_back(via_[x]);
  std::reverse(out.begin(), out.end());
  return out;
}

bool NaiveForest::connected(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return search(u, v);
}

int NaiveForest::select_path(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  selected_.clear();
  if (!search(u, v)) return -1;
  for (VertexId x = v; x != u; x = from_[x]) selected_.push_back(via_[x]);
  std::reverse(selected_.begin(), selected_.end());
  return static_cast<int>(selected_.size());
}

EdgeId NaiveForest::path_edge(int i) const {
  if (i < 0 || i >= static_cast<int>(selected_.size())) throw std::invalid_argument("forest: path index out of range");
  return selected_[static_cast<std::size_t>(i)];
}

int NaiveForest::path_length(VertexId u, VertexId v) const { return static_cast<int>(path_edges(u, v).size()); }

EdgeId NaiveForest::path_edge_at(VertexId u, VertexId v, int i) const {
  const auto path = path_edges(u, v);
  if (i < 0 || i >= static_cast<int>(path.size())) throw std::invalid_argument("forest: path index out of range");
  return path[static_cast<std::size_t>(i)];
}

}  // namespace treesplit
