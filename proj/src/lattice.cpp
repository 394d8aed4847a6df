#include "treesplit/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "treesplit/walks.hpp"

namespace treesplit {

std::string to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::square:
      return "square";
    case LatticeKind::triangular:
      return "triangular";
    case LatticeKind::hexagonal:
      return "hexagonal";
  }
  return "?";
}

LatticeKind parse_lattice_kind(std::string_view name) {
  if (name == "square") return LatticeKind::square;
  if (name == "triangular") return LatticeKind::triangular;
  if (name == "hexagonal") return LatticeKind::hexagonal;
  throw std::invalid_argument("unknown lattice kind '" + std::string(name) + "'");
}

namespace {

constexpr double kRoot3 = 1.7320508075688772;

// Sites and bonds by lattice index, before relabelling.
struct RawLattice {
  std::vector<Point> points;
  std::vector<Edge> edges;
  std::map<std::pair<int, int>, VertexId> a_sites;
  std::map<std::pair<int, int>, VertexId> b_sites;  // hexagonal only

  VertexId add(std::map<std::pair<int, int>, VertexId>& sites, int i, int j, Point p) {
    const auto id = static_cast<VertexId>(points.size());
    sites[{i, j}] = id;
    points.push_back(p);
    return id;
  }
  static VertexId find(const std::map<std::pair<int, int>, VertexId>& sites, int i, int j) {
    const auto it = sites.find({i, j});
    return it == sites.end() ? kNoVertex : it->second;
  }
  void bond(VertexId u, VertexId v) {
    if (u != kNoVertex && v != kNoVertex) edges.push_back({u, v});
  }
};

bool in_box(Point p, Point lo, Point hi) { return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y; }

RawLattice raw_lattice(LatticeKind kind, int n, Point lo, Point hi) {
  RawLattice raw;
  const double s = 1.0 / n;
  switch (kind) {
    case LatticeKind::square: {
      const int i0 = static_cast<int>(std::floor(lo.x * n - 0.5)), i1 = static_cast<int>(std::ceil(hi.x * n));
      const int j0 = static_cast<int>(std::floor(lo.y * n - 0.5)), j1 = static_cast<int>(std::ceil(hi.y * n));
      for (int j = j0; j <= j1; ++j) {
        for (int i = i0; i <= i1; ++i) raw.add(raw.a_sites, i, j, {(i + 0.5) * s, (j + 0.5) * s});
      }
      for (const auto& [ij, v] : raw.a_sites) {
        raw.bond(v, RawLattice::find(raw.a_sites, ij.first + 1, ij.second));
        raw.bond(v, RawLattice::find(raw.a_sites, ij.first, ij.second + 1));
      }
      break;
    }
    case LatticeKind::triangular: {
      const double h = kRoot3 / 2.0;
      const int j0 = static_cast<int>(std::floor(lo.y * n / h)) - 1, j1 = static_cast<int>(std::ceil(hi.y * n / h)) + 1;
      for (int j = j0; j <= j1; ++j) {
        const int i0 = static_cast<int>(std::floor(lo.x * n - 0.5 * j)) - 1;
        const int i1 = static_cast<int>(std::ceil(hi.x * n - 0.5 * j)) + 1;
        for (int i = i0; i <= i1; ++i) {
          const Point p{(i + 0.5 * j) * s, j * h * s};
          if (in_box(p, lo, hi)) raw.add(raw.a_sites, i, j, p);
        }
      }
      for (const auto& [ij, v] : raw.a_sites) {
        const auto [i, j] = ij;
        raw.bond(v, RawLattice::find(raw.a_sites, i + 1, j));
        raw.bond(v, RawLattice::find(raw.a_sites, i, j + 1));
        raw.bond(v, RawLattice::find(raw.a_sites, i - 1, j + 1));
      }
      break;
    }
    case LatticeKind::hexagonal: {
      // A(i,j) = i(sqrt3, 0) + j(sqrt3/2, 3/2), B(i,j) = A(i,j) + (0, 1), scaled by 1/n.
      const int j0 = static_cast<int>(std::floor(lo.y * n / 1.5)) - 2;
      const int j1 = static_cast<int>(std::ceil(hi.y * n / 1.5)) + 2;
      for (int j = j0; j <= j1; ++j) {
        const int i0 = static_cast<int>(std::floor(lo.x * n / kRoot3 - 0.5 * j)) - 2;
        const int i1 = static_cast<int>(std::ceil(hi.x * n / kRoot3 - 0.5 * j)) + 2;
        for (int i = i0; i <= i1; ++i) {
          const Point a{(i + 0.5 * j) * kRoot3 * s, 1.5 * j * s};
          const Point b{a.x, a.y + s};
          if (in_box(a, lo, hi)) raw.add(raw.a_sites, i, j, a);
          if (in_box(b, lo, hi)) raw.add(raw.b_sites, i, j, b);
        }
      }
      for (const auto& [ij, v] : raw.a_sites) {
        const auto [i, j] = ij;
        raw.bond(v, RawLattice::find(raw.b_sites, i, j));
        raw.bond(v, RawLattice::find(raw.b_sites, i + 1, j - 1));
        raw.bond(v, RawLattice::find(raw.b_sites, i, j - 1));
      }
      break;
    }
  }
  return raw;
}

// Shrinks the vertex set until its induced subgraph is connected and has no
// bridges (a bridge would be a dual self-loop): strip pendant vertices, then
// cut at remaining bridges and keep the largest piece.
void prune_to_bridgeless(const PlanarEmbedding& patch, std::vector<char>& in) {
  const Multigraph& pg = patch.graph();
  for (;;) {
    std::vector<int> degree(static_cast<std::size_t>(pg.num_vertices()), 0);
    for (const Edge& e : pg.edges()) {
      if (in[e.u] && in[e.v]) ++degree[e.u], ++degree[e.v];
    }
    std::vector<VertexId> pendant;
    for (VertexId v = 0; v < pg.num_vertices(); ++v) {
      if (in[v] && degree[v] <= 1) pendant.push_back(v);
    }
    while (!pendant.empty()) {
      const VertexId v = pendant.back();
      pendant.pop_back();
      if (!in[v]) continue;
      in[v] = 0;
      for (const auto& inc : pg.incident(v)) {
        const VertexId w = inc.neighbor;
        if (in[w] && --degree[w] <= 1) pendant.push_back(w);
      }
    }
    std::vector<VertexId> kept;
    for (VertexId v = 0; v < pg.num_vertices(); ++v) {
      if (in[v]) kept.push_back(v);
    }
    if (kept.empty()) return;
    std::vector<Point> coords;
    for (const VertexId v : kept) coords.push_back(patch.point(v));
    const Multigraph sub = induced_subgraph(pg, kept);
    const auto emb = PlanarEmbedding::from_coordinates(sub, std::move(coords));
    std::vector<EdgeId> solid;
    for (EdgeId e = 0; e < sub.num_edges(); ++e) {
      const auto [a, b] = emb.edge_faces(e);
      if (a != b) solid.push_back(e);
    }
    int count = 0;
    const auto label = component_labels(sub, solid, &count);
    if (count == 1) return;
    std::vector<int> size(static_cast<std::size_t>(count), 0);
    for (const int l : label) ++size[l];
    const int best = static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if (label[i] != best) in[kept[i]] = 0;
    }
  }
}

}  // namespace

PlanarEmbedding lattice_patch(LatticeKind kind, int n, Point lo, Point hi) {
  if (n < 1) throw std::invalid_argument("lattice: refinement n must be positive");
  if (!(lo.x <= hi.x && lo.y <= hi.y)) throw std::invalid_argument("lattice: empty box");
  const double margin = 3.0 / n;
  const RawLattice raw = raw_lattice(kind, n, lo - Point{margin, margin}, hi + Point{margin, margin});
  const Multigraph whole(static_cast<int>(raw.points.size()), raw.edges);

  int count = 0;
  const auto label = whole.component_labels(&count);
  std::vector<int> size(static_cast<std::size_t>(count), 0);
  for (const int l : label) ++size[l];
  const int keep = static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());

  std::vector<VertexId> kept;
  for (VertexId v = 0; v < whole.num_vertices(); ++v) {
    if (label[v] == keep) kept.push_back(v);
  }
  // Bottom-to-top rows, left to right within a row.
  std::sort(kept.begin(), kept.end(), [&](VertexId a, VertexId b) {
    const Point p = raw.points[a], q = raw.points[b];
    if (std::abs(p.y - q.y) > 1e-9) return p.y < q.y;
    return p.x < q.x;
  });
  std::vector<Point> coords;
  for (const VertexId v : kept) coords.push_back(raw.points[v]);
  return PlanarEmbedding::from_coordinates(induced_subgraph(whole, kept), std::move(coords));
}

LatticeRegion build_lattice_region(LatticeKind kind, int n, const PlaneDrawing& d, double delta) {
  const auto& outer = d.outer_boundary();
  Point lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Point hi = -1.0 * lo;
  for (const Point p : outer) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  const PlanarEmbedding patch = lattice_patch(kind, n, lo, hi);
  const Multigraph& pg = patch.graph();

  // Faces whose dual vertex lies in the closed outer region of D.
  std::vector<char> face_in(static_cast<std::size_t>(patch.num_faces()), 0);
  for (int f = 0; f < patch.num_faces(); ++f) {
    if (f != patch.outer_face()) face_in[f] = point_in_polygon(patch.face_centroid(f), outer, 1e-9) ? 1 : 0;
  }
  // Omega: lattice vertices all of whose faces are inside.
  std::vector<char> in_omega(static_cast<std::size_t>(pg.num_vertices()), 0);
  std::vector<VertexId> omega_vertices;
  for (VertexId v = 0; v < pg.num_vertices(); ++v) {
    bool all = true;
    for (const Dart dt : patch.rotation(v)) all = all && face_in[patch.left_face(dt)];
    if (all) {
      in_omega[v] = 1;
      omega_vertices.push_back(v);
    }
  }
  prune_to_bridgeless(patch, in_omega);
  omega_vertices.clear();
  for (VertexId v = 0; v < pg.num_vertices(); ++v) {
    if (in_omega[v]) omega_vertices.push_back(v);
  }
  if (omega_vertices.empty()) throw std::runtime_error("lattice region: no lattice vertex inside the drawing");

  // Boundary cycle: dual edges of the lattice edges leaving omega.
  std::map<int, std::vector<EdgeId>> at_face;
  int crossing = 0;
  for (EdgeId e = 0; e < pg.num_edges(); ++e) {
    if (in_omega[pg.edge(e).u] == in_omega[pg.edge(e).v]) continue;
    const auto [f, g] = patch.edge_faces(e);
    at_face[f].push_back(e);
    at_face[g].push_back(e);
    ++crossing;
  }
  for (const auto& [f, list] : at_face) {
    if (list.size() != 2) throw std::runtime_error("lattice region: clipped faces do not form a simple cycle");
  }
  std::vector<Point> cycle;
  {
    const int start = at_face.begin()->first;
    int f = start;
    EdgeId via = at_face[f][0];
    int walked = 0;
    do {
      cycle.push_back(patch.face_centroid(f));
      const auto [a, b] = patch.edge_faces(via);
      f = a == f ? b : a;
      via = at_face[f][0] == via ? at_face[f][1] : at_face[f][0];
      ++walked;
    } while (f != start && walked <= crossing);
    if (walked != crossing) throw std::runtime_error("lattice region: clipped faces form more than one cycle");
  }

  const double achieved = boundary_hausdorff(cycle, outer, 0.05 / n);
  if (achieved > delta) {
    std::ostringstream msg;
    msg << "lattice region: no boundary cycle within delta=" << delta << " at n=" << n << " (" << to_string(kind)
        << " lattice); achieved distance " << achieved;
    throw std::runtime_error(msg.str());
  }
  std::vector<Point> coords;
  for (const VertexId v : omega_vertices) {
    if (!point_in_polygon(patch.point(v), cycle, 0.0)) {
      throw std::runtime_error("lattice region: a clipped vertex lies outside the boundary cycle");
    }
    coords.push_back(patch.point(v));
  }
  Multigraph og = induced_subgraph(pg, omega_vertices);
  if (!og.is_connected()) throw std::runtime_error("lattice region: clipped graph is disconnected");

  LatticeRegion region;
  region.kind = kind;
  region.n = n;
  region.omega = PlanarEmbedding::from_coordinates(std::move(og), std::move(coords));
  region.dual = compute_dual(region.omega, true);
  region.boundary_cycle = std::move(cycle);
  region.boundary_distance = achieved;
  return region;
}

// ---- epsilon-compatibility ----

CompatibilityCheck epsilon_compatible(std::span<const Point> coords, const Partition& p, const PlaneDrawing& d,
                                      double epsilon, std::span<const int> face_of_class) {
  const int k = p.k();
  if (k != d.num_faces()) {
    throw std::invalid_argument("epsilon_compatible: " + std::to_string(k) + " classes but " +
                                std::to_string(d.num_faces()) + " faces");
  }
  if (k > 8 && face_of_class.empty()) throw std::invalid_argument("epsilon_compatible: matching supports k <= 8");
  // dist[c][f] = (sum, max) of vertex distances from class c to face f.
  std::vector<std::vector<std::pair<double, double>>> dist(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) {
    for (int f = 0; f < k; ++f) {
      double sum = 0.0, worst = 0.0;
      for (const VertexId v : p.classes[c]) {
        const double x = d.distance_to_face(coords[v], f);
        sum += x;
        worst = std::max(worst, x);
      }
      dist[c].push_back({sum, worst});
    }
  }
  CompatibilityCheck out;
  if (!face_of_class.empty()) {
    if (static_cast<int>(face_of_class.size()) != k) throw std::invalid_argument("epsilon_compatible: bad matching");
    std::vector<int> check(face_of_class.begin(), face_of_class.end());
    std::sort(check.begin(), check.end());
    for (int i = 0; i < k; ++i) {
      if (check[i] != i) throw std::invalid_argument("epsilon_compatible: matching is not a permutation");
    }
    out.face_of_class.assign(face_of_class.begin(), face_of_class.end());
  } else {
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
      double total = 0.0;
      for (int c = 0; c < k; ++c) total += dist[c][perm[c]].first;
      if (total < best) {
        best = total;
        out.face_of_class = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  out.compatible = true;
  for (int c = 0; c < k; ++c) {
    out.max_distance.push_back(dist[c][out.face_of_class[c]].second);
    if (out.max_distance.back() > epsilon) out.compatible = false;
  }
  return out;
}

CompatibilityCheck epsilon_compatible(const LatticeRegion& region, const Partition& p, const PlaneDrawing& d,
                                      double epsilon, std::span<const int> face_of_class) {
  return epsilon_compatible(region.omega.coords(), p, d, epsilon, face_of_class);
}

CompatibilityOracle::CompatibilityOracle(std::span<const Point> coords, const PlaneDrawing& d, double epsilon)
    : k_(d.num_faces()) {
  if (k_ > 8) throw std::invalid_argument("compatibility oracle supports at most 8 faces");
  allowed_.reserve(coords.size());
  for (const Point p : coords) {
    unsigned mask = 0;
    for (int f = 0; f < k_; ++f) {
      if (d.distance_to_face(p, f) <= epsilon) mask |= 1u << f;
    }
    allowed_.push_back(mask);
  }
}

bool CompatibilityOracle::splits(const SpanningTree& t) const {
  const int n = t.num_vertices();
  if (n != static_cast<int>(allowed_.size())) throw std::invalid_argument("compatibility oracle: vertex count mismatch");
  if (n < k_) return false;
  const unsigned full = (1u << k_) - 1;
  if (std::any_of(allowed_.begin(), allowed_.end(), [](unsigned m) { return m == 0; })) return false;
  if (std::all_of(allowed_.begin(), allowed_.end(), [&](unsigned m) { return m == full; })) return true;

  // table[v][a][m]: the subtree of v can be cut so that v's open component is
  // matched to face a and the closed components use exactly the faces in m.
  const auto masks = static_cast<std::size_t>(1u << k_);
  const auto row = static_cast<std::size_t>(k_) * masks;
  table_.assign(static_cast<std::size_t>(n) * row, 0);
  auto cell = [&](VertexId v, int a) { return table_.data() + static_cast<std::size_t>(v) * row + a * masks; };
  for (VertexId v = 0; v < n; ++v) {
    for (int a = 0; a < k_; ++a) {
      if (allowed_[v] >> a & 1u) cell(v, a)[0] = 1;
    }
  }
  std::vector<unsigned char> closed(masks), merged(row);
  const auto& order = t.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId c = *it;
    const VertexId p = t.parent(c);
    if (p == kNoVertex) continue;
    // The child's component closed off: it uses its own face b plus its mask.
    std::fill(closed.begin(), closed.end(), 0);
    for (int b = 0; b < k_; ++b) {
      const unsigned char* cb = cell(c, b);
      for (unsigned m = 0; m < masks; ++m) {
        if (cb[m]) closed[m | (1u << b)] = 1;
      }
    }
    std::fill(merged.begin(), merged.end(), 0);
    for (int a = 0; a < k_; ++a) {
      const unsigned char* pa = cell(p, a);
      const unsigned char* ca = cell(c, a);
      unsigned char* out = merged.data() + a * masks;
      const unsigned bit = 1u << a;
      for (unsigned m1 = 0; m1 < masks; ++m1) {
        if (!pa[m1]) continue;
        const unsigned rest = full & ~m1 & ~bit;
        // m2 ranges over subsets of the faces still unused.
        for (unsigned m2 = rest;; m2 = (m2 - 1) & rest) {
          if (ca[m2] || closed[m2]) out[m1 | m2] = 1;
          if (m2 == 0) break;
        }
      }
    }
    std::copy(merged.begin(), merged.end(), cell(p, 0));
  }
  const VertexId root = t.root();
  for (int a = 0; a < k_; ++a) {
    if (cell(root, a)[full & ~(1u << a)]) return true;
  }
  return false;
}

CompatibilityEstimate compatibility_experiment(const LatticeRegion& region, const PlaneDrawing& d, double epsilon,
                                               std::uint64_t trials, RngStream& rng) {
  const CompatibilityOracle oracle(region.omega.coords(), d, epsilon);
  const DualTreeSampler sampler(region.omega, region.dual);
  CompatibilityEstimate est;
  est.trials = trials;
  for (std::uint64_t i = 0; i < trials; ++i) {
    if (oracle.splits(sampler.sample(rng))) ++est.successes;
  }
  est.frequency = trials ? static_cast<double>(est.successes) / static_cast<double>(trials) : 0.0;
  est.ci = wilson_interval(est.successes, trials);
  return est;
}

CompatibilityEstimate compatibility_experiment(LatticeKind kind, int n, const PlaneDrawing& d, double delta,
                                               double epsilon, std::uint64_t trials, RngStream& rng) {
  return compatibility_experiment(build_lattice_region(kind, n, d, delta), d, epsilon, trials, rng);
}

}  // namespace treesplit
