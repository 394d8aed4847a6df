#include "treesplit/drawing.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <string>

namespace treesplit {

namespace {

constexpr double kTol = 1e-9;

int orientation(Point a, Point b, Point c) {
  const double v = cross(b - a, c - a);
  if (v > kTol * kTol) return 1;
  if (v < -kTol * kTol) return -1;
  return 0;
}

bool segments_touch(Point a, Point b, Point c, Point d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
  return point_segment_distance(c, a, b) <= kTol || point_segment_distance(d, a, b) <= kTol ||
         point_segment_distance(a, c, d) <= kTol || point_segment_distance(b, c, d) <= kTol;
}

// Two segments meeting only at the common endpoint p, without overlapping.
bool meet_only_at(Point a, Point b, Point c, Point d, Point p) {
  const bool ab_at_p = distance(a, p) <= kTol || distance(b, p) <= kTol;
  const bool cd_at_p = distance(c, p) <= kTol || distance(d, p) <= kTol;
  if (!ab_at_p || !cd_at_p) return false;
  const Point u = (distance(a, p) <= kTol ? b : a) - p;
  const Point v = (distance(c, p) <= kTol ? d : c) - p;
  if (std::abs(cross(u, v)) > kTol * std::hypot(u.x, u.y) * std::hypot(v.x, v.y)) return true;
  return dot(u, v) < 0.0;  // collinear is fine only when pointing apart
}

int start_vertex(const DrawingCurve& c, int dir) { return dir > 0 ? c.from : c.to; }
int end_vertex(const DrawingCurve& c, int dir) { return dir > 0 ? c.to : c.from; }

void append_side(std::vector<Point>& out, const DrawingCurve& c, int dir) {
  // Drop the first point: it repeats the previous side's last point.
  if (dir > 0) {
    out.insert(out.end(), c.points.begin() + 1, c.points.end());
  } else {
    out.insert(out.end(), c.points.rbegin() + 1, c.points.rend());
  }
}

}  // namespace

PlaneDrawing::PlaneDrawing(std::vector<Point> vertices, std::vector<DrawingCurve> curves,
                           std::vector<std::vector<FaceSide>> faces)
    : vertices_(std::move(vertices)), curves_(std::move(curves)), faces_(std::move(faces)) {
  const int nv = static_cast<int>(vertices_.size());
  const int nc = static_cast<int>(curves_.size());
  if (faces_.empty()) throw std::invalid_argument("drawing: no inner faces");
  for (int c = 0; c < nc; ++c) {
    const auto& cv = curves_[c];
    const std::string name = "drawing: curve " + std::to_string(c);
    if (cv.points.size() < 2) throw std::invalid_argument(name + " needs at least two points");
    if (cv.from < 0 || cv.from >= nv || cv.to < 0 || cv.to >= nv) throw std::invalid_argument(name + " has a bad endpoint");
    if (distance(cv.points.front(), vertices_[cv.from]) > kTol || distance(cv.points.back(), vertices_[cv.to]) > kTol) {
      throw std::invalid_argument(name + " does not start and end on its vertices");
    }
  }

  // Curves may only meet at shared endpoint vertices.
  for (int a = 0; a < nc; ++a) {
    const auto& pa = curves_[a].points;
    for (std::size_t i = 0; i + 1 < pa.size(); ++i) {
      for (std::size_t j = i + 2; j + 1 < pa.size(); ++j) {
        const bool closing = curves_[a].from == curves_[a].to && i == 0 && j + 2 == pa.size();
        if (segments_touch(pa[i], pa[i + 1], pa[j], pa[j + 1]) &&
            !(closing && meet_only_at(pa[i], pa[i + 1], pa[j], pa[j + 1], pa[0]))) {
          throw std::invalid_argument("drawing: curve " + std::to_string(a) + " intersects itself");
        }
      }
      for (int b = a + 1; b < nc; ++b) {
        const auto& pb = curves_[b].points;
        for (std::size_t j = 0; j + 1 < pb.size(); ++j) {
          if (!segments_touch(pa[i], pa[i + 1], pb[j], pb[j + 1])) continue;
          bool ok = false;
          for (const int w : {curves_[a].from, curves_[a].to}) {
            if (w != curves_[b].from && w != curves_[b].to) continue;
            if (meet_only_at(pa[i], pa[i + 1], pb[j], pb[j + 1], vertices_[w])) ok = true;
          }
          if (!ok) {
            throw std::invalid_argument("drawing: curves " + std::to_string(a) + " and " + std::to_string(b) +
                                        " cross away from a shared endpoint");
          }
        }
      }
    }
  }

  std::vector<int> uses(static_cast<std::size_t>(nc), 0);
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const auto& sides = faces_[f];
    const std::string name = "drawing: face " + std::to_string(f);
    if (sides.empty()) throw std::invalid_argument(name + " is empty");
    std::vector<Point> poly{curves_.at(static_cast<std::size_t>(sides[0].curve)).points.front()};
    if (sides[0].dir < 0) poly[0] = curves_[sides[0].curve].points.back();
    for (std::size_t s = 0; s < sides.size(); ++s) {
      const auto& side = sides[s];
      if (side.curve < 0 || side.curve >= nc || (side.dir != 1 && side.dir != -1)) {
        throw std::invalid_argument(name + " has a bad side");
      }
      const auto& next = sides[(s + 1) % sides.size()];
      if (end_vertex(curves_[side.curve], side.dir) != start_vertex(curves_[next.curve], next.dir)) {
        throw std::invalid_argument(name + " does not close up");
      }
      ++uses[side.curve];
      append_side(poly, curves_[side.curve], side.dir);
    }
    poly.pop_back();
    if (poly.size() < 3 || std::abs(signed_area(poly)) <= kTol) throw std::invalid_argument(name + " is degenerate");
    polygons_.push_back(std::move(poly));
  }

  // Outer boundary: single-use curves chained into one loop.
  std::vector<std::vector<int>> at(static_cast<std::size_t>(nv));
  int boundary_curves = 0;
  for (int c = 0; c < nc; ++c) {
    if (uses[c] == 0 || uses[c] > 2) {
      throw std::invalid_argument("drawing: curve " + std::to_string(c) + " borders " + std::to_string(uses[c]) +
                                  " inner faces");
    }
    if (uses[c] != 1) continue;
    ++boundary_curves;
    at[curves_[c].from].push_back(c);
    at[curves_[c].to].push_back(c);
  }
  for (const auto& list : at) {
    if (!list.empty() && list.size() != 2) throw std::invalid_argument("drawing: outer boundary is not a simple loop");
  }
  int c = -1;
  for (int i = 0; i < nc && c < 0; ++i) {
    if (uses[i] == 1) c = i;
  }
  const int first = c;
  int v = curves_[c].from;
  outer_.push_back(vertices_[v]);
  int walked = 0;
  do {
    const int dir = curves_[c].from == v ? 1 : -1;
    append_side(outer_, curves_[c], dir);
    v = end_vertex(curves_[c], dir);
    ++walked;
    c = at[v][0] == c ? at[v][1] : at[v][0];
  } while (c != first && walked <= boundary_curves);
  if (walked != boundary_curves) throw std::invalid_argument("drawing: outer boundary is not a single loop");
  outer_.pop_back();
}

double PlaneDrawing::diameter() const {
  std::vector<Point> pts = vertices_;
  for (const auto& c : curves_) pts.insert(pts.end(), c.points.begin(), c.points.end());
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, distance(pts[i], pts[j]));
  }
  return best;
}

double PlaneDrawing::distance_to_face(Point p, int i) const { return point_polygon_distance(p, face_polygon(i)); }

PlaneDrawing vertical_strips(int k, Point lo, Point hi) {
  if (k < 1) throw std::invalid_argument("vertical_strips: k must be positive");
  if (!(lo.x < hi.x && lo.y < hi.y)) throw std::invalid_argument("vertical_strips: empty box");
  // Vertices: bottom row 0..k, then top row k+1..2k+1.
  std::vector<Point> vertices;
  for (int i = 0; i <= k; ++i) vertices.push_back({lo.x + (hi.x - lo.x) * i / k, lo.y});
  for (int i = 0; i <= k; ++i) vertices.push_back({lo.x + (hi.x - lo.x) * i / k, hi.y});
  const int top = k + 1;
  // Curves: bottom segments 0..k-1, top segments k..2k-1, verticals 2k..3k.
  std::vector<DrawingCurve> curves;
  for (int i = 0; i < k; ++i) curves.push_back({{vertices[i], vertices[i + 1]}, i, i + 1});
  for (int i = 0; i < k; ++i) curves.push_back({{vertices[top + i], vertices[top + i + 1]}, top + i, top + i + 1});
  for (int i = 0; i <= k; ++i) curves.push_back({{vertices[i], vertices[top + i]}, i, top + i});
  std::vector<std::vector<FaceSide>> faces;
  for (int i = 0; i < k; ++i) faces.push_back({{i, 1}, {2 * k + i + 1, 1}, {k + i, -1}, {2 * k + i, -1}});
  return PlaneDrawing(std::move(vertices), std::move(curves), std::move(faces));
}

namespace {

nlohmann::json point_json(Point p) { return nlohmann::json::array({p.x, p.y}); }

Point json_point(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("drawing json: a point is [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

nlohmann::json to_json(const PlaneDrawing& d) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const Point p : d.vertices()) j["vertices"].push_back(point_json(p));
  j["curves"] = nlohmann::json::array();
  for (const auto& c : d.curves()) {
    nlohmann::json pts = nlohmann::json::array();
    for (const Point p : c.points) pts.push_back(point_json(p));
    j["curves"].push_back({{"points", pts}, {"from", c.from}, {"to", c.to}});
  }
  j["faces"] = nlohmann::json::array();
  for (const auto& f : d.faces()) {
    nlohmann::json sides = nlohmann::json::array();
    for (const auto& s : f) sides.push_back(nlohmann::json::array({s.curve, s.dir}));
    j["faces"].push_back(sides);
  }
  return j;
}

PlaneDrawing drawing_from_json(const nlohmann::json& j) {
  try {
    std::vector<Point> vertices;
    for (const auto& p : j.at("vertices")) vertices.push_back(json_point(p));
    std::vector<DrawingCurve> curves;
    for (const auto& c : j.at("curves")) {
      DrawingCurve cv;
      for (const auto& p : c.at("points")) cv.points.push_back(json_point(p));
      cv.from = c.at("from").get<int>();
      cv.to = c.at("to").get<int>();
      curves.push_back(std::move(cv));
    }
    auto curve = [&](int id) -> const DrawingCurve& {
      if (id < 0 || id >= static_cast<int>(curves.size())) {
        throw std::invalid_argument("drawing json: unknown curve " + std::to_string(id));
      }
      return curves[id];
    };
    std::vector<std::vector<FaceSide>> faces;
    for (const auto& f : j.at("faces")) {
      std::vector<FaceSide> sides;
      std::vector<char> inferred;
      for (const auto& s : f) {
        if (s.is_array()) {
          sides.push_back({s.at(0).get<int>(), s.at(1).get<int>()});
          inferred.push_back(0);
        } else {
          sides.push_back({s.get<int>(), 1});
          inferred.push_back(1);
        }
      }
      if (sides.empty()) throw std::invalid_argument("drawing json: empty face");
      // Orient bare ids so each side starts where the previous one ended; the
      // first side, if bare, is oriented to meet the second.
      if (inferred[0] && sides.size() > 1) {
        const auto& c0 = curve(sides[0].curve);
        const auto& c1 = curve(sides[1].curve);
        const bool meets = [&](int v) {
          return inferred[1] ? (v == c1.from || v == c1.to) : v == start_vertex(c1, sides[1].dir);
        }(c0.to);
        sides[0].dir = meets ? 1 : -1;
      }
      for (std::size_t i = 1; i < sides.size(); ++i) {
        if (!inferred[i]) continue;
        const int prev_end = end_vertex(curve(sides[i - 1].curve), sides[i - 1].dir);
        sides[i].dir = curve(sides[i].curve).from == prev_end ? 1 : -1;
      }
      faces.push_back(std::move(sides));
    }
    return PlaneDrawing(std::move(vertices), std::move(curves), std::move(faces));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("drawing json: ") + e.what());
  }
}

PlaneDrawing load_drawing(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return drawing_from_json(j);
}

void save_drawing(const PlaneDrawing& d, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(d).dump(2) << '\n';
}

}  // namespace treesplit
