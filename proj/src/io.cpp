#include "treesplit/io.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace treesplit {

nlohmann::json to_json(const PlanarEmbedding& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    j["vertices"].push_back({{"id", v}, {"x", g.point(v).x}, {"y", g.point(v).y}});
  }
  j["edges"] = nlohmann::json::array();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    j["edges"].push_back({{"id", e}, {"u", g.graph().edge(e).u}, {"v", g.graph().edge(e).v}});
  }
  return j;
}

namespace {

// Places each record at its id, rejecting gaps and duplicates.
template <class T, class F>
std::vector<T> by_id(const nlohmann::json& list, const char* what, F&& read) {
  std::vector<T> out(list.size());
  std::vector<char> seen(list.size(), 0);
  for (const auto& item : list) {
    const auto id = item.at("id").get<long long>();
    if (id < 0 || id >= static_cast<long long>(list.size()) || seen[static_cast<std::size_t>(id)]) {
      throw std::invalid_argument(std::string("graph json: bad or repeated ") + what + " id " + std::to_string(id));
    }
    seen[static_cast<std::size_t>(id)] = 1;
    out[static_cast<std::size_t>(id)] = read(item);
  }
  return out;
}

}  // namespace

PlanarEmbedding embedding_from_json(const nlohmann::json& j) {
  try {
    auto coords = by_id<Point>(j.at("vertices"), "vertex", [](const nlohmann::json& v) {
      return Point{v.at("x").get<double>(), v.at("y").get<double>()};
    });
    const auto nv = static_cast<int>(coords.size());
    auto edges = by_id<Edge>(j.at("edges"), "edge", [nv](const nlohmann::json& e) {
      const Edge out{e.at("u").get<VertexId>(), e.at("v").get<VertexId>()};
      if (out.u < 0 || out.u >= nv || out.v < 0 || out.v >= nv) {
        throw std::invalid_argument("graph json: edge endpoint out of range");
      }
      return out;
    });
    return PlanarEmbedding::from_coordinates(Multigraph(nv, std::move(edges)), std::move(coords));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("graph json: ") + e.what());
  }
}

PlanarEmbedding load_embedding(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return embedding_from_json(j);
}

void save_embedding(const PlanarEmbedding& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(g).dump() << '\n';
}

}  // namespace treesplit
