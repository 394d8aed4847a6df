#pragma once

#include <filesystem>

#include <json.hpp>

#include "treesplit/planar.hpp"

namespace treesplit {

// {"vertices":[{"id","x","y"}], "edges":[{"id","u","v"}]}. Ids must be
// 0..count-1 (any order); the rotation system is rebuilt from coordinates.
nlohmann::json to_json(const PlanarEmbedding& g);
PlanarEmbedding embedding_from_json(const nlohmann::json& j);
PlanarEmbedding load_embedding(const std::filesystem::path& path);
void save_embedding(const PlanarEmbedding& g, const std::filesystem::path& path);

}  // namespace treesplit
