#pragma once

#include <nlohmann/json.hpp>

#include "wangweave/core.hpp"
#include "wangweave/morphism.hpp"
#include "wangweave/shear.hpp"
#include "wangweave/word2d.hpp"

namespace wangweave {

// TileSet: {"tiles": [[right,top,left,bottom], ...]} in index order.
nlohmann::json tileset_to_json(const TileSet& T);
TileSet tileset_from_json(const nlohmann::json& j);

// Word2D: {"shape":[n1,n2],"rows_top_to_bottom":[[...],...]} (display order;
// internal storage keeps row 0 at the bottom).
nlohmann::json word2d_to_json(const Word2D& w);
Word2D word2d_from_json(const nlohmann::json& j);

// Morphism2D: {"rules": {"0": <word>, ...}} with contiguous letter keys.
nlohmann::json morphism_to_json(const Morphism2D& m);
Morphism2D morphism_from_json(const nlohmann::json& j, int codomain_size);

// SparsePatch: {"cells":[{"x":...,"y":...,"tile":...}]} sorted by (y,x).
nlohmann::json sparse_patch_to_json(const SparsePatch& p);
SparsePatch sparse_patch_from_json(const nlohmann::json& j);

} // namespace wangweave
