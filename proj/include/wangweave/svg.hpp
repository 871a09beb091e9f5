#pragma once

#include <map>
#include <string>

#include "wangweave/core.hpp"
#include "wangweave/shear.hpp"
#include "wangweave/word2d.hpp"

namespace wangweave {

struct RenderSpec {
    int cell_size = 64;
    std::map<Color, std::string> palette;  // color -> SVG fill; missing entries
                                           // fall back to a deterministic hash hue
    bool labels = true;
};

// Each tile is a unit square split into four edge triangles, each filled with
// its edge color and optionally labeled. Output is byte-identical for fixed
// inputs.
std::string render_svg(const TileSet& T, const RenderSpec& spec = {});
std::string render_svg(const TileSet& T, const Word2D& patch, const RenderSpec& spec = {});
std::string render_svg(const TileSet& T, const SparsePatch& patch, const RenderSpec& spec = {});

} // namespace wangweave
