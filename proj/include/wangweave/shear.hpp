#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wangweave/core.hpp"
#include "wangweave/word2d.hpp"

namespace wangweave {

// Partial patch with explicit holes (sheared rectangles are parallelograms).
struct SparsePatch {
    std::map<std::pair<int, int>, int> cells;  // (x,y) -> tile index

    bool operator==(const SparsePatch&) const = default;
};

// Edge-matching check restricted to pairs of filled neighboring cells.
bool sparse_patch_valid(const TileSet& T, const SparsePatch& p);

// The sheared tile set: each surviving horizontal domino (u,v) contributes
// theta(u,v) = (right(u)+top(v), top(v), left(u)+top(u), bottom(u)), i.e.
// u fused below the flat tile (top(v), top(v), top(u), top(u)). eta maps each
// derived tile back to its u.
struct ShearResult {
    TileSet derived;                              // the set S
    std::vector<int> eta;                         // S index -> T index
    std::vector<std::pair<int, int>> provenance;  // the pair (u,v)

    int index_of(const WangTile& t) const;        // S index of a derived tile
};

// Derived tiles collected over dominoes_with_surrounding(T,1,r) in sorted
// pair order, deduplicated keeping first occurrence.
ShearResult shear_tileset(const TileSet& T, int r);

// Applies eta letter-wise and re-indexes by M = [[1,1],[0,1]]: the letter at
// q in the sheared patch lands at M q. Throws std::invalid_argument when the
// input patch is not valid over the derived set.
SparsePatch unshear_patch(const ShearResult& s, const SparsePatch& patch);
SparsePatch unshear_patch(const ShearResult& s, const Word2D& patch);

// Inverse direction on a valid rectangle over T anchored at the origin: the
// sheared letter at q is theta(x_{Mq}, x_{Mq+e1}) wherever both cells exist.
SparsePatch shear_patch(const ShearResult& s, const TileSet& T, const Word2D& patch);

} // namespace wangweave
