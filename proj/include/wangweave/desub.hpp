#pragma once

#include <set>
#include <variant>
#include <vector>

#include "wangweave/core.hpp"
#include "wangweave/morphism.hpp"

namespace wangweave {

enum class Side { Left, Right };

struct KeptTile {
    int tile;  // index in T
    bool operator==(const KeptTile&) const = default;
};
struct FusedPair {
    int u, v;   // indices in T; derived tile = fuse(axis, u, v)
    int axis;
    Side side;
    bool operator==(const FusedPair&) const = default;
};
using Provenance = std::variant<KeptTile, FusedPair>;

struct DesubResult {
    TileSet derived;      // the set S
    Morphism2D morphism;  // indices of S -> 1x1 / 2x1 / 1x2 words over T
    std::vector<Provenance> provenance;
};

// Builds the derived tile set and the recognizable morphism from a marker
// subset: kept tiles first in index order, then fused marker pairs in
// lexicographic pair order. side selects whether markers sit at the low
// (Left) or high (Right) coordinate of the fused domino. Throws
// std::invalid_argument when M fails the marker criterion at radius r.
DesubResult find_substitution(const TileSet& T, const std::set<int>& M, int i, int r, Side side);

} // namespace wangweave
