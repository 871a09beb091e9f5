#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wangweave {

// Edge colors are opaque strings; fusing tiles concatenates them.
using Color = std::string;

struct WangTile {
    Color right, top, left, bottom;
    bool operator==(const WangTile&) const = default;
    auto operator<=>(const WangTile&) const = default;
};

struct TileSet {
    std::vector<WangTile> tiles;

    TileSet() = default;
    explicit TileSet(std::vector<WangTile> t) : tiles(std::move(t)) {}

    int size() const { return static_cast<int>(tiles.size()); }
    const WangTile& operator[](int i) const { return tiles.at(i); }

    bool operator==(const TileSet&) const = default;

    bool has_duplicates() const;
    // Distinct left/right colors in first-occurrence order.
    std::vector<Color> vertical_colors() const;
    // Distinct top/bottom colors in first-occurrence order.
    std::vector<Color> horizontal_colors() const;
};

// Glue two tiles sharing an edge into one tile whose parallel edge colors
// concatenate. axis=1 glues through the shared vertical edge (u left of v),
// axis=2 through the shared horizontal edge (u below v). Returns nullopt
// when the shared-edge colors differ.
std::optional<WangTile> fuse(int axis, const WangTile& u, const WangTile& v);

struct Transition {
    Color src, dst, input, output;
    bool operator==(const Transition&) const = default;
};

// Tile (right,top,left,bottom) read as the transition left --bottom|top--> right.
struct Transducer {
    std::vector<Color> states;
    std::vector<Transition> transitions;

    // Number of weakly connected components of the state graph.
    int connected_components() const;
};

Transducer to_transducer(const TileSet& T);

// All defined vertical fusions fuse(2, u, v) with u from T and v from S,
// i.e. the composition of the transducers of S and T. When prune is set,
// tiles whose source state has no incoming transition or whose destination
// state has no outgoing transition are removed iteratively.
TileSet transducer_product(const TileSet& T, const TileSet& S, bool prune);

struct ColorBijection {
    std::map<Color, Color> vertical;    // left/right colors of T -> those of S
    std::map<Color, Color> horizontal;  // top/bottom colors of T -> those of S
};

// Searches for color bijections carrying the tiles of T onto the tiles of S
// (as sets). Throws std::invalid_argument on cardinality mismatch; returns
// nullopt when no bijection exists.
std::optional<ColorBijection> equivalent(const TileSet& T, const TileSet& S);

} // namespace wangweave
