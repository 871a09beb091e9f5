#pragma once

#include <set>
#include <vector>

#include "wangweave/core.hpp"

namespace wangweave {

struct MarkerCandidate {
    int direction = 2;          // axis of e_i
    int radius = 0;
    std::set<int> tiles;        // the subset M

    bool operator==(const MarkerCandidate&) const = default;
};

// Marker criterion at surrounding radius r: for direction e_2, none of
// M over M, M beside (T\M), (T\M) beside M may survive; symmetric for e_1.
// True is a proof that M is a marker subset; false only means "not provable
// at this radius". Throws std::invalid_argument when M is empty or all of T.
bool is_marker_subset(const TileSet& T, const std::set<int>& M, int i, int r);

// Merges tiles over the surviving off-axis dominoes (union-find) and returns
// every class M with (M x M) disjoint from the surviving axis-i dominoes,
// sorted by smallest member. Every returned class passes is_marker_subset.
std::vector<MarkerCandidate> find_markers(const TileSet& T, int i, int r);

} // namespace wangweave
