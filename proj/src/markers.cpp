#include "wangweave/markers.hpp"

#include <algorithm>
#include <numeric>

#include "wangweave/solver.hpp"

namespace wangweave {

bool is_marker_subset(const TileSet& T, const std::set<int>& M, int i, int r) {
    if (M.empty() || static_cast<int>(M.size()) >= T.size())
        throw std::invalid_argument("is_marker_subset: M must be a nonempty proper subset");
    if (i != 1 && i != 2) throw std::invalid_argument("is_marker_subset: axis must be 1 or 2");
    int j = 3 - i;
    for (auto [u, v] : dominoes_with_surrounding(T, i, r))
        if (M.count(u) && M.count(v)) return false;
    for (auto [u, v] : dominoes_with_surrounding(T, j, r))
        if (M.count(u) != M.count(v)) return false;
    return true;
}

std::vector<MarkerCandidate> find_markers(const TileSet& T, int i, int r) {
    int j = 3 - i;
    auto Dj = dominoes_with_surrounding(T, j, r);
    auto Di = dominoes_with_surrounding(T, i, r);

    std::vector<int> parent(T.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : Dj) {
        int a = find(u), b = find(v);
        if (a != b) parent[a] = b;
    }

    std::map<int, std::set<int>> classes;
    for (int t = 0; t < T.size(); ++t) classes[find(t)].insert(t);

    std::vector<MarkerCandidate> out;
    for (auto& [root, M] : classes) {
        if (static_cast<int>(M.size()) >= T.size()) continue;
        bool stackable = std::any_of(Di.begin(), Di.end(), [&](const std::pair<int, int>& d) {
            return M.count(d.first) && M.count(d.second);
        });
        if (!stackable) out.push_back({i, r, M});
    }
    std::sort(out.begin(), out.end(), [](const MarkerCandidate& a, const MarkerCandidate& b) {
        return *a.tiles.begin() < *b.tiles.begin();
    });
    return out;
}

} // namespace wangweave
