#include "wangweave/desub.hpp"

#include <algorithm>

#include "wangweave/markers.hpp"
#include "wangweave/solver.hpp"

namespace wangweave {

DesubResult find_substitution(const TileSet& T, const std::set<int>& M, int i, int r, Side side) {
    if (!is_marker_subset(T, M, i, r))
        throw std::invalid_argument("find_substitution: M is not a marker subset at this radius");

    auto D = dominoes_with_surrounding(T, i, r);
    std::vector<std::pair<int, int>> P;
    std::set<int> K;
    for (auto [u, v] : D) {
        if (side == Side::Left) {
            if (M.count(u) && !M.count(v)) P.push_back({u, v});
            if (!M.count(u) && !M.count(v)) K.insert(v);
        } else {
            if (!M.count(u) && M.count(v)) P.push_back({u, v});
            if (!M.count(u) && !M.count(v)) K.insert(u);
        }
    }
    std::sort(P.begin(), P.end());

    DesubResult res;
    res.morphism.codomain_size = T.size();
    for (int k : K) {
        res.derived.tiles.push_back(T[k]);
        res.morphism.rules.push_back(Word2D::letter(k));
        res.provenance.push_back(KeptTile{k});
    }
    for (auto [u, v] : P) {
        res.derived.tiles.push_back(*fuse(i, T[u], T[v]));
        res.morphism.rules.push_back(concat(i, Word2D::letter(u), Word2D::letter(v)));
        res.provenance.push_back(FusedPair{u, v, i, side});
    }
    res.morphism.domain_size = res.derived.size();
    return res;
}

} // namespace wangweave
