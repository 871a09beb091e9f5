#include "wangweave/shear.hpp"

#include <stdexcept>

#include "wangweave/solver.hpp"

namespace wangweave {

bool sparse_patch_valid(const TileSet& T, const SparsePatch& p) {
    for (const auto& [pos, t] : p.cells) {
        if (t < 0 || t >= T.size()) return false;
        auto [x, y] = pos;
        auto right = p.cells.find({x + 1, y});
        if (right != p.cells.end() && T[t].right != T[right->second].left) return false;
        auto above = p.cells.find({x, y + 1});
        if (above != p.cells.end() && T[t].top != T[above->second].bottom) return false;
    }
    return true;
}

int ShearResult::index_of(const WangTile& t) const {
    for (int i = 0; i < derived.size(); ++i)
        if (derived[i] == t) return i;
    throw std::invalid_argument("ShearResult: tile not in the derived set");
}

static WangTile theta(const WangTile& u, const WangTile& v) {
    return {u.right + v.top, v.top, u.left + u.top, u.bottom};
}

ShearResult shear_tileset(const TileSet& T, int r) {
    ShearResult res;
    for (auto [u, v] : dominoes_with_surrounding(T, 1, r)) {
        WangTile t = theta(T[u], T[v]);
        bool fresh = true;
        for (const auto& seen : res.derived.tiles)
            if (seen == t) {
                fresh = false;
                break;
            }
        if (!fresh) continue;
        res.derived.tiles.push_back(t);
        res.eta.push_back(u);
        res.provenance.push_back({u, v});
    }
    return res;
}

SparsePatch unshear_patch(const ShearResult& s, const SparsePatch& patch) {
    if (!sparse_patch_valid(s.derived, patch))
        throw std::invalid_argument("unshear_patch: input is not valid over the sheared set");
    SparsePatch out;
    for (const auto& [pos, t] : patch.cells) {
        auto [qx, qy] = pos;
        out.cells[{qx + qy, qy}] = s.eta.at(t);
    }
    return out;
}

SparsePatch unshear_patch(const ShearResult& s, const Word2D& patch) {
    SparsePatch sp;
    for (int y = 0; y < patch.n2; ++y)
        for (int x = 0; x < patch.n1; ++x) sp.cells[{x, y}] = patch.at(x, y);
    return unshear_patch(s, sp);
}

SparsePatch shear_patch(const ShearResult& s, const TileSet& T, const Word2D& patch) {
    if (!patch_valid(T, patch))
        throw std::invalid_argument("shear_patch: input is not a valid patch");
    SparsePatch out;
    for (int qy = 0; qy < patch.n2; ++qy)
        for (int qx = -qy; qx + qy + 1 < patch.n1; ++qx) {
            const WangTile& u = T[patch.at(qx + qy, qy)];
            const WangTile& v = T[patch.at(qx + qy + 1, qy)];
            out.cells[{qx, qy}] = s.index_of(theta(u, v));
        }
    return out;
}

} // namespace wangweave
