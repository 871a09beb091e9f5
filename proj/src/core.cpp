#include "wangweave/core.hpp"

#include <algorithm>

namespace wangweave {

bool TileSet::has_duplicates() const {
    std::set<WangTile> seen(tiles.begin(), tiles.end());
    return seen.size() != tiles.size();
}

static std::vector<Color> distinct(const std::vector<Color>& in) {
    std::vector<Color> out;
    std::set<Color> seen;
    for (const auto& c : in)
        if (seen.insert(c).second) out.push_back(c);
    return out;
}

std::vector<Color> TileSet::vertical_colors() const {
    std::vector<Color> all;
    for (const auto& t : tiles) {
        all.push_back(t.left);
        all.push_back(t.right);
    }
    return distinct(all);
}

std::vector<Color> TileSet::horizontal_colors() const {
    std::vector<Color> all;
    for (const auto& t : tiles) {
        all.push_back(t.bottom);
        all.push_back(t.top);
    }
    return distinct(all);
}

std::optional<WangTile> fuse(int axis, const WangTile& u, const WangTile& v) {
    if (axis == 1) {
        if (u.right != v.left) return std::nullopt;
        return WangTile{v.right, u.top + v.top, u.left, u.bottom + v.bottom};
    }
    if (axis == 2) {
        if (u.top != v.bottom) return std::nullopt;
        return WangTile{u.right + v.right, v.top, u.left + v.left, u.bottom};
    }
    throw std::invalid_argument("fuse: axis must be 1 or 2");
}

int Transducer::connected_components() const {
    std::map<Color, int> id;
    for (const auto& s : states) id.emplace(s, static_cast<int>(id.size()));
    std::vector<int> parent(id.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& t : transitions) {
        int a = find(id.at(t.src)), b = find(id.at(t.dst));
        if (a != b) parent[a] = b;
    }
    std::set<int> roots;
    for (size_t i = 0; i < parent.size(); ++i) roots.insert(find(static_cast<int>(i)));
    return static_cast<int>(roots.size());
}

Transducer to_transducer(const TileSet& T) {
    Transducer m;
    m.states = T.vertical_colors();
    for (const auto& t : T.tiles)
        m.transitions.push_back({t.left, t.right, t.bottom, t.top});
    return m;
}

TileSet transducer_product(const TileSet& T, const TileSet& S, bool prune) {
    std::vector<WangTile> out;
    for (const auto& u : T.tiles)
        for (const auto& v : S.tiles)
            if (auto f = fuse(2, u, v)) out.push_back(*f);
    if (prune) {
        bool changed = true;
        while (changed) {
            std::set<Color> has_in, has_out;
            for (const auto& t : out) {
                has_in.insert(t.right);
                has_out.insert(t.left);
            }
            std::vector<WangTile> kept;
            for (const auto& t : out)
                if (has_in.count(t.left) && has_out.count(t.right)) kept.push_back(t);
            changed = kept.size() != out.size();
            out = std::move(kept);
        }
    }
    return TileSet{std::move(out)};
}

namespace {

struct EquivSearch {
    const TileSet& T;
    const TileSet& S;
    std::map<Color, Color> vmap, hmap;   // T colors -> S colors
    std::map<Color, Color> vused, hused; // S colors already taken, -> T color
    std::vector<bool> taken;             // S tiles already matched

    bool bind(std::map<Color, Color>& fwd, std::map<Color, Color>& used,
              const Color& a, const Color& b, std::vector<std::pair<bool, Color>>& trail) {
        auto it = fwd.find(a);
        if (it != fwd.end()) return it->second == b;
        auto ut = used.find(b);
        if (ut != used.end()) return false;
        fwd.emplace(a, b);
        used.emplace(b, a);
        trail.emplace_back(&fwd == &vmap, a);
        return true;
    }

    void unwind(const std::vector<std::pair<bool, Color>>& trail) {
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
            auto& fwd = it->first ? vmap : hmap;
            auto& used = it->first ? vused : hused;
            used.erase(fwd.at(it->second));
            fwd.erase(it->second);
        }
    }

    bool match(int ti) {
        if (ti == T.size()) return true;
        const WangTile& t = T[ti];
        for (int si = 0; si < S.size(); ++si) {
            if (taken[si]) continue;
            const WangTile& s = S[si];
            std::vector<std::pair<bool, Color>> trail;
            if (bind(vmap, vused, t.right, s.right, trail) &&
                bind(vmap, vused, t.left, s.left, trail) &&
                bind(hmap, hused, t.top, s.top, trail) &&
                bind(hmap, hused, t.bottom, s.bottom, trail)) {
                taken[si] = true;
                if (match(ti + 1)) return true;
                taken[si] = false;
            }
            unwind(trail);
        }
        return false;
    }
};

} // namespace

std::optional<ColorBijection> equivalent(const TileSet& T, const TileSet& S) {
    if (T.size() != S.size())
        throw std::invalid_argument("equivalent: tile sets differ in cardinality");
    EquivSearch search{T, S};
    search.taken.assign(S.size(), false);
    if (!search.match(0)) return std::nullopt;
    return ColorBijection{search.vmap, search.hmap};
}

} // namespace wangweave
