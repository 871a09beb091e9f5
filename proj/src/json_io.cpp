#include "wangweave/json_io.hpp"

#include <algorithm>

namespace wangweave {

using nlohmann::json;

json tileset_to_json(const TileSet& T) {
    json tiles = json::array();
    for (const auto& t : T.tiles) tiles.push_back({t.right, t.top, t.left, t.bottom});
    return json{{"tiles", tiles}};
}

TileSet tileset_from_json(const json& j) {
    TileSet T;
    for (const auto& t : j.at("tiles")) {
        if (!t.is_array() || t.size() != 4)
            throw std::invalid_argument("tileset: each tile needs four colors");
        T.tiles.push_back({t[0].get<Color>(), t[1].get<Color>(), t[2].get<Color>(), t[3].get<Color>()});
    }
    return T;
}

json word2d_to_json(const Word2D& w) {
    json rows = json::array();
    for (int y = w.n2 - 1; y >= 0; --y) {
        json row = json::array();
        for (int x = 0; x < w.n1; ++x) row.push_back(w.at(x, y));
        rows.push_back(row);
    }
    return json{{"shape", {w.n1, w.n2}}, {"rows_top_to_bottom", rows}};
}

Word2D word2d_from_json(const json& j) {
    const auto& shape = j.at("shape");
    Word2D w(shape.at(0).get<int>(), shape.at(1).get<int>());
    const auto& rows = j.at("rows_top_to_bottom");
    if (static_cast<int>(rows.size()) != w.n2)
        throw std::invalid_argument("word2d: row count does not match shape");
    for (int r = 0; r < w.n2; ++r) {
        const auto& row = rows.at(r);
        if (static_cast<int>(row.size()) != w.n1)
            throw std::invalid_argument("word2d: row length does not match shape");
        for (int x = 0; x < w.n1; ++x) w.at(x, w.n2 - 1 - r) = row.at(x).get<int>();
    }
    return w;
}

json morphism_to_json(const Morphism2D& m) {
    json rules = json::object();
    for (int a = 0; a < m.domain_size; ++a) rules[std::to_string(a)] = word2d_to_json(m.rule(a));
    return json{{"rules", rules}};
}

Morphism2D morphism_from_json(const json& j, int codomain_size) {
    const auto& rules = j.at("rules");
    Morphism2D m;
    m.domain_size = static_cast<int>(rules.size());
    m.rules.assign(m.domain_size, Word2D{});
    int max_letter = -1;
    for (const auto& [key, value] : rules.items()) {
        int a = std::stoi(key);
        if (a < 0 || a >= m.domain_size)
            throw std::invalid_argument("morphism: rule keys must be contiguous from 0");
        m.rules[a] = word2d_from_json(value);
        for (int c : m.rules[a].cells) max_letter = std::max(max_letter, c);
    }
    m.codomain_size = codomain_size >= 0 ? codomain_size : max_letter + 1;
    return m;
}

json sparse_patch_to_json(const SparsePatch& p) {
    std::vector<std::pair<std::pair<int, int>, int>> cells(p.cells.begin(), p.cells.end());
    std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.first.second, a.first.first) < std::make_pair(b.first.second, b.first.first);
    });
    json out = json::array();
    for (const auto& [pos, t] : cells)
        out.push_back({{"x", pos.first}, {"y", pos.second}, {"tile", t}});
    return json{{"cells", out}};
}

SparsePatch sparse_patch_from_json(const json& j) {
    SparsePatch p;
    for (const auto& c : j.at("cells"))
        p.cells[{c.at("x").get<int>(), c.at("y").get<int>()}] = c.at("tile").get<int>();
    return p;
}

} // namespace wangweave
