#include "wangweave/svg.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace wangweave {

namespace {

std::string fill_for(const RenderSpec& spec, const Color& c) {
    auto it = spec.palette.find(c);
    if (it != spec.palette.end()) return it->second;
    // FNV-1a hash spread over a pastel palette; deterministic across platforms.
    uint32_t h = 2166136261u;
    for (unsigned char ch : c) h = (h ^ ch) * 16777619u;
    int hue = static_cast<int>(h % 360u);
    std::ostringstream os;
    os << "hsl(" << hue << ",60%,75%)";
    return os.str();
}

void emit_tile(std::ostringstream& os, const RenderSpec& spec, const WangTile& t, int px, int py) {
    int s = spec.cell_size;
    int cx = px + s / 2, cy = py + s / 2;
    auto tri = [&](const Color& c, int x1, int y1, int x2, int y2) {
        os << "<polygon points=\"" << x1 << ',' << y1 << ' ' << x2 << ',' << y2 << ' ' << cx << ','
           << cy << "\" fill=\"" << fill_for(spec, c) << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    };
    tri(t.top, px, py, px + s, py);
    tri(t.right, px + s, py, px + s, py + s);
    tri(t.bottom, px, py + s, px + s, py + s);
    tri(t.left, px, py, px, py + s);
    if (spec.labels) {
        auto label = [&](const Color& c, int x, int y) {
            os << "<text x=\"" << x << "\" y=\"" << y
               << "\" font-size=\"" << s / 6 << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
               << c << "</text>\n";
        };
        label(t.top, cx, py + s / 8);
        label(t.bottom, cx, py + s - s / 8);
        label(t.left, px + s / 8, cy);
        label(t.right, px + s - s / 8, cy);
    }
}

std::string document(int width, int height, const std::string& body) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\">\n<g>\n"
       << body << "</g>\n</svg>\n";
    return os.str();
}

} // namespace

std::string render_svg(const TileSet& T, const RenderSpec& spec) {
    int s = spec.cell_size, gap = s / 4;
    std::ostringstream body;
    for (int t = 0; t < T.size(); ++t) emit_tile(body, spec, T[t], t * (s + gap), 0);
    int width = T.size() == 0 ? s : T.size() * (s + gap) - gap;
    return document(width, s, body.str());
}

std::string render_svg(const TileSet& T, const Word2D& patch, const RenderSpec& spec) {
    int s = spec.cell_size;
    std::ostringstream body;
    for (int y = 0; y < patch.n2; ++y)
        for (int x = 0; x < patch.n1; ++x)
            emit_tile(body, spec, T[patch.at(x, y)], x * s, (patch.n2 - 1 - y) * s);
    return document(std::max(1, patch.n1) * s, std::max(1, patch.n2) * s, body.str());
}

std::string render_svg(const TileSet& T, const SparsePatch& patch, const RenderSpec& spec) {
    int s = spec.cell_size;
    if (patch.cells.empty()) return document(s, s, "");
    int x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    bool first = true;
    for (const auto& [pos, t] : patch.cells) {
        (void)t;
        if (first) {
            x0 = x1 = pos.first;
            y0 = y1 = pos.second;
            first = false;
        }
        x0 = std::min(x0, pos.first);
        x1 = std::max(x1, pos.first);
        y0 = std::min(y0, pos.second);
        y1 = std::max(y1, pos.second);
    }
    std::ostringstream body;
    for (const auto& [pos, t] : patch.cells)
        emit_tile(body, spec, T[t], (pos.first - x0) * s, (y1 - pos.second) * s);
    return document((x1 - x0 + 1) * s, (y1 - y0 + 1) * s, body.str());
}

} // namespace wangweave
