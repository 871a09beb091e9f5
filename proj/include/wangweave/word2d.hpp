#pragma once

#include <compare>
#include <set>
#include <stdexcept>
#include <vector>

namespace wangweave {

// Rectangular word over tile indices. Storage is row-major with row 0 at the
// bottom (Cartesian orientation); serialization reverses rows for display.
struct Word2D {
    int n1 = 0, n2 = 0;      // width, height
    std::vector<int> cells;  // cells[y * n1 + x]

    Word2D() = default;
    Word2D(int w, int h, int fill = 0) : n1(w), n2(h), cells(static_cast<size_t>(w) * h, fill) {}
    static Word2D letter(int a) {
        Word2D w(1, 1);
        w.cells[0] = a;
        return w;
    }

    int at(int x, int y) const { return cells.at(static_cast<size_t>(y) * n1 + x); }
    int& at(int x, int y) { return cells.at(static_cast<size_t>(y) * n1 + x); }
    bool in_bounds(int x, int y) const { return x >= 0 && x < n1 && y >= 0 && y < n2; }

    bool operator==(const Word2D&) const = default;
    auto operator<=>(const Word2D&) const = default;
};

// Concatenation along axis 1 (v to the right of u) or axis 2 (v above u).
// Throws std::invalid_argument when off-axis dimensions differ.
Word2D concat(int axis, const Word2D& u, const Word2D& v);

// True iff v(a + p) = u(a) for every cell a of u.
bool occurs_at(const Word2D& u, const Word2D& v, int px, int py);

// All distinct a x b subwords of w.
std::set<Word2D> factors(const Word2D& w, int a, int b);

} // namespace wangweave
