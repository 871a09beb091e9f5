#include "wangweave/word2d.hpp"

namespace wangweave {

Word2D concat(int axis, const Word2D& u, const Word2D& v) {
    if (axis == 1) {
        if (u.n2 != v.n2) throw std::invalid_argument("concat: heights differ");
        Word2D w(u.n1 + v.n1, u.n2);
        for (int y = 0; y < w.n2; ++y) {
            for (int x = 0; x < u.n1; ++x) w.at(x, y) = u.at(x, y);
            for (int x = 0; x < v.n1; ++x) w.at(u.n1 + x, y) = v.at(x, y);
        }
        return w;
    }
    if (axis == 2) {
        if (u.n1 != v.n1) throw std::invalid_argument("concat: widths differ");
        Word2D w(u.n1, u.n2 + v.n2);
        for (int x = 0; x < w.n1; ++x) {
            for (int y = 0; y < u.n2; ++y) w.at(x, y) = u.at(x, y);
            for (int y = 0; y < v.n2; ++y) w.at(x, u.n2 + y) = v.at(x, y);
        }
        return w;
    }
    throw std::invalid_argument("concat: axis must be 1 or 2");
}

bool occurs_at(const Word2D& u, const Word2D& v, int px, int py) {
    if (px < 0 || py < 0 || px + u.n1 > v.n1 || py + u.n2 > v.n2) return false;
    for (int y = 0; y < u.n2; ++y)
        for (int x = 0; x < u.n1; ++x)
            if (v.at(px + x, py + y) != u.at(x, y)) return false;
    return true;
}

std::set<Word2D> factors(const Word2D& w, int a, int b) {
    std::set<Word2D> out;
    if (a > w.n1 || b > w.n2 || a <= 0 || b <= 0) return out;
    for (int y = 0; y + b <= w.n2; ++y)
        for (int x = 0; x + a <= w.n1; ++x) {
            Word2D f(a, b);
            for (int dy = 0; dy < b; ++dy)
                for (int dx = 0; dx < a; ++dx) f.at(dx, dy) = w.at(x + dx, y + dy);
            out.insert(std::move(f));
        }
    return out;
}

} // namespace wangweave
