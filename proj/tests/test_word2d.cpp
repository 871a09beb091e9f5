#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wangweave/word2d.hpp"

using namespace wangweave;

namespace {

// rows given top-to-bottom, as printed
Word2D from_rows(const std::vector<std::vector<int>>& rows) {
    Word2D w(static_cast<int>(rows[0].size()), static_cast<int>(rows.size()));
    for (int r = 0; r < w.n2; ++r)
        for (int x = 0; x < w.n1; ++x) w.at(x, w.n2 - 1 - r) = rows[r][x];
    return w;
}

} // namespace

TEST_CASE("two-axis concatenation reproduces the 5x5 display") {
    Word2D u = from_rows({{2, 8, 7}, {7, 3, 9}, {1, 1, 0}, {6, 6, 7}, {7, 4, 3}});
    Word2D a = from_rows({{4, 5}, {10, 5}});
    Word2D b = from_rows({{3, 10}, {9, 9}, {0, 0}});
    Word2D expected = from_rows({{2, 8, 7, 3, 10},
                                 {7, 3, 9, 9, 9},
                                 {1, 1, 0, 0, 0},
                                 {6, 6, 7, 4, 5},
                                 {7, 4, 3, 10, 5}});
    Word2D right = concat(2, a, b);  // b stacked above a
    CHECK(right.n1 == 2);
    CHECK(right.n2 == 5);
    Word2D got = concat(1, u, right);
    CHECK(got == expected);
    CHECK(got.at(0, 0) == 7);
    CHECK(got.at(4, 0) == 5);
}

TEST_CASE("concat shape mismatch") {
    Word2D u(3, 2), v(1, 3);
    CHECK_THROWS_AS((void)concat(1, u, v), std::invalid_argument);
    CHECK_THROWS_AS((void)concat(2, u, v), std::invalid_argument);
}

TEST_CASE("concat keeps Cartesian orientation") {
    Word2D w = concat(2, Word2D::letter(0), Word2D::letter(1));
    CHECK(w.n1 == 1);
    CHECK(w.n2 == 2);
    CHECK(w.at(0, 0) == 0);  // first operand at the bottom
    CHECK(w.at(0, 1) == 1);
}

TEST_CASE("concat associativity per axis") {
    Word2D a(2, 1, 1), b(2, 2, 2), c(2, 3, 3);
    CHECK(concat(2, concat(2, a, b), c) == concat(2, a, concat(2, b, c)));
    Word2D d(1, 3, 4), e(2, 3, 5), f(3, 3, 6);
    CHECK(concat(1, concat(1, d, e), f) == concat(1, d, concat(1, e, f)));
}

TEST_CASE("occurrence testing") {
    Word2D w = from_rows({{2, 8, 7, 3, 10},
                          {7, 3, 9, 9, 9},
                          {1, 1, 0, 0, 0},
                          {6, 6, 7, 4, 5},
                          {7, 4, 3, 10, 5}});
    CHECK(occurs_at(w, w, 0, 0));
    CHECK(occurs_at(Word2D::letter(9), w, 2, 3));
    CHECK_FALSE(occurs_at(Word2D::letter(9), w, 0, 0));
    Word2D big(6, 6);
    CHECK_FALSE(occurs_at(big, w, 0, 0));
    // occurs_at(u, concat(i,u,v), 0) always holds
    Word2D v(5, 2, 3);
    CHECK(occurs_at(w, concat(2, w, v), 0, 0));
}

TEST_CASE("factor extraction") {
    Word2D w = from_rows({{2, 8, 7, 3, 10},
                          {7, 3, 9, 9, 9},
                          {1, 1, 0, 0, 0},
                          {6, 6, 7, 4, 5},
                          {7, 4, 3, 10, 5}});
    auto whole = factors(w, 5, 5);
    CHECK(whole == std::set<Word2D>{w});
    auto letters = factors(w, 1, 1);
    std::set<int> seen;
    for (int c : w.cells) seen.insert(c);
    CHECK(letters.size() == seen.size());
    CHECK(letters.size() <= 11);
    auto twos = factors(w, 2, 2);
    CHECK(static_cast<int>(twos.size()) <= 4 * 4);
}
