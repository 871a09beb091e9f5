#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wangweave/jeandelrao.hpp"
#include "wangweave/markers.hpp"

using namespace wangweave;

namespace {

std::vector<std::set<int>> classes_of(const std::vector<MarkerCandidate>& cs) {
    std::vector<std::set<int>> out;
    for (const auto& c : cs) out.push_back(c.tiles);
    return out;
}

} // namespace

TEST_CASE("marker criterion on the base tile set") {
    const TileSet& T0 = jr::tileset("T0");
    std::set<int> M{0, 1};
    CHECK(is_marker_subset(T0, M, 2, 1));
    CHECK_FALSE(is_marker_subset(T0, M, 1, 1));

    std::set<int> all;
    for (int i = 0; i < T0.size(); ++i) all.insert(i);
    CHECK_THROWS_AS((void)is_marker_subset(T0, all, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)is_marker_subset(T0, {}, 2, 1), std::invalid_argument);
}

TEST_CASE("marker search on the base tile set") {
    auto cs = find_markers(jr::tileset("T0"), 2, 1);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].tiles == std::set<int>{0, 1});
    CHECK(cs[0].direction == 2);
    CHECK(cs[0].radius == 1);
}

TEST_CASE("marker search after one desubstitution step") {
    auto cs = find_markers(jr::tileset("T1"), 2, 1);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].tiles == std::set<int>{8, 9, 10, 11, 12});
}

TEST_CASE("marker search needing a larger radius") {
    auto cs = find_markers(jr::tileset("T2"), 2, 2);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].tiles == std::set<int>{8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19});
}

TEST_CASE("horizontal markers can come in several classes") {
    auto cs = find_markers(jr::tileset("T6"), 1, 1);
    REQUIRE(cs.size() == 3);
    CHECK(classes_of(cs) == std::vector<std::set<int>>{
        {0, 3, 4, 5, 13, 14, 15, 24, 25},
        {1, 6, 7, 8, 11, 12, 16, 17, 18, 19, 23, 26, 28},
        {2, 9, 10, 20, 21, 22, 27}});
}

TEST_CASE("found classes are disjoint and each passes the criterion") {
    const TileSet& T9 = jr::tileset("T9");
    auto cs = find_markers(T9, 1, 1);
    REQUIRE(cs.size() == 3);
    std::set<int> seen;
    for (const auto& c : cs) {
        CHECK(is_marker_subset(T9, c.tiles, 1, 1));
        for (int t : c.tiles) {
            CHECK(seen.count(t) == 0);
            seen.insert(t);
        }
    }
    CHECK(classes_of(cs) == std::vector<std::set<int>>{
        {0, 1, 2, 3, 9, 10, 11, 12, 13},
        {4, 6, 7, 15, 16, 18, 21},
        {5, 8, 14, 17, 19, 20}});
}

TEST_CASE("no markers at an insufficient radius") {
    CHECK(find_markers(jr::tileset("T2"), 2, 1).empty());
}
