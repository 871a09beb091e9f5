#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wangweave/core.hpp"
#include "wangweave/jeandelrao.hpp"

using namespace wangweave;

TEST_CASE("fuse through a shared horizontal edge") {
    const TileSet& T0 = jr::tileset("T0");
    const TileSet& T1 = jr::tileset("T1");

    auto f = fuse(2, T0[1], T0[8]);
    REQUIRE(f.has_value());
    CHECK(*f == WangTile{"20", "2", "21", "0"});
    CHECK(*f == T1[11]);

    auto g = fuse(2, T0[0], T0[9]);
    REQUIRE(g.has_value());
    CHECK(*g == WangTile{"21", "2", "21", "1"});
    CHECK(*g == T1[8]);
}

TEST_CASE("fuse is undefined on mismatched shared edges") {
    WangTile u{"a", "b", "c", "d"}, v{"x", "y", "z", "w"};
    CHECK_FALSE(fuse(1, u, v).has_value());  // right(u)=a != z=left(v)
    CHECK_FALSE(fuse(2, u, v).has_value());  // top(u)=b != w=bottom(v)
}

TEST_CASE("fuse associativity where defined") {
    WangTile u{"m", "1", "l", "0"}, v{"m", "2", "l", "1"}, w{"m", "3", "l", "2"};
    auto uv = fuse(2, u, v);
    auto vw = fuse(2, v, w);
    REQUIRE(uv);
    REQUIRE(vw);
    auto left = fuse(2, *uv, w);
    auto right = fuse(2, u, *vw);
    REQUIRE(left);
    REQUIRE(right);
    CHECK(*left == *right);

    WangTile a{"1", "t", "0", "b"}, b{"2", "t", "1", "b"}, c{"3", "t", "2", "b"};
    auto ab = fuse(1, a, b);
    auto bc = fuse(1, b, c);
    REQUIRE(ab);
    REQUIRE(bc);
    CHECK(*fuse(1, *ab, c) == *fuse(1, a, *bc));
}

TEST_CASE("transducer view of a tile set") {
    const TileSet& T0 = jr::tileset("T0");
    Transducer tr = to_transducer(T0);
    CHECK(tr.states.size() == 4);
    CHECK(tr.transitions.size() == 11);
    // tile (2,4,2,1) reads as the transition 2 --1|4--> 2
    CHECK(tr.transitions[0] == Transition{"2", "2", "1", "4"});
    CHECK(tr.connected_components() == 2);

    Transducer empty = to_transducer(TileSet{});
    CHECK(empty.states.empty());
    CHECK(empty.transitions.empty());
}

TEST_CASE("transducer product") {
    const TileSet& T0 = jr::tileset("T0");
    CHECK(transducer_product(T0, TileSet{}, false).size() == 0);
    CHECK(transducer_product(T0, TileSet{}, true).size() == 0);

    // unpruned product = all defined vertical fusions
    TileSet prod = transducer_product(T0, T0, false);
    int pairs = 0;
    for (const auto& u : T0.tiles)
        for (const auto& v : T0.tiles)
            if (u.top == v.bottom) ++pairs;
    CHECK(prod.size() == pairs);
    int k = 0;
    for (const auto& u : T0.tiles)
        for (const auto& v : T0.tiles)
            if (auto f = fuse(2, u, v)) CHECK(prod[k++] == *f);
}

TEST_CASE("product of the two components of the Jeandel-Rao transducer") {
    const TileSet& T0 = jr::tileset("T0");
    TileSet big, small;  // state components {0,1,3} (tiles 2..10) and {2} (tiles 0,1)
    for (int i = 2; i <= 10; ++i) big.tiles.push_back(T0[i]);
    small.tiles.push_back(T0[0]);
    small.tiles.push_back(T0[1]);

    CHECK(transducer_product(small, big, false).size() == 5);
    CHECK(transducer_product(small, big, true).size() == 5);
    CHECK(transducer_product(big, small, false).size() == 5);
    CHECK(transducer_product(big, small, true).size() == 4);
    CHECK(transducer_product(big, big, false).size() == 25);
    CHECK(transducer_product(big, big, true).size() == 23);
    CHECK(transducer_product(small, small, false).size() == 0);
}

TEST_CASE("tile-set equivalence") {
    const TileSet& T0 = jr::tileset("T0");
    auto self = equivalent(T0, T0);
    REQUIRE(self.has_value());
    for (const auto& [k, v] : self->vertical) CHECK(k == v);
    for (const auto& [k, v] : self->horizontal) CHECK(k == v);

    CHECK_THROWS_AS((void)equivalent(T0, jr::tileset("T1")), std::invalid_argument);

    auto bij = equivalent(jr::tileset("U"), jr::tileset("T12"));
    REQUIRE(bij.has_value());
    CHECK(bij->vertical.at("A") == "21030021300211300");
    CHECK(bij->vertical.at("J") == "21030020331");
    CHECK(bij->horizontal.at("K") == "51160511");
    CHECK(bij->horizontal.at("O") == "51060");

    // symmetry: inverting the found bijection relates the sets the other way
    auto inv = equivalent(jr::tileset("T12"), jr::tileset("U"));
    REQUIRE(inv.has_value());
    for (const auto& [k, v] : bij->vertical) CHECK(inv->vertical.at(v) == k);
}

TEST_CASE("inequivalent same-size sets") {
    TileSet A{{{"0", "0", "0", "0"}, {"1", "0", "0", "0"}}};
    TileSet B{{{"0", "0", "0", "0"}, {"0", "1", "0", "0"}}};
    CHECK_FALSE(equivalent(A, B).has_value());
}

TEST_CASE("duplicate detection and color listings") {
    TileSet dup{{{"a", "b", "c", "d"}, {"a", "b", "c", "d"}}};
    CHECK(dup.has_duplicates());
    const TileSet& T0 = jr::tileset("T0");
    CHECK_FALSE(T0.has_duplicates());
    CHECK(T0.vertical_colors().size() == 4);
    CHECK(T0.horizontal_colors().size() == 5);
}
