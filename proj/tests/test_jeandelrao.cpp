#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wangweave/jeandelrao.hpp"

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

TEST_CASE("embedded reference data") {
    CHECK(jr::tileset("T0")[0] == WangTile{"2", "4", "2", "1"});
    CHECK(jr::tileset("T5")[0] == WangTile{"2113", "5", "2130", "1"});
    CHECK(jr::tileset("U").size() == 19);
    CHECK(jr::morphism("omegaU").rule(18) == from_rows({{2, 0}, {14, 8}}));
    CHECK(jr::chain_markers("T0") == std::set<int>{0, 1});
    CHECK(jr::u_color_map().size() == 16);
    CHECK_THROWS_AS((void)jr::tileset("T99"), std::invalid_argument);
    CHECK_THROWS_AS((void)jr::morphism("nope"), std::invalid_argument);
    CHECK_THROWS_AS((void)jr::chain_markers("T5"), std::invalid_argument);
}

TEST_CASE("horizontal color collapse") {
    CHECK(jr::decorate_color("6") == "0");
    CHECK(jr::decorate_color("5") == "1");
    CHECK(jr::decorate_color("0") == "0");
    CHECK(jr::decorate_color("65") == "01");
    CHECK(jr::decorate_color("213") == "213");
}

TEST_CASE("certified tile removal") {
    const TileSet& T4p = jr::tileset("T4p");
    CHECK_THROWS_AS((void)jr::remove_forbidden_tiles(T4p, false), std::runtime_error);
    auto [T4, iota] = jr::remove_forbidden_tiles(T4p, true);
    CHECK(T4.size() == 28);
    CHECK(T4 == jr::tileset("T4"));
    CHECK(iota == jr::morphism("iota"));
    for (int k = 0; k <= 23; ++k) CHECK(iota.rule(k) == Word2D::letter(k));
    CHECK(iota.rule(27) == Word2D::letter(29));
}

TEST_CASE("decoration check") {
    auto rep = jr::check_decoration(jr::tileset("T5"), jr::tileset("T4"));
    CHECK(rep.subset_ok);
    CHECK(rep.collision_ok);
    CHECK(rep.dominoes_ok);
    CHECK(rep.ok());
    CHECK(rep.dominoes_with_top_2223 ==
          std::vector<std::pair<int, int>>{{0, 23}, {3, 23}, {7, 22}, {13, 23}, {18, 22}});
}

TEST_CASE("forbidden-set sizes for the undecorated shift") {
    auto f = jr::x4_sft_forbidden_set();
    CHECK(f.d_horizontal.size() == 37);
    CHECK(f.d_vertical.size() == 75);
    CHECK(f.g_horizontal.size() == 4);
    CHECK(f.g_vertical.size() == 315);

    const TileSet& T4 = jr::tileset("T4");
    const Morphism2D& jm = jr::morphism("jmath");
    for (auto [a, b] : f.d_horizontal) {
        int ja = jm.rule(a).at(0, 0), jb = jm.rule(b).at(0, 0);
        CHECK(T4[ja].right == T4[jb].left);
        CHECK(f.g_horizontal.count({ja, jb}) == 0);
    }
    for (auto [a, b] : f.g_vertical) CHECK(T4[a].top == T4[b].bottom);
}

TEST_CASE("adjacency graphs of surviving dominoes") {
    auto g = jr::rauzy_graph(jr::tileset("U"), 1, 2);
    CHECK(g.at(13) == std::set<int>{9});
    std::set<int> preds;
    for (const auto& [a, succ] : g)
        if (succ.count(10)) preds.insert(a);
    CHECK(preds == std::set<int>{18});

    auto g3 = jr::rauzy_graph(jr::tileset("U"), 1, 3);
    for (const auto& [a, succ] : g3)
        for (int b : succ) CHECK(g.at(a).count(b) == 1);
}

TEST_CASE("fault lines and the slid composite") {
    jr::Window win{-5, 5, -4, 3};
    for (const auto& [rows, color] : std::vector<std::pair<std::vector<std::vector<int>>, Color>>{
             {{{9, 14}, {1, 6}}, "0"},
             {{{17, 13}, {6, 5}}, "0"},
             {{{9, 14}, {8, 16}}, "1"},
             {{{17, 13}, {16, 15}}, "1"}}) {
        auto res = jr::fault_line_patch(from_rows(rows), win);
        CHECK(res.fault_color == color);
        CHECK(res.fault_row_ok);
        CHECK(res.slid_valid);
        CHECK(res.diagonal_ok);
        CHECK(res.diagonal_broken);
        CHECK(res.ok());
    }
    CHECK_THROWS_AS((void)jr::fault_line_patch(from_rows({{16, 13}, {2, 4}}), win),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)jr::fault_line_patch(Word2D(1, 1), win), std::invalid_argument);
}

TEST_CASE("original tile frequencies") {
    Eigen::VectorXd v = jr::t0_frequencies();
    REQUIRE(v.size() == 11);
    CHECK(std::abs(v.sum() - 1.0) < 1e-12);
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    auto near = [](double a, double b) { return std::abs(a - b) < 1e-10; };
    CHECK(near(v(7), 5.0 / (12 * phi + 14)));
    for (int t : {0, 1, 3, 6, 9}) CHECK(near(v(t), 1.0 / (2 * phi + 6)));
    CHECK(near(v(5), 1.0 / (5 * phi + 4)));
    for (int t : {4, 8, 10}) CHECK(near(v(t), 1.0 / (8 * phi + 2)));
    CHECK(near(v(2), 1.0 / (18 * phi + 10)));
}

TEST_CASE("pipeline replay is deterministic and green") {
    jr::PipelineOptions opts;
    opts.skip_unsat_check = true;
    auto a = jr::run_pipeline(opts);
    CHECK(a.ok);
    CHECK(a.steps.size() == 16);
    for (const auto& s : a.steps) CHECK(s.ok);
    auto b = jr::run_pipeline(opts);
    CHECK(a.to_json().dump() == b.to_json().dump());
}
