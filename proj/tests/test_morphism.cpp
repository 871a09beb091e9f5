#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wangweave/jeandelrao.hpp"
#include "wangweave/morphism.hpp"
#include "wangweave/solver.hpp"

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

TEST_CASE("block application of the self-similarity") {
    const Morphism2D& m = jr::morphism("omegaU");
    Word2D seed = from_rows({{17, 13}, {6, 5}});
    Word2D once = apply(m, seed);
    CHECK(once == from_rows({{4, 1, 6, 1}, {13, 9, 14, 11}, {15, 8, 16, 8}}));
    Word2D twice = apply(m, once);
    CHECK(twice == from_rows({{17, 8, 16, 15, 8, 16},
                              {6, 1, 3, 7, 1, 2},
                              {14, 11, 17, 13, 9, 14},
                              {6, 1, 6, 5, 1, 6},
                              {12, 9, 14, 18, 10, 14}}));
}

TEST_CASE("identity morphism and shape errors") {
    Morphism2D id = Morphism2D::identity(5);
    Word2D w(3, 2, 4);
    CHECK(apply(id, w) == w);

    Morphism2D bad;
    bad.domain_size = bad.codomain_size = 2;
    bad.rules = {Word2D(1, 1, 0), Word2D(1, 2, 1)};
    Word2D row(2, 1);
    row.at(0, 0) = 0;
    row.at(1, 0) = 1;  // heights 1 and 2 in one row
    CHECK_THROWS_AS((void)apply(bad, row), std::invalid_argument);
}

TEST_CASE("composition of the first pipeline stages") {
    Morphism2D chain = compose(jr::morphism("omega0"),
                       compose(jr::morphism("omega1"),
                       compose(jr::morphism("omega2"),
                       compose(jr::morphism("omega3"), jr::morphism("iota")))));
    CHECK(chain == jr::morphism("omega0123"));
    CHECK(chain.rule(0) == from_rows({{7}, {3}, {9}, {0}}));
    CHECK(chain.rule(13) == from_rows({{7}, {3}, {3}, {9}, {0}}));

    const Morphism2D& w0 = jr::morphism("omega0");
    CHECK(compose(Morphism2D::identity(w0.codomain_size), w0) == w0);
    CHECK(compose(w0, Morphism2D::identity(w0.domain_size)) == w0);
}

TEST_CASE("incidence matrices") {
    const Morphism2D& m = jr::morphism("omegaU");
    Eigen::MatrixXi M = incidence_matrix(m);
    CHECK(M.rows() == 19);
    CHECK(M.cols() == 19);
    // letter 0 maps to the single letter 17
    CHECK(m.rule(0) == Word2D::letter(17));
    CHECK(M.col(0).sum() == 1);
    CHECK(M(17, 0) == 1);

    Eigen::MatrixXi I = incidence_matrix(Morphism2D::identity(7));
    CHECK(I == Eigen::MatrixXi::Identity(7, 7));

    // homomorphism property
    const Morphism2D& w0 = jr::morphism("omega0");
    const Morphism2D& w1 = jr::morphism("omega1");
    CHECK(incidence_matrix(compose(w0, w1)) == incidence_matrix(w0) * incidence_matrix(w1));
}

TEST_CASE("primitivity and letter frequencies") {
    const Morphism2D& m = jr::morphism("omegaU");
    auto p = is_primitive(m);
    CHECK(p.primitive);
    CHECK(p.witness_power >= 1);

    CHECK_FALSE(is_primitive(Morphism2D::identity(3)).primitive);
    CHECK_THROWS_AS((void)perron_frequencies(Morphism2D::identity(3)), std::runtime_error);

    Eigen::VectorXd v = perron_frequencies(m);
    CHECK(v.size() == 19);
    CHECK(v.minCoeff() > 0);
    CHECK(std::abs(v.sum() - 1.0) < 1e-12);
    Eigen::VectorXd w = incidence_matrix(m).cast<double>() * v;
    double lambda = w.sum();
    CHECK((w - lambda * v).norm() < 1e-10);
}

TEST_CASE("quotient by a letter projection") {
    const Morphism2D& m = jr::morphism("omegaU");
    std::vector<int> id_psi(19);
    for (int i = 0; i < 19; ++i) id_psi[i] = i;
    auto q = quotient_morphism(m, id_psi, 19);
    REQUIRE(q.has_value());
    CHECK(*q == m);

    // project onto the four letter classes of the self-similar set
    std::vector<int> psi(19);
    for (int i = 0; i < 19; ++i) {
        if (i >= 12) psi[i] = 0;
        else if (i >= 8) psi[i] = 2;
        else if (i >= 2) psi[i] = 1;
        else psi[i] = 3;
    }
    auto tau = quotient_morphism(m, psi, 4);
    REQUIRE(tau.has_value());
    CHECK(tau->rule(0) == from_rows({{1, 3}, {0, 2}}));
    CHECK(tau->rule(1) == from_rows({{0, 2}}));
    CHECK(tau->rule(2) == from_rows({{1}, {0}}));
    CHECK(tau->rule(3) == from_rows({{0}}));

    // a projection mixing letters with different image shapes has no quotient
    std::vector<int> coarse(19, 0);
    coarse[0] = 1;
    CHECK_FALSE(quotient_morphism(m, coarse, 2).has_value());
}

TEST_CASE("seeds of fixed points of the square") {
    const Morphism2D& m = jr::morphism("omegaU");
    const TileSet& U = jr::tileset("U");
    auto f2 = factors_with_surrounding(U, 2, 2, 3);
    CHECK(f2.size() == 50);
    auto seeds = square_fixed_seeds(m, f2);
    CHECK(seeds.size() == 8);
    CHECK(seeds.count(from_rows({{17, 13}, {6, 5}})) == 1);
    CHECK(seeds.count(from_rows({{9, 14}, {1, 6}})) == 1);
    CHECK(square_fixed_seeds(m, {}).empty());
}

TEST_CASE("growing a fixed patch around the origin") {
    const Morphism2D& m = jr::morphism("omegaU");
    Word2D seed = from_rows({{17, 13}, {6, 5}});

    AnchoredPatch p0 = generate_fixed_patch(m, seed, 0);
    CHECK(p0.word == seed);
    CHECK(p0.ax == -1);
    CHECK(p0.ay == -1);

    AnchoredPatch p1 = generate_fixed_patch(m, seed, 1);
    CHECK(p1.word.n1 == 6);
    CHECK(p1.word.n2 == 5);

    AnchoredPatch prev = p0;
    for (int n = 1; n <= 3; ++n) {
        AnchoredPatch cur = generate_fixed_patch(m, seed, n);
        CHECK(occurs_at(prev.word, cur.word, prev.ax - cur.ax, prev.ay - cur.ay));
        CHECK(patch_valid(jr::tileset("U"), cur.word));
        prev = cur;
    }
}
