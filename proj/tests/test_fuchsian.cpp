#include <doctest.h>

#include "oracle_values.hpp"
#include "pfm/errors.hpp"
#include "pfm/fuchsian.hpp"

using namespace pfm;

TEST_CASE("G_d vertices and side pairings") {
    for (int d = 2; d <= 6; ++d) {
        GroupPresentation G = build_G_d(d);
        REQUIRE(G.vertices.size() == static_cast<std::size_t>(2 * d));
        for (int v = 0; v < 2 * d; ++v) CHECK(G.vertices[v].turns() == doctest::Approx(v / (2.0 * d)));
        auto pairs = edge_pairings(G);
        CHECK(pairs.size() == static_cast<std::size_t>(d));
    }
    CHECK_THROWS_AS(build_G_d(1), InvalidDegree);
}

TEST_CASE("every side pairing maps edge endpoints onto edge endpoints") {
    for (int d = 2; d <= 5; ++d) {
        for (const GroupPresentation& G : {build_G_d(d), build_G_d1(d), build_G_d2(d)}) {
            const std::size_t n = G.vertices.size();
            for (const EdgePairing& p : edge_pairings(G)) {
                const MoebiusMap& g = G.generator(p.generator);
                CirclePoint a = G.vertices[p.from_edge], b = G.vertices[(p.from_edge + 1) % n];
                CirclePoint c = G.vertices[p.to_edge], e = G.vertices[(p.to_edge + 1) % n];
                double d1 = std::max(circular_distance(g.apply(a), e), circular_distance(g.apply(b), c));
                double d2 = std::max(circular_distance(g.apply(a), c), circular_distance(g.apply(b), e));
                CHECK(std::min(d1, d2) < 1e-10);
            }
        }
    }
}

TEST_CASE("G_{d,2} carries an extra order-two generator") {
    GroupPresentation G = build_G_d2(3);
    CHECK(G.generators.size() == 4);
    CHECK(G.generators.back().label == "g-3");
    MoebiusMap h = G.generator(4);
    CHECK(distance(h * h, MoebiusMap::identity()) < 1e-10);
}

TEST_CASE("word evaluation composes as written") {
    GroupPresentation G = build_G_d(3);
    MoebiusMap w = G.evaluate({-1, 3});
    CHECK(distance(w, G.generator(1).inverse() * G.generator(3)) < 1e-14);
    CHECK(G.word_label({-1, 3}) == "g1^-1*g3");
    CHECK(distance(G.evaluate({}), MoebiusMap::identity()) < 1e-15);
}

TEST_CASE("ball enumeration") {
    CHECK(enumerate_ball(build_G_d(2), 2).size() == static_cast<std::size_t>(oracle::kBallG2Radius2));
    CHECK(enumerate_ball(build_G_d(2), 0).size() == 1);
    // free group of rank d: 1 + 2d * sum (2d-1)^i
    auto ball = enumerate_ball(build_G_d(3), 3);
    CHECK(ball.size() == 1 + 6 + 30 + 150);
    Config tiny;
    tiny.ball_cap = 10;
    CHECK_THROWS_AS(enumerate_ball(build_G_d(3), 3, tiny), BallTooLarge);
}
