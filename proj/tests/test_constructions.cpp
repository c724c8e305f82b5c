#include <doctest.h>

#include <random>

#include "oracle_values.hpp"
#include "pfm/errors.hpp"
#include "pfm/constructions.hpp"
#include "pfm/dynamics.hpp"

using namespace pfm;

TEST_CASE("degrees of every construction") {
    for (int d = 2; d <= 6; ++d) CHECK(degree(bowen_series(build_G_d(d))) == 2 * d - 1);
    for (int d = 2; d <= 5; ++d) {
        CHECK(degree(bowen_series(build_G_d1(d))) == 2 * d - 2);
        CHECK(degree(bowen_series(build_G_d2(d))) == 2 * d - 1);
    }
    for (int k = 3; k <= 6; ++k) {
        CHECK(degree(higher_bowen_series(k)) == (k - 1) * (k - 1));
        CHECK(degree(completely_folding(k)) == (k - 1) * (k - 1));
    }
    CHECK_THROWS_AS(higher_bowen_series(2), InvalidK);
}

TEST_CASE("cfm and hBS agree pointwise") {
    for (int k = 3; k <= 5; ++k) {
        PfmMap c = completely_folding(k), h = higher_bowen_series(k);
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            CirclePoint t(i / 10000.0 + 1e-7);
            worst = std::max(worst, circular_distance(c.apply(t), h.apply(t)));
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("hBS on a top arc is the Bowen-Series map of the overlapping domain") {
    for (int k = 3; k <= 5; ++k) {
        const int d = k - 1;
        PfmMap h = higher_bowen_series(k);
        for (int j = 1; j <= d; ++j) {
            PfmMap P = polygon_bowen_series(build_G_d(d), overlapping_domain_vertices(k, j), 3);
            const double lo = (j - 1) / (2.0 * d), hi = j / (2.0 * d);
            double worst = 0.0;
            for (int s = 1; s < 500; ++s) {
                CirclePoint t(lo + (hi - lo) * s / 500.0);
                worst = std::max(worst, circular_distance(P.apply(t), h.apply(t)));
            }
            CHECK(worst < 1e-10);
        }
    }
}

TEST_CASE("non-example fixed pair") {
    FixedPair fp = non_example_fixed_pair(3);
    CHECK(fp.p.turns() == doctest::Approx(oracle::kNonExampleP).epsilon(1e-10));
    CHECK(fp.q.turns() == doctest::Approx(oracle::kNonExampleQ).epsilon(1e-10));
    PfmMap B = non_example_B(3);
    CHECK(circular_distance(B.apply(fp.p), fp.p) < 1e-10);
    CHECK(circular_distance(B.apply(fp.q), fp.q) < 1e-10);
    CHECK(circular_distance(bowen_series(build_G_d(3)).apply(fp.p), fp.q) < 1e-10);
}

TEST_CASE("boundary self-map characterization") {
    for (int d = 2; d <= 5; ++d) {
        CHECK(boundary_self_map_check(bowen_series(build_G_d(d))).passes);
        CHECK(boundary_self_map_check(bowen_series(build_G_d1(d))).passes);
        BoundaryCheck two = boundary_self_map_check(bowen_series(build_G_d2(d)));
        CHECK(two.passes);
        CHECK(two.order_two_points == 2);
    }
    for (int k = 3; k <= 5; ++k) {
        CHECK_FALSE(boundary_self_map_check(higher_bowen_series(k)).passes);
        CHECK_FALSE(boundary_self_map_check(completely_folding(k)).passes);
    }
}

TEST_CASE("fold and component characterization") {
    for (int k = 3; k <= 5; ++k) {
        PfmMap h = higher_bowen_series(k);
        CHECK(folding_check(h).no_fold());
        CHECK(component_injectivity(h).injective);
        CHECK_FALSE(folding_check(completely_folding(k)).no_fold());
    }
}

TEST_CASE("hBS(3) inner domain is a triangle at 0, 1/4, 1/2") {
    InnerDomain I = inner_domain(higher_bowen_series(3));
    REQUIRE(I.vertices.size() == 3);
    CHECK(I.vertices[0].turns() == doctest::Approx(0.0));
    CHECK(I.vertices[1].turns() == doctest::Approx(0.25));
    CHECK(I.vertices[2].turns() == doctest::Approx(0.5));
    CHECK(I.breakpoint_indices == std::vector<int>{0, 2, 4});
}

TEST_CASE("second iterate equals BS o BS") {
    for (int d = 2; d <= 4; ++d) {
        PfmMap A = bowen_series(build_G_d(d));
        PfmMap S = second_iterate_hbs(A);
        CHECK(degree(S) == (2 * d - 1) * (2 * d - 1));
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            CirclePoint t(i / 1000.0 + 3e-7);
            worst = std::max(worst, circular_distance(A.apply(A.apply(t)), S.apply(t)));
        }
        CHECK(worst < 1e-9);
        for (const GroupElement& p : S.pieces()) CHECK(p.word.size() % 2 == 0);
        CHECK(inner_domain(S).vertices.size() == static_cast<std::size_t>(2 * d));
    }
}
