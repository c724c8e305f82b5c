#include <doctest.h>

#include "pfm/constructions.hpp"
#include "pfm/laminations.hpp"

using namespace pfm;

TEST_CASE("axes") {
    GroupPresentation G = build_G_d(4);
    Leaf l = axis(G.generator(2));
    CHECK(l.a.turns() < l.b.turns());
    CHECK_THROWS_AS(axis(G.generator(1)), NotHyperbolic);
    CHECK_THROWS_AS(make_leaf(CirclePoint(0.2), CirclePoint(0.2)), DegenerateEndpoints);
}

TEST_CASE("unlinked check") {
    std::vector<Leaf> ok{make_leaf(CirclePoint(0.1), CirclePoint(0.3)), make_leaf(CirclePoint(0.4), CirclePoint(0.9)),
                         make_leaf(CirclePoint(0.3), CirclePoint(0.4))};
    CHECK_FALSE(unlinked_check(ok).has_value());
    ok.push_back(make_leaf(CirclePoint(0.2), CirclePoint(0.5)));
    CHECK(unlinked_check(ok).has_value());
}

TEST_CASE("S_d catalogue") {
    CHECK(enumerate_S_d(2).empty());
    CHECK(enumerate_S_d(4).size() == 8);
    for (int d = 3; d <= 6; ++d) {
        int pairs = 0;
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j)
                if (std::abs(i - j) > 1) ++pairs;
        CHECK(static_cast<int>(enumerate_S_d(d).size()) == (d - 2) + pairs);
        CHECK(expected_S_d_size(d) == (d - 2) + pairs);
        for (const GroupElement& g : enumerate_S_d(d)) CHECK(classify(g.matrix) == MoebiusClass::hyperbolic);
    }
    CHECK_THROWS_AS(enumerate_S_d(1), InvalidDegree);
}

TEST_CASE("{g2} in G_4 expands to an invariant unlinked lamination") {
    GroupPresentation G = build_G_d(4);
    Lamination L = expand(G, {{2}}, 3);
    CHECK(L.leaves.size() > 10);
    CHECK_FALSE(unlinked_check(L.leaves).has_value());
    InvarianceReport r = invariance_check(bowen_series(G), L);
    CHECK(r.invariant());
    CHECK(r.checked == static_cast<int>(L.leaves.size()));
}

TEST_CASE("a non-simple curve produces crossing translates") {
    GroupPresentation G = build_G_d(5);
    CHECK_THROWS_AS(expand(G, {{2, 4}}, 3), LeavesCross);
}

TEST_CASE("a non-admissible element violates invariance") {
    GroupPresentation G = build_G_d(5);
    PfmMap A = bowen_series(G);
    bool rejected = false;
    try {
        Lamination L = expand(G, {{1, -2, 3}}, 3);
        rejected = !invariance_check(A, L).invariant();
    } catch (const LeavesCross&) {
        rejected = true;
    }
    CHECK(rejected);
}

TEST_CASE("pushed leaves are unlinked and compatible with z^n") {
    GroupPresentation G = build_G_d(4);
    PfmMap A = bowen_series(G);
    Lamination L = expand(G, {{2}}, 2);
    ConjugacyTable H = conjugacy_to_power(A, 6);
    std::vector<std::pair<double, double>> raw;
    for (const Leaf& l : L.leaves) raw.push_back({l.a.turns(), l.b.turns()});
    auto pushed = push_lamination(H, raw, H.max_gap());
    CHECK(pushed.size() == raw.size());
    std::vector<Leaf> pl;
    for (const auto& p : pushed) pl.push_back(make_leaf(CirclePoint(p.u), CirclePoint(p.v)));
    CHECK_FALSE(unlinked_check(pl, 1e-9).has_value());
    // Pushed endpoints are known to one grid cell 7^-6; multiplying by 7 scales that.
    const double cell = 1.0 / static_cast<double>(H.size());
    CompatibilityReport c = mn_compatibility(pushed, 7, 2.0 * 7.0 * cell);
    CHECK(c.ok());
    CHECK(c.resolved == c.checked);
    CHECK_THROWS_AS(push_lamination(H, raw, 1e-15), LeafOutsideResolution);
}
