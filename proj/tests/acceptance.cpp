// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "pfm/constructions.hpp"
#include "pfm/dynamics.hpp"
#include "pfm/laminations.hpp"

using namespace pfm;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

int failures = 0;

void run(int id, double budget_s, const char* title, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && secs > budget_s) {
        o.pass = false;
        o.detail = "over time budget of " + std::to_string(budget_s) + " s";
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
}

std::vector<PfmMap> all_constructions() {
    std::vector<PfmMap> maps;
    for (int d = 2; d <= 6; ++d) maps.push_back(bowen_series(build_G_d(d)));
    for (int d = 2; d <= 5; ++d) {
        maps.push_back(bowen_series(build_G_d1(d)));
        maps.push_back(bowen_series(build_G_d2(d)));
    }
    for (int k = 3; k <= 6; ++k) {
        maps.push_back(higher_bowen_series(k));
        maps.push_back(completely_folding(k));
    }
    return maps;
}

}  // namespace

int main() {
    run(1, 1.0, "exact degrees", [](Outcome& o) {
        for (int d = 2; d <= 6; ++d)
            o.require(degree(bowen_series(build_G_d(d))) == 2 * d - 1, "BS(G_" + std::to_string(d) + ")");
        for (int d = 2; d <= 5; ++d) {
            o.require(degree(bowen_series(build_G_d1(d))) == 2 * d - 2, "BS(G_d1) d=" + std::to_string(d));
            o.require(degree(bowen_series(build_G_d2(d))) == 2 * d - 1, "BS(G_d2) d=" + std::to_string(d));
        }
        for (int k = 3; k <= 6; ++k) {
            o.require(degree(higher_bowen_series(k)) == (k - 1) * (k - 1), "hBS k=" + std::to_string(k));
            o.require(degree(completely_folding(k)) == (k - 1) * (k - 1), "cfm k=" + std::to_string(k));
        }
    });

    run(2, 1.0, "continuity and C1 of BS(G_d)", [](Outcome& o) {
        for (int d = 2; d <= 6; ++d) {
            ContinuityReport r = verify_continuity(bowen_series(build_G_d(d)));
            o.require(r.max_residual < 1e-10, "continuity residual d=" + std::to_string(d));
            for (double m : r.c1_mismatch) o.require(m < 1e-8, "C1 mismatch d=" + std::to_string(d));
        }
    });

    run(3, 1.0, "transition matrix of BS(G_3)", [](Outcome& o) {
        TransitionMatrix M = transition_matrix(bowen_series(build_G_d(3)));
        o.require(M.markov_ok, "Markov flag");
        TransitionMatrix P = M.permuted({0, 5, 1, 4, 2, 3});  // I_1, I_-1, I_2, I_-2, I_3, I_-3
        for (int j = 0; j < 6; ++j)
            for (int l = 0; l < 6; ++l)
                o.require(P.entries[j][l] == (l == (j ^ 1) ? 0 : 1),
                          "entry (" + std::to_string(j) + "," + std::to_string(l) + ")");
        for (int s : M.row_sums()) o.require(s == 5, "row sum");
    });

    run(4, 5.0, "periodic breakpoints are symmetrically parabolic", [](Outcome& o) {
        int seen = 0;
        for (const PfmMap& A : all_constructions()) {
            BreakpointReport r = breakpoint_report(A, 24);
            for (const PeriodicBreakpoint& p : r.periodic) {
                ++seen;
                o.require(p.cls == BreakClass::sym_parabolic, std::string("class ") + to_string(p.cls));
                o.require(!is_mixed(p.cls), "mixed breakpoint");
                o.require(std::abs(p.left_multiplier - 1.0) < 1e-7 && std::abs(p.right_multiplier - 1.0) < 1e-7,
                          "multiplier deviation");
            }
        }
        o.require(seen > 0, "no periodic breakpoints found");
    });

    run(5, 30.0, "orbit equivalence of BS(G_d) and hBS(k)", [](Outcome& o) {
        for (int d = 2; d <= 5; ++d) {
            PfmMap A = bowen_series(build_G_d(d));
            auto r = test_orbit_equivalence(A, A.group(), 200, 2, 7);
            o.require(r.pass, "BS(G_" + std::to_string(d) + ")");
            o.require(r.max_forward_used <= 1 && r.max_backward_used <= 1, "witness depth for d=" + std::to_string(d));
        }
        for (int k = 3; k <= 5; ++k) {
            PfmMap A = higher_bowen_series(k);
            auto r = test_orbit_equivalence(A, A.group(), 200, 2, 7);
            o.require(r.pass, "hBS(" + std::to_string(k) + ")");
            o.require(r.max_forward_used <= 1 && r.max_backward_used <= 1, "witness depth for k=" + std::to_string(k));
        }
    });

    run(6, 5.0, "non-example fails orbit equivalence at its fixed pair", [](Outcome& o) {
        FixedPair fp = non_example_fixed_pair(3);
        PfmMap B = non_example_B(3);
        PfmMap A = bowen_series(build_G_d(3));
        o.require(circular_distance(B.apply(fp.p), fp.p) < 1e-10, "p is not B-fixed");
        o.require(circular_distance(B.apply(fp.q), fp.q) < 1e-10, "q is not B-fixed");
        o.require(circular_distance(A.apply(fp.p), fp.q) < 1e-10, "q != BS(p)");
        auto r = test_orbit_equivalence(B, B.group(), 200, 2, 7, {fp.p});
        o.require(!r.pass, "orbit equivalence did not fail");
        o.require(r.failing_point && circular_distance(*r.failing_point, fp.p) < 1e-12, "witness point is not p");
        o.require(r.failing_generator == fp.generator_word.front(), "witness generator differs");
    });

    run(7, 5.0, "boundary and fold characterizations", [](Outcome& o) {
        for (int d = 2; d <= 5; ++d) {
            o.require(boundary_self_map_check(bowen_series(build_G_d(d))).passes, "G_d");
            o.require(boundary_self_map_check(bowen_series(build_G_d1(d))).passes, "G_d1");
            o.require(boundary_self_map_check(bowen_series(build_G_d2(d))).passes, "G_d2");
        }
        for (int k = 3; k <= 6; ++k) {
            PfmMap h = higher_bowen_series(k), c = completely_folding(k);
            o.require(!boundary_self_map_check(h).passes, "hBS passed the boundary check");
            o.require(!boundary_self_map_check(c).passes, "cfm passed the boundary check");
            o.require(folding_check(h).no_fold(), "hBS folds");
            o.require(component_injectivity(h).injective, "hBS component injectivity");
            o.require(!folding_check(c).no_fold(), "cfm has no fold");
        }
    });

    run(8, 10.0, "second iterate", [](Outcome& o) {
        for (int d = 2; d <= 3; ++d) {
            PfmMap A = bowen_series(build_G_d(d));
            PfmMap S = second_iterate_hbs(A);
            double worst = 0.0;
            for (int i = 0; i < 1000; ++i) {
                CirclePoint t(i / 1000.0);
                worst = std::max(worst, circular_distance(A.apply(A.apply(t)), S.apply(t)));
            }
            o.require(worst < 1e-9, "sup distance " + std::to_string(worst));
            o.require(degree(S) == (2 * d - 1) * (2 * d - 1), "degree");
            o.require(inner_domain(S).vertices.size() == static_cast<std::size_t>(2 * d), "inner domain size");
        }
    });

    run(9, 60.0, "conjugacy table of BS(G_3) at depth 12", [](Outcome& o) {
        PfmMap A = bowen_series(build_G_d(3));
        ConjugacyTable H = conjugacy_to_power(A, 12);
        o.require(H.strictly_monotone(), "not monotone");
        o.require(H.table_residual() < 1e-12, "table residual " + std::to_string(H.table_residual()));
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            double th = u(rng);
            double th5 = th * 5.0 - std::floor(th * 5.0);
            worst = std::max(worst, circular_distance(A.apply(H.interpolate(th)), H.interpolate(th5)));
        }
        o.require(worst <= H.max_gap(), "interpolated residual above maxGap");
        const auto& gaps = H.level_max_gap();
        for (int m = 7; m <= 12; ++m) o.require(gaps[m] < gaps[m - 1], "maxGap not decreasing at " + std::to_string(m));
    });

    run(10, 120.0, "rigidity between z^3 and z^4", [](Outcome& o) {
        RigidityReport r = compose_rigidity(3, 8);
        o.require(r.phi_monotone && r.phi_zero == 0.0, "Phi not anchored and monotone");
        o.require(r.pass, std::to_string(r.failures) + " failures");
        ConjugacyTable a = conjugacy_to_power(bowen_series(build_G_d(5)), 6);
        ConjugacyTable b = conjugacy_to_power(higher_bowen_series(4), 6);
        o.require(a.n() == 9 && b.n() == 9, "degrees are not both 9");
        o.require(a.strictly_monotone() && b.strictly_monotone(), "degree-9 tables");
    });

    run(11, 60.0, "lamination invariance", [](Outcome& o) {
        for (int d = 4; d <= 5; ++d) {
            GroupPresentation G = build_G_d(d);
            PfmMap A = bowen_series(G);
            for (const GroupElement& g : enumerate_S_d(d)) {
                InvarianceReport r = invariance_check(A, expand(G, {g.word}, 3));
                o.require(r.invariant(), "S_" + std::to_string(d) + " element " + G.word_label(g.word));
            }
        }
        PfmMap h = higher_bowen_series(5);
        o.require(invariance_check(h, expand(h.group(), {{2}}, 3)).invariant(), "{g2} under hBS");
        GroupPresentation G5 = build_G_d(5);
        bool rejected = false;
        try {
            rejected = !invariance_check(bowen_series(G5), expand(G5, {{2, 4}}, 3)).invariant();
        } catch (const LeavesCross&) {
            rejected = true;
        }
        o.require(rejected, "g2*g4 accepted");
    });

    run(12, 1.0, "size of S_d", [](Outcome& o) {
        o.require(enumerate_S_d(2).empty(), "S_2 not empty");
        for (int d = 3; d <= 6; ++d) {
            int pairs = 0;
            for (int i = 1; i <= d; ++i)
                for (int j = 1; j <= d; ++j) pairs += std::abs(i - j) > 1;
            o.require(static_cast<int>(enumerate_S_d(d).size()) == (d - 2) + pairs, "d=" + std::to_string(d));
        }
    });

    std::printf("%d of 12 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
