#include "pfm/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pfm/errors.hpp"

namespace pfm {

PfmMap bowen_series(const GroupPresentation& G, const Config& cfg) {
    const int d = G.d;
    std::vector<Word> words;
    switch (G.family) {
        case Family::PuncturedSphere:
            for (int i = 0; i < 2 * d; ++i) words.push_back(i < d ? Word{i + 1} : Word{-(2 * d - i)});
            break;
        case Family::TwoOrbifold:
            for (int i = 0; i < 2 * d; ++i) {
                if (i < d)
                    words.push_back({i + 1});
                else if (i == d)
                    words.push_back({d + 1});
                else
                    words.push_back({-(2 * d - i + 1)});
            }
            break;
        case Family::OneOrbifold:
            for (int i = 0; i < 2 * d - 1; ++i) words.push_back(i < d ? Word{i + 1} : Word{-(2 * d - 1 - i)});
            break;
        case Family::Generic:
            throw UnsupportedFamily("Bowen-Series construction needs one of the G_d families");
    }
    std::vector<GroupElement> pieces;
    for (const auto& w : words) pieces.push_back(G.element(w));
    PfmMap A(G.vertices, std::move(pieces), G);
    require_continuity(A, cfg);
    return A;
}

namespace {

struct SubArc {
    double start;
    int target;  // arc of A containing the image of this sub-arc
};

// Split arc j of A at the A-preimages of the breakpoints of A.
std::vector<SubArc> subdivide(const PfmMap& A, std::size_t j, const Config& cfg) {
    const MoebiusMap& g = A.piece(j).matrix;
    double a = A.breakpoint(j).turns();
    double ga = g.apply(CirclePoint(a)).turns();
    double L = image_length(A, j);
    std::vector<double> cuts{0.0};
    for (const auto& y : A.breakpoints()) {
        double o = ccw_offset(ga, y.turns());
        if (o > cfg.eps_point && o < L - cfg.eps_point) cuts.push_back(o);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(L);
    MoebiusMap ginv = g.inverse();
    std::vector<SubArc> out;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        double start = s == 0 ? a : ginv.apply(CirclePoint(ga + cuts[s])).turns();
        CirclePoint mid(ga + 0.5 * (cuts[s] + cuts[s + 1]));
        out.push_back({start, static_cast<int>(A.arc_index(mid))});
    }
    return out;
}

bool is_upper_arc(const PfmMap& A, std::size_t m) {
    double mid = A.breakpoint(m).turns() + 0.5 * A.arc_length(m);
    return wrap_turns(mid) < 0.5;
}

GroupElement concat(const GroupElement& outer, const GroupElement& inner) {
    Word w = outer.word;
    w.insert(w.end(), inner.word.begin(), inner.word.end());
    return {std::move(w), compose(outer.matrix, inner.matrix)};
}

// Lower arcs keep the pieces of A; each upper arc is split at the preimages
// of the breakpoints, and a sub-arc gets A o A unless `short_by_A` holds and
// its image is an upper arc.
PfmMap fold_upper(const PfmMap& A, bool short_by_A, const Config& cfg) {
    std::vector<CirclePoint> b;
    std::vector<GroupElement> p;
    for (std::size_t j = 0; j < A.size(); ++j) {
        if (!is_upper_arc(A, j)) {
            b.push_back(A.breakpoint(j));
            p.push_back(A.piece(j));
            continue;
        }
        for (const SubArc& s : subdivide(A, j, cfg)) {
            b.emplace_back(s.start);
            if (short_by_A && is_upper_arc(A, static_cast<std::size_t>(s.target)))
                p.push_back(A.piece(j));
            else
                p.push_back(concat(A.piece(s.target), A.piece(j)));
        }
    }
    PfmMap out(std::move(b), std::move(p), A.group());
    require_continuity(out, cfg);
    return out;
}

void check_k(int k) {
    if (k < 3) throw InvalidK("k must be at least 3, got " + std::to_string(k));
}

}  // namespace

PfmMap completely_folding(int k, const Config& cfg) {
    check_k(k);
    return fold_upper(bowen_series(build_G_d(k - 1), cfg), true, cfg);
}

PfmMap higher_bowen_series(int k, const Config& cfg) { return minimize(completely_folding(k, cfg), cfg); }

PfmMap non_example_B(int d, const Config& cfg) {
    if (d < 3) throw InvalidDegree("non-example needs d >= 3, got " + std::to_string(d));
    return minimize(fold_upper(bowen_series(build_G_d(d), cfg), false, cfg), cfg);
}

FixedPair non_example_fixed_pair(int d, const Config& cfg) {
    if (d < 3) throw InvalidDegree("non-example needs d >= 3, got " + std::to_string(d));
    GroupPresentation G = build_G_d(d);
    MoebiusMap m = G.evaluate({2, 1});
    for (const FixedPoint& f : fixed_points(m, cfg)) {
        if (f.stability != Stability::repelling) continue;
        CirclePoint q = G.generator(1).apply(f.point);
        return {f.point, q, {1}};
    }
    throw NoFixedPoint("g2 o g1 has no repelling fixed point");
}

PfmMap polygon_bowen_series(const GroupPresentation& G, std::vector<CirclePoint> vertices, int radius,
                            const Config& cfg) {
    std::sort(vertices.begin(), vertices.end(),
              [](const CirclePoint& a, const CirclePoint& b) { return a.turns() < b.turns(); });
    const std::size_t n = vertices.size();
    std::vector<GroupElement> ball = enumerate_ball(G, radius, cfg);
    auto vertex_index = [&](CirclePoint p) -> int {
        for (std::size_t i = 0; i < n; ++i)
            if (same_point(vertices[i], p, 1e3 * cfg.eps_point)) return static_cast<int>(i);
        return -1;
    };
    std::vector<GroupElement> pieces;
    for (std::size_t i = 0; i < n; ++i) {
        CirclePoint a = vertices[i], b = vertices[(i + 1) % n];
        bool found = false;
        for (const GroupElement& h : ball) {
            if (h.word.empty()) continue;
            int ia = vertex_index(h.matrix.apply(a));
            int ib = vertex_index(h.matrix.apply(b));
            if (ia < 0 || ib < 0) continue;
            // Orientation-preserving pairing reverses the edge direction.
            if (static_cast<std::size_t>(ia) == (static_cast<std::size_t>(ib) + 1) % n) {
                pieces.push_back(h);
                found = true;
                break;
            }
        }
        if (!found) throw HypothesisViolation("polygon edge " + std::to_string(i) + " has no side pairing in the ball");
    }
    return PfmMap(std::move(vertices), std::move(pieces), G);
}

std::vector<CirclePoint> overlapping_domain_vertices(int k, int j) {
    check_k(k);
    const int d = k - 1;
    if (j < 1 || j > d) throw std::invalid_argument("overlapping domain index out of range");
    GroupPresentation G = build_G_d(d);
    std::vector<CirclePoint> out;
    for (int v = 0; v <= d; ++v) out.emplace_back(static_cast<double>(v) / (2 * d));
    MoebiusMap ginv = G.generator(j).inverse();
    std::vector<double> lower{0.0, 0.5};
    for (int m = 2; m <= d; ++m) lower.push_back(1.0 - static_cast<double>(m - 1) / (2 * d));
    for (double t : lower) {
        CirclePoint p = ginv.apply(CirclePoint(t));
        bool dup = std::any_of(out.begin(), out.end(), [&](CirclePoint q) { return same_point(p, q, 1e-9); });
        if (!dup) out.push_back(p);
    }
    std::sort(out.begin(), out.end(), [](const CirclePoint& a, const CirclePoint& b) { return a.turns() < b.turns(); });
    return out;
}

Geodesic edge_image(const PfmMap& A, std::size_t j, const Config& cfg) {
    const MoebiusMap& g = A.piece(j).matrix;
    return geodesic_between(g.apply(A.breakpoint(j)), g.apply(A.breakpoint(j + 1)), cfg);
}

BoundaryCheck boundary_self_map_check(const PfmMap& A, const Config& cfg) {
    BoundaryCheck r;
    const int k = static_cast<int>(A.size());
    for (int j = 0; j < k; ++j) {
        const MoebiusMap& g = A.piece(j).matrix;
        int s = find_breakpoint(A, g.apply(A.breakpoint(j)), cfg.eps_point);
        int e = find_breakpoint(A, g.apply(A.breakpoint(j + 1)), cfg.eps_point);
        if (s < 0 || e < 0 || s != (e + 1) % k) {
            r.failing_edge = j;
            r.reason = "image of edge " + std::to_string(j) + " is not an edge of R";
            return r;
        }
        r.edge_permutation.push_back(e);
    }
    std::vector<int> hits(k, 0);
    for (int e : r.edge_permutation) ++hits[e];
    for (int j = 0; j < k; ++j) {
        if (hits[j] != 1) {
            r.failing_edge = j;
            r.reason = "edge map is not a bijection";
            return r;
        }
    }
    r.vertex_permutation = breakpoint_dynamics(A, cfg);
    for (int j = 0; j < k; ++j) {
        if (r.vertex_permutation[r.vertex_permutation[j]] != j) {
            r.failing_edge = j;
            r.reason = "vertex map is not an involution";
            r.vertex_permutation.clear();
            return r;
        }
    }
    for (int j = 0; j < k; ++j) {
        if (r.vertex_permutation[j] >= j) ++r.punctures;
        if (r.edge_permutation[j] == j) ++r.order_two_points;
    }
    r.passes = true;
    return r;
}

InnerDomain inner_domain(const PfmMap& A, const Config& cfg) {
    std::vector<int> f = breakpoint_dynamics(A, cfg);
    InnerDomain D;
    for (int j = 0; j < static_cast<int>(A.size()); ++j) {
        if (f[j] == j) {
            D.breakpoint_indices.push_back(j);
            D.vertices.push_back(A.breakpoint(j));
        }
    }
    if (D.vertices.empty()) throw NoFixedVertices("no breakpoint is fixed by the map");
    const std::size_t n = D.vertices.size();
    if (n == 2) {
        D.edges.push_back(geodesic_between(D.vertices[0], D.vertices[1], cfg));
    } else if (n > 2) {
        for (std::size_t i = 0; i < n; ++i) D.edges.push_back(geodesic_between(D.vertices[i], D.vertices[(i + 1) % n], cfg));
    }
    return D;
}

FoldReport folding_check(const PfmMap& A, const Config& cfg) {
    FoldReport r;
    const int k = static_cast<int>(A.size());
    for (int j = 0; j < k; ++j) {
        if (same_geodesic(edge_image(A, j, cfg), edge_image(A, (j + 1) % k, cfg), cfg.eps_point))
            r.folds.emplace_back(j, (j + 1) % k);
    }
    return r;
}

ComponentReport component_injectivity(const PfmMap& A, const Config& cfg) {
    ComponentReport r;
    const int k = static_cast<int>(A.size());
    std::vector<int> starts;
    try {
        starts = inner_domain(A, cfg).breakpoint_indices;
    } catch (const NoFixedVertices&) {
        starts = {0};  // the whole boundary is one component
    }
    for (std::size_t c = 0; c < starts.size(); ++c) {
        int from = starts[c];
        int to = starts[(c + 1) % starts.size()];
        int len = ((to - from) % k + k) % k;
        if (len == 0) len = k;
        if (len == 1) continue;  // a single edge that is also an edge of D
        ++r.components;
        std::vector<Geodesic> images;
        for (int s = 0; s < len; ++s) images.push_back(edge_image(A, (from + s) % k, cfg));
        for (std::size_t a = 0; a < images.size() && r.injective; ++a) {
            for (std::size_t b = a + 1; b < images.size(); ++b) {
                const Geodesic& x = images[a];
                const Geodesic& y = images[b];
                if (same_geodesic(x, y, cfg.eps_point) ||
                    chords_cross(x.a.turns(), x.b.turns(), y.a.turns(), y.b.turns(), cfg.eps_point)) {
                    r.injective = false;
                    r.failing_component = r.components - 1;
                    break;
                }
            }
        }
    }
    return r;
}

void check_first_return_hypotheses(const FiberedSystem& F, const Config& cfg) {
    const PfmMap& P = F.plus;
    const PfmMap& M = F.minus;
    const int km = static_cast<int>(M.size());
    for (std::size_t j = 0; j < P.size(); ++j) {
        const MoebiusMap& h = P.piece(j).matrix;
        int s = find_breakpoint(M, h.apply(P.breakpoint(j)), cfg.eps_point);
        int e = find_breakpoint(M, h.apply(P.breakpoint(j + 1)), cfg.eps_point);
        if (s < 0 || e < 0 || s != (e + 1) % km)
            throw HypothesisViolation("h_j(delta_j) is not an edge of the minus fiber (edge " + std::to_string(j) + ")");
        if (distance(M.piece(e).matrix, h.inverse()) > cfg.eps_match)
            throw HypothesisViolation("minus piece on h_j(delta_j) is not h_j^-1 (edge " + std::to_string(j) + ")");
    }
}

PfmMap first_return(const FiberedSystem& F, const Config& cfg) {
    check_first_return_hypotheses(F, cfg);
    return minimize(compose(F.minus, F.plus, cfg), cfg);
}

PfmMap second_iterate_hbs(const PfmMap& A_bs, const Config& cfg) {
    BoundaryCheck b = boundary_self_map_check(A_bs, cfg);
    if (!b.passes) throw HypothesisViolation("input fails the boundary self-map check: " + b.reason);
    return first_return({A_bs, A_bs}, cfg);
}

}  // namespace pfm
