#include "pfm/laminations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace pfm {

Leaf make_leaf(CirclePoint x, CirclePoint y, const Config& cfg) {
    if (same_point(x, y, cfg.eps_point)) throw DegenerateEndpoints("leaf endpoints coincide");
    if (x.turns() > y.turns()) std::swap(x, y);
    return {x, y};
}

bool same_leaf(const Leaf& l, const Leaf& m, double eps) {
    return (same_point(l.a, m.a, eps) && same_point(l.b, m.b, eps)) ||
           (same_point(l.a, m.b, eps) && same_point(l.b, m.a, eps));
}

bool leaves_cross(const Leaf& l, const Leaf& m, double eps) {
    return chords_cross(l.a.turns(), l.b.turns(), m.a.turns(), m.b.turns(), eps);
}

Leaf axis(const MoebiusMap& g, const Config& cfg) {
    if (classify(g, cfg) != MoebiusClass::hyperbolic) throw NotHyperbolic("element is not hyperbolic");
    std::vector<FixedPoint> f = fixed_points(g, cfg);
    return make_leaf(f[0].point, f[1].point, cfg);
}

namespace {

// Circle points merged within eps; ids are dense and stable.
class PointIndex {
public:
    explicit PointIndex(double eps) : eps_(eps) {}

    int find(CirclePoint p) const {
        double t = p.turns();
        for (double shift : {0.0, 1.0, -1.0}) {
            auto it = pts_.lower_bound(t + shift - eps_);
            if (it != pts_.end() && it->first <= t + shift + eps_) return it->second;
        }
        return -1;
    }
    int insert(CirclePoint p) {
        int id = find(p);
        if (id >= 0) return id;
        id = static_cast<int>(pts_.size());
        pts_.emplace(p.turns(), id);
        return id;
    }
    std::size_t size() const { return pts_.size(); }

private:
    double eps_;
    std::map<double, int> pts_;
};

struct UnionFind {
    std::vector<int> parent;
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
};

// Crossing search by a sweep over the sorted endpoints: with closings
// before openings at a shared point, a non-crossing family closes its chords
// in stack order. A stack mismatch exhibits a crossing pair.
std::optional<std::pair<std::size_t, std::size_t>> find_crossing(const std::vector<Leaf>& leaves, double eps) {
    PointIndex index(eps);
    std::vector<double> rep;  // representative angle per point id
    auto canon = [&](CirclePoint p) {
        int id = index.insert(p);
        if (id == static_cast<int>(rep.size())) rep.push_back(p.turns());
        return rep[id];
    };
    struct Chord {
        double a, b;
    };
    std::vector<Chord> ch;
    for (const Leaf& l : leaves) {
        double a = canon(l.a), b = canon(l.b);
        ch.push_back({std::min(a, b), std::max(a, b)});
    }
    struct Event {
        double x;
        bool open;
        std::size_t id;
    };
    std::vector<Event> ev;
    for (std::size_t i = 0; i < ch.size(); ++i) {
        if (ch[i].a == ch[i].b) continue;
        ev.push_back({ch[i].a, true, i});
        ev.push_back({ch[i].b, false, i});
    }
    std::sort(ev.begin(), ev.end(), [&](const Event& e, const Event& f) {
        if (e.x != f.x) return e.x < f.x;
        if (e.open != f.open) return !e.open;                            // close first
        if (!e.open) return ch[e.id].a > ch[f.id].a;                       // innermost closes first
        if (ch[e.id].b != ch[f.id].b) return ch[e.id].b > ch[f.id].b;      // outermost opens first
        return e.id < f.id;
    });
    std::vector<std::size_t> stack;
    for (const Event& e : ev) {
        if (e.open) {
            stack.push_back(e.id);
            continue;
        }
        if (stack.back() != e.id) {
            // Parallel duplicates close in either order; anything else crosses.
            std::size_t t = stack.back();
            if (ch[t].a == ch[e.id].a && ch[t].b == ch[e.id].b) {
                auto it = std::find(stack.begin(), stack.end(), e.id);
                stack.erase(it);
                continue;
            }
            return std::make_pair(std::min(t, e.id), std::max(t, e.id));
        }
        stack.pop_back();
    }
    return std::nullopt;
}

}  // namespace

Lamination expand(const GroupPresentation& G, const std::vector<Word>& elems, int radius, const Config& cfg) {
    if (radius < 0) throw std::invalid_argument("radius must be non-negative");
    Lamination L;
    L.elements = elems;
    L.radius = radius;
    std::vector<Leaf> axes;
    for (const Word& w : elems) axes.push_back(axis(G.evaluate(w), cfg));
    std::vector<GroupElement> ball = enumerate_ball(G, radius, cfg);
    PointIndex index(cfg.eps_point);
    std::set<std::pair<int, int>> seen;
    for (std::size_t s = 0; s < axes.size(); ++s) {
        for (const GroupElement& h : ball) {
            Leaf l = make_leaf(h.matrix.apply(axes[s].a), h.matrix.apply(axes[s].b), cfg);
            int ia = index.insert(l.a), ib = index.insert(l.b);
            if (!seen.insert({std::min(ia, ib), std::max(ia, ib)}).second) continue;
            L.leaves.push_back(l);
            L.translators.push_back(h.word);
            L.sources.push_back(static_cast<int>(s));
        }
    }
    if (auto c = find_crossing(L.leaves, cfg.eps_point)) {
        const Word& w1 = L.translators[c->first];
        const Word& w2 = L.translators[c->second];
        const Word& e1 = elems[L.sources[c->first]];
        const Word& e2 = elems[L.sources[c->second]];
        throw LeavesCross(w1, w2,
                          "translate of axis(" + G.word_label(e1) + ") by '" + G.word_label(w1) +
                              "' crosses translate of axis(" + G.word_label(e2) + ") by '" + G.word_label(w2) + "'");
    }
    return L;
}

std::optional<std::pair<std::size_t, std::size_t>> unlinked_check(const std::vector<Leaf>& leaves, double eps) {
    return find_crossing(leaves, eps);
}

const char* to_string(LeafOutcome o) {
    switch (o) {
        case LeafOutcome::symbolic: return "symbolic";
        case LeafOutcome::point: return "point";
        case LeafOutcome::matched: return "matched";
        case LeafOutcome::chained: return "chained";
        case LeafOutcome::violation: return "violation";
        case LeafOutcome::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

// Finite leaf set with endpoint classes under shared-endpoint chaining.
class LeafLookup {
public:
    LeafLookup(const std::vector<Leaf>& leaves, double eps) : leaves_(leaves), index_(eps), eps_(eps) {
        std::vector<std::pair<int, int>> ends;
        for (const Leaf& l : leaves) ends.emplace_back(index_.insert(l.a), index_.insert(l.b));
        uf_.parent.resize(index_.size());
        std::iota(uf_.parent.begin(), uf_.parent.end(), 0);
        for (auto [a, b] : ends) {
            uf_.unite(a, b);
            pairs_.insert({std::min(a, b), std::max(a, b)});
        }
    }

    LeafOutcome classify(CirclePoint x, CirclePoint y) {
        if (same_point(x, y, eps_)) return LeafOutcome::point;
        int ia = index_.find(x), ib = index_.find(y);
        if (ia >= 0 && ib >= 0) {
            if (pairs_.count({std::min(ia, ib), std::max(ia, ib)})) return LeafOutcome::matched;
            if (uf_.find(ia) == uf_.find(ib)) return LeafOutcome::chained;
        }
        Leaf img{x, y};
        for (const Leaf& l : leaves_)
            if (leaves_cross(l, img, eps_)) return LeafOutcome::violation;
        return LeafOutcome::inconclusive;
    }

private:
    const std::vector<Leaf>& leaves_;
    PointIndex index_;
    double eps_;
    UnionFind uf_;
    std::set<std::pair<int, int>> pairs_;
};

}  // namespace

InvarianceReport invariance_check(const PfmMap& A, const Lamination& L, const Config& cfg) {
    InvarianceReport rep;
    std::size_t longest = 0;
    for (const GroupElement& p : A.pieces()) longest = std::max(longest, p.word.size());
    rep.lookup_radius = L.radius + static_cast<int>(longest);

    // Crossings among the larger expansion are themselves violations.
    Lamination big;
    try {
        big = expand(A.group(), L.elements, rep.lookup_radius, cfg);
    } catch (const LeavesCross&) {
        rep.violations = 1;
        return rep;
    }
    LeafLookup lookup(big.leaves, cfg.eps_point);

    for (std::size_t i = 0; i < L.leaves.size(); ++i) {
        const Leaf& l = L.leaves[i];
        ++rep.checked;
        std::size_t ja = A.arc_index(l.a), jb = A.arc_index(l.b);
        if (A.piece(ja).word == A.piece(jb).word) {
            ++rep.symbolic;
            continue;
        }
        CirclePoint x = A.apply(l.a), y = A.apply(l.b);
        LeafOutcome o = lookup.classify(x, y);
        switch (o) {
            case LeafOutcome::point: ++rep.points; break;
            case LeafOutcome::matched: ++rep.matched; break;
            case LeafOutcome::chained: ++rep.chained; break;
            case LeafOutcome::inconclusive: ++rep.inconclusive; break;
            case LeafOutcome::violation:
                if (rep.violations++ == 0) {
                    rep.violation_leaf = i;
                    rep.violation_image = Leaf{x, y};
                }
                break;
            case LeafOutcome::symbolic: break;
        }
    }
    return rep;
}

std::vector<GroupElement> enumerate_S_d(int d) {
    if (d < 2) throw InvalidDegree("S_d needs d >= 2, got " + std::to_string(d));
    GroupPresentation G = build_G_d(d);
    std::vector<GroupElement> out;
    for (int i = 2; i <= d - 1; ++i) out.push_back(G.element({i}));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            if (std::abs(i - j) > 1) out.push_back(G.element({-i, j}));
    return out;
}

int expected_S_d_size(int d) {
    int pairs = 0;
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            if (std::abs(i - j) > 1) ++pairs;
    return std::max(0, d - 2) + pairs;
}

CompatibilityReport mn_compatibility(const std::vector<PushedLeaf>& leaves, int n, double tolerance) {
    CompatibilityReport rep;
    std::vector<Leaf> ls;
    for (const PushedLeaf& p : leaves) {
        CirclePoint a(p.u), b(p.v);
        if (a.turns() > b.turns()) std::swap(a, b);
        ls.push_back({a, b});
    }
    rep.unlinked = !unlinked_check(ls, tolerance).has_value();
    LeafLookup lookup(ls, tolerance);
    for (const Leaf& l : ls) {
        ++rep.checked;
        CirclePoint x(l.a.turns() * n), y(l.b.turns() * n);
        switch (lookup.classify(x, y)) {
            case LeafOutcome::violation: ++rep.crossings; break;
            case LeafOutcome::inconclusive: ++rep.unresolved; break;
            default: ++rep.resolved; break;
        }
    }
    return rep;
}

}  // namespace pfm
