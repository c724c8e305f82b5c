#include "pfm/fuchsian.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "pfm/errors.hpp"

namespace pfm {

const char* family_name(Family f) {
    switch (f) {
        case Family::PuncturedSphere: return "G_d";
        case Family::OneOrbifold: return "G_d1";
        case Family::TwoOrbifold: return "G_d2";
        case Family::Generic: return "Generic";
    }
    return "Generic";
}

Family family_from_name(const std::string& s) {
    if (s == "G_d") return Family::PuncturedSphere;
    if (s == "G_d1") return Family::OneOrbifold;
    if (s == "G_d2") return Family::TwoOrbifold;
    if (s == "Generic") return Family::Generic;
    throw ParseError("unknown group family '" + s + "'");
}

const MoebiusMap& GroupPresentation::generator(int signed_index) const {
    int i = std::abs(signed_index);
    if (i < 1 || i > static_cast<int>(generators.size()))
        throw std::out_of_range("generator index " + std::to_string(signed_index));
    return generators[i - 1].map;
}

MoebiusMap GroupPresentation::evaluate(const Word& w) const {
    MoebiusMap m;
    for (int s : w) {
        const MoebiusMap& g = generator(s);
        m = compose(m, s > 0 ? g : g.inverse());
    }
    return m;
}

std::string GroupPresentation::word_label(const Word& w) const {
    if (w.empty()) return "id";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += "*";
        int s = w[i];
        std::size_t k = static_cast<std::size_t>(std::abs(s));
        out += (k >= 1 && k <= generators.size()) ? generators[k - 1].label : "g" + std::to_string(k);
        if (s < 0) out += "^-1";
    }
    return out;
}

namespace {

// Automorphism taking the geodesic (u1,u2) to the real diameter with
// u1 -> -1, u2 -> +1 and its nearest-to-origin point to 0.
MoebiusMap standardize(CirclePoint u1, CirclePoint u2) {
    Geodesic g = geodesic_between(u1, u2);
    MoebiusMap t = MoebiusMap::to_origin(g.midpoint());
    CirclePoint w = t.apply(u1);
    return compose(MoebiusMap::rotation(0.5 - w.turns()), t);
}

void check_d(int d) {
    if (d < 2) throw InvalidDegree("d must be at least 2, got " + std::to_string(d));
}

}  // namespace

MoebiusMap midpoint_pairing(CirclePoint u1, CirclePoint u2, CirclePoint v1, CirclePoint v2) {
    return compose(standardize(v1, v2).inverse(), standardize(u1, u2));
}

GroupPresentation build_G_d(int d) {
    check_d(d);
    GroupPresentation G;
    G.family = Family::PuncturedSphere;
    G.d = d;
    for (int v = 0; v < 2 * d; ++v) G.vertices.emplace_back(static_cast<double>(v) / (2 * d));
    const double h = std::numbers::pi / (2.0 * d);
    const double r = std::tan(h);
    for (int j = 1; j <= d; ++j) {
        // Reflection in the full circle of C_j followed by complex conjugation.
        cplx c = std::polar(1.0 / std::cos(h), std::numbers::pi * (2.0 * j - 1.0) / (2.0 * d));
        MoebiusMap g(cplx(0.0, 1.0) * std::conj(c) / r, cplx(0.0, -1.0 / r));
        G.generators.push_back({"g" + std::to_string(j), g});
    }
    return G;
}

GroupPresentation build_G_d2(int d) {
    check_d(d);
    GroupPresentation G;
    G.family = Family::TwoOrbifold;
    G.d = d;
    for (int v = 0; v < 2 * d; ++v) G.vertices.emplace_back(static_cast<double>(v) / (2 * d));
    auto p = [d](int j) {  // p_j for j in [-(d+1), d+1], p_{-j} = conj(p_j)
        return CirclePoint(static_cast<double>(j > 0 ? j - 1 : -(-j - 1)) / (2 * d));
    };
    G.generators.push_back({"g1", MoebiusMap::half_turn(geodesic_between(p(1), p(2)).midpoint())});
    for (int j = 2; j <= d; ++j) {
        MoebiusMap g = midpoint_pairing(p(j), p(j + 1), p(-(j - 1)), p(-j));
        G.generators.push_back({"g" + std::to_string(j), g});
    }
    G.generators.push_back(
        {"g-" + std::to_string(d), MoebiusMap::half_turn(geodesic_between(p(-(d + 1)), p(-d)).midpoint())});
    return G;
}

GroupPresentation build_G_d1(int d) {
    check_d(d);
    GroupPresentation G;
    G.family = Family::OneOrbifold;
    G.d = d;
    const int n = 2 * d - 1;
    for (int v = 0; v < n; ++v) G.vertices.emplace_back(static_cast<double>(v) / n);
    auto q = [n](int j) { return CirclePoint(static_cast<double>(j - 1) / n); };
    auto qbar = [n](int j) { return CirclePoint(-static_cast<double>(j - 1) / n); };
    for (int j = 1; j < d; ++j) {
        MoebiusMap g = midpoint_pairing(q(j), q(j + 1), qbar(j), qbar(j + 1));
        G.generators.push_back({"g" + std::to_string(j), g});
    }
    G.generators.push_back({"g" + std::to_string(d), MoebiusMap::half_turn(geodesic_between(q(d), q(d + 1)).midpoint())});
    return G;
}

std::vector<EdgePairing> edge_pairings(const GroupPresentation& G, const Config& cfg) {
    std::vector<EdgePairing> out;
    const int k = static_cast<int>(G.vertices.size());
    for (int gi = 0; gi < static_cast<int>(G.generators.size()); ++gi) {
        EdgePairing ep{gi + 1, -1, -1};
        const MoebiusMap& g = G.generators[gi].map;
        for (int i = 0; i < k && ep.from_edge < 0; ++i) {
            CirclePoint a = g.apply(G.vertices[i]);
            CirclePoint b = g.apply(G.vertices[(i + 1) % k]);
            for (int j = 0; j < k; ++j) {
                if (same_point(a, G.vertices[(j + 1) % k], cfg.eps_point) &&
                    same_point(b, G.vertices[j], cfg.eps_point)) {
                    ep.from_edge = i;
                    ep.to_edge = j;
                    break;
                }
            }
        }
        out.push_back(ep);
    }
    return out;
}

std::vector<GroupElement> enumerate_ball(const GroupPresentation& G, int radius, const Config& cfg) {
    if (radius < 0) throw std::invalid_argument("radius must be non-negative");
    std::vector<GroupElement> out;
    // Index on |Re alpha| (sign-independent) for near-duplicate lookup.
    std::multimap<double, std::size_t> index;
    auto try_add = [&](GroupElement e) {
        double key = std::abs(e.matrix.alpha().real());
        for (auto it = index.lower_bound(key - cfg.eps_match); it != index.end() && it->first <= key + cfg.eps_match; ++it) {
            if (distance(out[it->second].matrix, e.matrix) <= cfg.eps_match) return false;
        }
        if (out.size() >= cfg.ball_cap)
            throw BallTooLarge("ball exceeds cap of " + std::to_string(cfg.ball_cap) + " elements");
        index.emplace(key, out.size());
        out.push_back(std::move(e));
        return true;
    };
    try_add({{}, MoebiusMap::identity()});
    std::vector<int> letters;
    for (int i = 1; i <= static_cast<int>(G.generators.size()); ++i) {
        letters.push_back(i);
        letters.push_back(-i);
    }
    std::size_t layer_begin = 0, layer_end = out.size();
    for (int len = 1; len <= radius; ++len) {
        for (std::size_t e = layer_begin; e < layer_end; ++e) {
            for (int s : letters) {
                const Word& w = out[e].word;
                if (!w.empty() && w.back() == -s) continue;
                Word nw = w;
                nw.push_back(s);
                MoebiusMap m = compose(out[e].matrix, s > 0 ? G.generator(s) : G.generator(s).inverse());
                try_add({std::move(nw), m});
            }
        }
        layer_begin = layer_end;
        layer_end = out.size();
    }
    return out;
}

}  // namespace pfm
