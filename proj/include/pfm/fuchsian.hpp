#pragma once

#include <string>
#include <vector>

#include "pfm/moebius.hpp"

namespace pfm {

// Signed, 1-based generator indices. Words compose as written:
// {-1, 3} is g1^-1 o g3, i.e. g3 acts first.
using Word = std::vector<int>;

enum class Family { PuncturedSphere, OneOrbifold, TwoOrbifold, Generic };
const char* family_name(Family f);  // "G_d", "G_d1", "G_d2", "Generic"
Family family_from_name(const std::string& s);

struct Generator {
    std::string label;
    MoebiusMap map;
};

struct GroupElement {
    Word word;
    MoebiusMap matrix;
};

struct GroupPresentation {
    Family family = Family::Generic;
    int d = 0;
    std::vector<Generator> generators;
    std::vector<CirclePoint> vertices;  // ascending, vertices[0] at angle 0 for the built-in families

    // Generator |i|; the sign is ignored. Throws std::out_of_range.
    const MoebiusMap& generator(int signed_index) const;
    MoebiusMap evaluate(const Word& w) const;
    GroupElement element(const Word& w) const { return {w, evaluate(w)}; }
    std::string word_label(const Word& w) const;  // "g1^-1*g3"
};

// Disk automorphism sending the geodesic (u1,u2) to (v1,v2), u1->v1, u2->v2,
// and the point of the first geodesic nearest 0 to that of the second.
MoebiusMap midpoint_pairing(CirclePoint u1, CirclePoint u2, CirclePoint v1, CirclePoint v2);

GroupPresentation build_G_d(int d);
GroupPresentation build_G_d1(int d);
GroupPresentation build_G_d2(int d);

// For each generator, the pair (edge i, edge j) of polygon edges with
// g(edge i) = edge j; edge i joins vertices[i] and vertices[i+1].
struct EdgePairing {
    int generator;  // 1-based
    int from_edge;
    int to_edge;
};
std::vector<EdgePairing> edge_pairings(const GroupPresentation& G, const Config& cfg = default_config());

std::vector<GroupElement> enumerate_ball(const GroupPresentation& G, int radius,
                                         const Config& cfg = default_config());

}  // namespace pfm
