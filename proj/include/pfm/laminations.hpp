#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfm/dynamics.hpp"
#include "pfm/errors.hpp"

namespace pfm {

// Unordered endpoint pair, stored with a.turns() < b.turns().
struct Leaf {
    CirclePoint a, b;
};
Leaf make_leaf(CirclePoint x, CirclePoint y, const Config& cfg = default_config());
bool same_leaf(const Leaf& l, const Leaf& m, double eps);
bool leaves_cross(const Leaf& l, const Leaf& m, double eps);

struct LeavesCross : Error {
    Word w1, w2;  // translating words of the two crossing leaves
    LeavesCross(Word a, Word b, const std::string& what) : Error(what), w1(std::move(a)), w2(std::move(b)) {}
};

struct Lamination {
    std::vector<Word> elements;
    int radius = 0;
    std::vector<Leaf> leaves;
    // leaves[i] = translators[i] applied to the axis of elements[sources[i]].
    std::vector<Word> translators;
    std::vector<int> sources;
};

// Fixed points of a hyperbolic element; throws NotHyperbolic.
Leaf axis(const MoebiusMap& g, const Config& cfg = default_config());
inline Leaf axis(const GroupElement& g, const Config& cfg = default_config()) { return axis(g.matrix, cfg); }

// Translates of the axes by the word ball, deduplicated. Throws
// LeavesCross as soon as two translates cross.
Lamination expand(const GroupPresentation& G, const std::vector<Word>& elems, int radius,
                  const Config& cfg = default_config());

// First crossing pair of indices, if any. Shared endpoints never count.
std::optional<std::pair<std::size_t, std::size_t>> unlinked_check(const std::vector<Leaf>& leaves,
                                                                  double eps = default_config().eps_point);

enum class LeafOutcome { symbolic, point, matched, chained, violation, inconclusive };
const char* to_string(LeafOutcome o);

struct InvarianceReport {
    int checked = 0;
    int symbolic = 0;  // both endpoints on one piece: image is a group translate
    int points = 0;
    int matched = 0;
    int chained = 0;
    int inconclusive = 0;
    int violations = 0;
    std::optional<std::size_t> violation_leaf;
    std::optional<Leaf> violation_image;
    int lookup_radius = 0;

    bool invariant() const { return violations == 0; }
};
// Image of every expanded leaf must be ~-related inside the expansion at a
// larger radius (so that images of ball leaves stay in the lookup set).
// A crossing inside the lookup set is reported as a violation.
InvarianceReport invariance_check(const PfmMap& A, const Lamination& L, const Config& cfg = default_config());

// The pinchable-curve catalogue: g_2..g_{d-1} and g_i^{-1} g_j with |i-j| > 1.
std::vector<GroupElement> enumerate_S_d(int d);
int expected_S_d_size(int d);

// Pushed leaves under z -> z^n: each image is a point, a pushed leaf, or
// joined to one through shared endpoints, all within tolerance.
struct CompatibilityReport {
    int checked = 0;
    int resolved = 0;
    int unresolved = 0;  // image not found; expected near the edge of the ball
    int crossings = 0;
    bool unlinked = true;
    bool ok() const { return unlinked && crossings == 0; }
};
CompatibilityReport mn_compatibility(const std::vector<PushedLeaf>& leaves, int n, double tolerance);

}  // namespace pfm
