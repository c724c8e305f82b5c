#pragma once

#include <string>
#include <vector>

#include "pfm/pfm_map.hpp"

namespace pfm {

PfmMap bowen_series(const GroupPresentation& G, const Config& cfg = default_config());

// Higher Bowen-Series and completely folding maps of the k-punctured
// sphere, built on G_{k-1}.
PfmMap completely_folding(int k, const Config& cfg = default_config());
PfmMap higher_bowen_series(int k, const Config& cfg = default_config());

// BS(G_d) on the closed lower semicircle, BS(G_d)^2 on the upper one.
PfmMap non_example_B(int d, const Config& cfg = default_config());

// The B-fixed pair (p, q = BS(p) = g1(p)), with p the repelling fixed point
// of g2 o g1 inside the sub-arc of I_1 that BS maps onto I_2.
struct FixedPair {
    CirclePoint p, q;
    Word generator_word;  // word of the generator taking p to q
};
FixedPair non_example_fixed_pair(int d, const Config& cfg = default_config());

// Bowen-Series map of an ideal polygon whose side pairings are found in
// the group ball of the given radius. Throws HypothesisViolation when an
// edge has no partner.
PfmMap polygon_bowen_series(const GroupPresentation& G, std::vector<CirclePoint> vertices, int radius,
                            const Config& cfg = default_config());
// Vertices of the overlapping fundamental domain closure(D) u g_j^{-1}(P)
// used to describe hBS(k) on the top arc I_j (1 <= j <= k-1).
std::vector<CirclePoint> overlapping_domain_vertices(int k, int j);

struct BoundaryCheck {
    bool passes = false;
    int failing_edge = -1;
    std::string reason;
    std::vector<int> vertex_permutation;  // breakpoint index -> image index
    std::vector<int> edge_permutation;    // edge index -> image edge index
    int punctures = 0;                    // vertex cycles
    int order_two_points = 0;             // self-paired edges
};
BoundaryCheck boundary_self_map_check(const PfmMap& A, const Config& cfg = default_config());

struct InnerDomain {
    std::vector<CirclePoint> vertices;
    std::vector<int> breakpoint_indices;
    std::vector<Geodesic> edges;
};
InnerDomain inner_domain(const PfmMap& A, const Config& cfg = default_config());

struct FoldReport {
    std::vector<std::pair<int, int>> folds;  // consecutive edges with equal images
    bool no_fold() const { return folds.empty(); }
};
FoldReport folding_check(const PfmMap& A, const Config& cfg = default_config());

// Image geodesic of edge j under the canonical extension.
Geodesic edge_image(const PfmMap& A, std::size_t j, const Config& cfg = default_config());

// Injectivity of the extension on each connected component of the
// boundary of R minus the boundary of the inner domain.
struct ComponentReport {
    int components = 0;
    bool injective = true;
    int failing_component = -1;
};
ComponentReport component_injectivity(const PfmMap& A, const Config& cfg = default_config());

struct FiberedSystem {
    PfmMap plus, minus;
};
void check_first_return_hypotheses(const FiberedSystem& F, const Config& cfg = default_config());
PfmMap first_return(const FiberedSystem& F, const Config& cfg = default_config());
PfmMap second_iterate_hbs(const PfmMap& A_bs, const Config& cfg = default_config());

}  // namespace pfm
