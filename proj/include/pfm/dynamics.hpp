#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pfm/pfm_map.hpp"

namespace pfm {

std::vector<CirclePoint> preimages(const PfmMap& A, CirclePoint y, const Config& cfg = default_config());

struct OrbitPoint {
    CirclePoint point;
    Word witness;  // group element taking the seed to this point
    int forward;   // A^forward(seed) = A^backward(point)
    int backward;
};

struct GrandOrbitSet {
    CirclePoint seed;
    int forward_depth = 0;
    int backward_depth = 0;
    std::vector<OrbitPoint> points;

    // Index of a point within eps, or -1.
    int find(CirclePoint p, double eps) const;
};

GrandOrbitSet grand_orbit(const PfmMap& A, CirclePoint x, int forward_depth, int backward_depth,
                          const Config& cfg = default_config());
// Largest distance between a point and its witness word applied to the seed.
double witness_error(const GrandOrbitSet& S, const GroupPresentation& G);

struct OrbitEquivalenceResult {
    bool pass = true;
    std::optional<CirclePoint> failing_point;
    int failing_generator = 0;  // signed generator index
    int checks = 0;
    int max_forward_used = 0;
    int max_backward_used = 0;
};
// Probe points are tested before the random samples.
OrbitEquivalenceResult test_orbit_equivalence(const PfmMap& A, const GroupPresentation& G, int samples, int depth,
                                              std::uint64_t seed, const std::vector<CirclePoint>& probes = {},
                                              const Config& cfg = default_config());

// Tabulated conjugacy H from z -> z^n to A, with H(j / n^m) the j-th point
// of A^{-m}(q0) counted counter-clockwise from the fixed anchor q0.
class ConjugacyTable {
public:
    // Real fractional linear map u -> (a u + b) / (c u + d).
    struct RealMap {
        double a, b, c, d;
        double operator()(double u) const;
    };

    int n() const { return n_; }
    int depth() const { return depth_; }
    CirclePoint anchor() const { return CirclePoint(q0_); }
    std::uint64_t size() const { return count_; }  // n^depth

    // H(j / n^depth) as a ccw offset from the anchor, j in [0, n^depth].
    double offset(std::uint64_t j) const;
    CirclePoint value(std::uint64_t j) const { return CirclePoint(q0_ + offset(j)); }
    double theta(std::uint64_t j) const;
    // Monotone (linear-in-offset) interpolation of H at any angle.
    CirclePoint interpolate(double theta) const;
    // Monotone inversion: theta with H(theta) = y, and the table bracket
    // width (in turns of the target circle) that contains y.
    double inverse(CirclePoint y, double* gap = nullptr) const;
    // H at a level-m grid point, any m (computed by branch recursion).
    double offset_at_level(int m, std::uint64_t j) const;

    double max_gap() const { return level_gap_.back(); }
    const std::vector<double>& level_max_gap() const { return level_gap_; }  // index m = 0..depth
    bool strictly_monotone() const { return monotone_; }
    double table_residual() const { return residual_; }

private:
    friend ConjugacyTable conjugacy_to_power(const PfmMap&, int, const Config&);
    // Internally a point at ccw offset t from the anchor is stored as
    // u = -cot(pi t): the anchor sits at -inf, circular order becomes the
    // order of the reals, and disk automorphisms act by real fractional
    // linear maps, so no trigonometry is needed while building.
    struct Branch {
        std::vector<double> starts;  // u where each inverse piece begins
        std::vector<RealMap> maps;
    };
    double apply_branch(int j, double u) const;
    double u_at_level(int m, std::uint64_t j) const;

    int n_ = 0, depth_ = 0, stored_level_ = 0;
    double q0_ = 0.0;
    std::uint64_t count_ = 1;
    std::vector<Branch> branches_;
    std::vector<double> level1_;  // u of A^{-1}(q0), ascending, level1_[0] = -inf
    std::vector<double> stored_;  // u of level stored_level_, n^stored entries
    std::vector<double> level_gap_;
    bool monotone_ = true;
    double residual_ = 0.0;
};

ConjugacyTable conjugacy_to_power(const PfmMap& A, int depth, const Config& cfg = default_config());

// Precise conjugacy evaluation used by the rigidity check.
struct Bracket {
    double lo, hi;  // lo <= hi as unwrapped turns
    double width() const { return hi - lo; }
};
// Certified bracket for H(theta) obtained from inverse branches at `level`.
Bracket conjugacy_bracket(const ConjugacyTable& H, double theta, int level);
// Certified bracket for H^{-1}(y) for y in [y_lo, y_hi] (offsets from the
// anchor), from `digits` steps of the forward itinerary of A.
Bracket inverse_bracket(const ConjugacyTable& H, const PfmMap& A, double y_lo, double y_hi, int digits);

struct RigidityReport {
    int k = 0;
    int n_source = 0;  // 2k - 3
    int n_target = 0;  // (k - 1)^2
    bool phi_monotone = true;
    double phi_zero = 0.0;
    double source_max_gap = 0.0, target_max_gap = 0.0;
    int samples = 0;
    int checked_points = 0;
    int failures = 0;
    double max_width = 0.0;
    bool pass = false;
};
RigidityReport compose_rigidity(int k, int depth, int samples = 50, int orbit_depth = 3,
                                const Config& cfg = default_config());

struct PushedLeaf {
    double u, v;
};
// Leaves given as endpoint angles; throws LeafOutsideResolution when an
// endpoint falls in a table gap wider than `tolerance`.
std::vector<PushedLeaf> push_lamination(const ConjugacyTable& H, const std::vector<std::pair<double, double>>& leaves,
                                        double tolerance);

}  // namespace pfm
