#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "pfm/config.hpp"

namespace pfm {

using cplx = std::complex<double>;

// Point e^{2 pi i angle} of the unit circle; angle in turns, kept in [0,1).
class CirclePoint {
public:
    CirclePoint() = default;
    explicit CirclePoint(double turns);
    static CirclePoint from_complex(cplx z);

    double turns() const { return angle_; }
    cplx z() const;

private:
    double angle_ = 0.0;
};

double wrap_turns(double t);
// Shortest distance between two angles along the circle, in turns.
double circular_distance(double a, double b);
inline double circular_distance(CirclePoint a, CirclePoint b) {
    return circular_distance(a.turns(), b.turns());
}
inline bool same_point(CirclePoint a, CirclePoint b, double eps) {
    return circular_distance(a, b) <= eps;
}
// Counter-clockwise displacement from a to b, in [0,1).
double ccw_offset(double from, double to);
// True when x lies in the closed ccw arc [a,b] (tolerance eps at both ends).
bool in_closed_arc(double x, double a, double b, double eps);
bool in_open_arc(double x, double a, double b, double eps);

enum class MoebiusClass { identity, elliptic, parabolic, hyperbolic };
const char* to_string(MoebiusClass c);

// z -> (alpha z + beta) / (conj(beta) z + conj(alpha)), |alpha|^2 - |beta|^2 = 1.
class MoebiusMap {
public:
    MoebiusMap() : alpha_(1.0, 0.0), beta_(0.0, 0.0) {}
    // Normalizes and canonicalizes the sign. Throws std::invalid_argument
    // when |alpha| <= |beta| (not a disk automorphism).
    MoebiusMap(cplx alpha, cplx beta);

    static MoebiusMap identity() { return {}; }
    static MoebiusMap rotation(double turns);
    // Disk automorphism z -> (z - m) / (1 - conj(m) z), sending m to 0.
    static MoebiusMap to_origin(cplx m);
    // Half-turn (order-two rotation) about the interior point m.
    static MoebiusMap half_turn(cplx m);

    cplx alpha() const { return alpha_; }
    cplx beta() const { return beta_; }

    cplx apply(cplx z) const;
    CirclePoint apply(CirclePoint p) const;
    MoebiusMap inverse() const;
    double trace() const { return 2.0 * alpha_.real(); }

private:
    cplx alpha_, beta_;
};

// m1 after m2.
MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2);
inline MoebiusMap operator*(const MoebiusMap& a, const MoebiusMap& b) { return compose(a, b); }
inline MoebiusMap inverse(const MoebiusMap& m) { return m.inverse(); }

// Entry distance up to the global sign of the matrix.
double distance(const MoebiusMap& a, const MoebiusMap& b);
MoebiusClass classify(const MoebiusMap& m, const Config& cfg = default_config());

enum class Stability { neutral, attracting, repelling };
struct FixedPoint {
    CirclePoint point;
    Stability stability;
};
std::vector<FixedPoint> fixed_points(const MoebiusMap& m, const Config& cfg = default_config());

double boundary_derivative(const MoebiusMap& m, CirclePoint p);

struct EuclideanCircle {
    cplx center;
    double radius;
};
struct Diameter {
    double direction;  // turns, in [0, 1/2)
};

struct Geodesic {
    CirclePoint a, b;  // stored with a.turns() < b.turns()
    std::variant<EuclideanCircle, Diameter> realization;

    bool is_diameter() const { return std::holds_alternative<Diameter>(realization); }
    // Point of the geodesic nearest to the origin.
    cplx midpoint() const;
    double orthogonality_residual() const;
};

Geodesic geodesic_between(CirclePoint a, CirclePoint b, const Config& cfg = default_config());
bool same_geodesic(const Geodesic& g, const Geodesic& h, double eps);
// Chords {a,b} and {c,d} cross iff exactly one of c, d lies in the open arc
// (a,b); chords sharing an endpoint never cross.
bool chords_cross(double a, double b, double c, double d, double eps);

}  // namespace pfm
