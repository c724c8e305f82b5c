#include "pfm/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pfm/errors.hpp"

namespace pfm {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSignZero = 1e-14;
}  // namespace

double wrap_turns(double t) {
    double r = t - std::floor(t);
    if (r >= 1.0) r = 0.0;
    return r;
}

double circular_distance(double a, double b) {
    double d = wrap_turns(a - b);
    return std::min(d, 1.0 - d);
}

double ccw_offset(double from, double to) { return wrap_turns(to - from); }

bool in_closed_arc(double x, double a, double b, double eps) {
    if (circular_distance(x, a) <= eps || circular_distance(x, b) <= eps) return true;
    return ccw_offset(a, x) < ccw_offset(a, b);
}

bool in_open_arc(double x, double a, double b, double eps) {
    if (circular_distance(x, a) <= eps || circular_distance(x, b) <= eps) return false;
    return ccw_offset(a, x) < ccw_offset(a, b);
}

CirclePoint::CirclePoint(double turns) : angle_(wrap_turns(turns)) {}

CirclePoint CirclePoint::from_complex(cplx z) {
    return CirclePoint(std::atan2(z.imag(), z.real()) / kTwoPi);
}

cplx CirclePoint::z() const { return std::polar(1.0, kTwoPi * angle_); }

const char* to_string(MoebiusClass c) {
    switch (c) {
        case MoebiusClass::identity: return "identity";
        case MoebiusClass::elliptic: return "elliptic";
        case MoebiusClass::parabolic: return "parabolic";
        case MoebiusClass::hyperbolic: return "hyperbolic";
    }
    return "?";
}

MoebiusMap::MoebiusMap(cplx alpha, cplx beta) {
    double det = std::norm(alpha) - std::norm(beta);
    if (!(det > 0.0)) throw std::invalid_argument("MoebiusMap: |alpha| must exceed |beta|");
    double s = 1.0 / std::sqrt(det);
    alpha *= s;
    beta *= s;
    bool flip;
    if (std::abs(alpha.real()) > kSignZero) {
        flip = alpha.real() < 0.0;
    } else if (std::abs(alpha.imag()) > kSignZero) {
        flip = alpha.imag() < 0.0;
    } else if (std::abs(beta.real()) > kSignZero) {
        flip = beta.real() < 0.0;
    } else {
        flip = beta.imag() < 0.0;
    }
    if (flip) {
        alpha = -alpha;
        beta = -beta;
    }
    alpha_ = alpha;
    beta_ = beta;
}

MoebiusMap MoebiusMap::rotation(double turns) {
    return MoebiusMap(std::polar(1.0, std::numbers::pi * turns), 0.0);
}

MoebiusMap MoebiusMap::to_origin(cplx m) {
    double s = 1.0 / std::sqrt(1.0 - std::norm(m));
    return MoebiusMap(s, -m * s);
}

MoebiusMap MoebiusMap::half_turn(cplx m) {
    MoebiusMap t = to_origin(m);
    MoebiusMap r(cplx(0.0, 1.0), 0.0);
    return compose(t.inverse(), compose(r, t));
}

cplx MoebiusMap::apply(cplx z) const {
    return (alpha_ * z + beta_) / (std::conj(beta_) * z + std::conj(alpha_));
}

CirclePoint MoebiusMap::apply(CirclePoint p) const { return CirclePoint::from_complex(apply(p.z())); }

MoebiusMap MoebiusMap::inverse() const { return MoebiusMap(std::conj(alpha_), -beta_); }

MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2) {
    cplx a = m1.alpha() * m2.alpha() + m1.beta() * std::conj(m2.beta());
    cplx b = m1.alpha() * m2.beta() + m1.beta() * std::conj(m2.alpha());
    return MoebiusMap(a, b);
}

double distance(const MoebiusMap& a, const MoebiusMap& b) {
    double plus = std::max(std::abs(a.alpha() - b.alpha()), std::abs(a.beta() - b.beta()));
    double minus = std::max(std::abs(a.alpha() + b.alpha()), std::abs(a.beta() + b.beta()));
    return std::min(plus, minus);
}

MoebiusClass classify(const MoebiusMap& m, const Config& cfg) {
    if (distance(m, MoebiusMap::identity()) <= 1e-10) return MoebiusClass::identity;
    double t = std::abs(m.trace());
    if (t < 2.0 - cfg.eps_cls) return MoebiusClass::elliptic;
    if (t > 2.0 + cfg.eps_cls) return MoebiusClass::hyperbolic;
    return MoebiusClass::parabolic;
}

double boundary_derivative(const MoebiusMap& m, CirclePoint p) {
    return 1.0 / std::norm(std::conj(m.beta()) * p.z() + std::conj(m.alpha()));
}

std::vector<FixedPoint> fixed_points(const MoebiusMap& m, const Config& cfg) {
    MoebiusClass c = classify(m, cfg);
    if (c == MoebiusClass::identity) throw IdentityHasAllFixed("identity fixes every point");
    if (c == MoebiusClass::elliptic) return {};
    // Roots of conj(beta) z^2 + (conj(alpha) - alpha) z - beta = 0.
    cplx bb = std::conj(m.beta());
    double im = m.alpha().imag();
    if (c == MoebiusClass::parabolic) {
        cplx z = cplx(0.0, im) / bb;
        return {{CirclePoint::from_complex(z), Stability::neutral}};
    }
    double re = m.alpha().real();
    double root = std::sqrt(std::max(0.0, re * re - 1.0));
    std::vector<FixedPoint> out;
    for (double sign : {1.0, -1.0}) {
        cplx z = (cplx(0.0, im) + sign * root) / bb;
        CirclePoint p = CirclePoint::from_complex(z);
        double der = boundary_derivative(m, p);
        out.push_back({p, der < 1.0 ? Stability::attracting : Stability::repelling});
    }
    if (out[0].stability == Stability::repelling) std::swap(out[0], out[1]);
    return out;
}

Geodesic geodesic_between(CirclePoint a, CirclePoint b, const Config& cfg) {
    if (same_point(a, b, cfg.eps_point)) throw DegenerateEndpoints("geodesic endpoints coincide");
    if (a.turns() > b.turns()) std::swap(a, b);
    Geodesic g{a, b, Diameter{0.0}};
    if (std::abs(circular_distance(a, b) - 0.5) <= cfg.eps_point) {
        g.realization = Diameter{std::fmod(a.turns(), 0.5)};
        return g;
    }
    cplx c = 2.0 / std::conj(a.z() + b.z());
    g.realization = EuclideanCircle{c, std::abs(c - a.z())};
    return g;
}

cplx Geodesic::midpoint() const {
    if (is_diameter()) return 0.0;
    const auto& e = std::get<EuclideanCircle>(realization);
    double n = std::abs(e.center);
    return e.center / n * (n - e.radius);
}

double Geodesic::orthogonality_residual() const {
    if (is_diameter()) return 0.0;
    const auto& e = std::get<EuclideanCircle>(realization);
    double r = std::abs(std::norm(e.center) - 1.0 - e.radius * e.radius);
    r = std::max(r, std::abs(std::abs(a.z() - e.center) - e.radius));
    r = std::max(r, std::abs(std::abs(b.z() - e.center) - e.radius));
    return r;
}

bool same_geodesic(const Geodesic& g, const Geodesic& h, double eps) {
    return (same_point(g.a, h.a, eps) && same_point(g.b, h.b, eps)) ||
           (same_point(g.a, h.b, eps) && same_point(g.b, h.a, eps));
}

bool chords_cross(double a, double b, double c, double d, double eps) {
    if (circular_distance(a, c) <= eps || circular_distance(a, d) <= eps || circular_distance(b, c) <= eps ||
        circular_distance(b, d) <= eps)
        return false;
    return in_open_arc(c, a, b, eps) != in_open_arc(d, a, b, eps);
}

}  // namespace pfm
