#include "pfm/dynamics.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numbers>
#include <cmath>
#include <map>
#include <random>

#include "pfm/constructions.hpp"
#include "pfm/errors.hpp"

namespace pfm {

namespace {

struct Preimage {
    CirclePoint point;
    std::size_t piece;
};

std::vector<Preimage> preimages_with_piece(const PfmMap& A, CirclePoint y, const Config& cfg) {
    std::vector<Preimage> out;
    for (std::size_t j = 0; j < A.size(); ++j) {
        CirclePoint z = A.piece(j).matrix.inverse().apply(y);
        double a = A.breakpoint(j).turns();
        double b = A.breakpoint(j + 1).turns();
        if (A.size() == 1 || in_closed_arc(z.turns(), a, b, cfg.eps_point)) {
            bool dup = std::any_of(out.begin(), out.end(),
                                   [&](const Preimage& p) { return same_point(p.point, z, cfg.eps_point); });
            if (!dup) out.push_back({z, j});
        }
    }
    return out;
}

Word inverse_word(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (int& s : r) s = -s;
    return r;
}

Word concat_words(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

}  // namespace

std::vector<CirclePoint> preimages(const PfmMap& A, CirclePoint y, const Config& cfg) {
    std::vector<CirclePoint> out;
    for (const auto& p : preimages_with_piece(A, y, cfg)) out.push_back(p.point);
    return out;
}

int GrandOrbitSet::find(CirclePoint p, double eps) const {
    for (std::size_t i = 0; i < points.size(); ++i)
        if (same_point(points[i].point, p, eps)) return static_cast<int>(i);
    return -1;
}

GrandOrbitSet grand_orbit(const PfmMap& A, CirclePoint x, int forward_depth, int backward_depth, const Config& cfg) {
    GrandOrbitSet S;
    S.seed = x;
    S.forward_depth = forward_depth;
    S.backward_depth = backward_depth;

    std::vector<OrbitPoint> forward{{x, {}, 0, 0}};
    for (int i = 1; i <= forward_depth; ++i) {
        const OrbitPoint& prev = forward.back();
        const GroupElement& g = A.piece(A.arc_index(prev.point));
        forward.push_back({g.matrix.apply(prev.point), concat_words(g.word, prev.witness), i, 0});
    }
    // layers[i][j]: points z with A^j(z) = A^i(x).
    std::vector<std::vector<std::vector<OrbitPoint>>> layers(forward.size());
    for (std::size_t i = 0; i < forward.size(); ++i) {
        layers[i].push_back({forward[i]});
        for (int j = 1; j <= backward_depth; ++j) {
            std::vector<OrbitPoint> next;
            for (const OrbitPoint& y : layers[i].back()) {
                for (const Preimage& p : preimages_with_piece(A, y.point, cfg)) {
                    next.push_back({p.point, concat_words(inverse_word(A.piece(p.piece).word), y.witness),
                                    static_cast<int>(i), j});
                }
                if (next.size() > cfg.orbit_cap) throw OrbitTooLarge("grand orbit exceeds the configured cap");
            }
            layers[i].push_back(std::move(next));
        }
    }
    // Insert by total depth so each point keeps its cheapest witness.
    std::map<double, std::size_t> index;
    auto known = [&](CirclePoint p) {
        double t = p.turns();
        for (double s : {t - 1.0, t, t + 1.0}) {
            auto it = index.lower_bound(s - cfg.eps_point);
            if (it != index.end() && it->first <= s + cfg.eps_point) return true;
        }
        return false;
    };
    for (int total = 0; total <= forward_depth + backward_depth; ++total) {
        for (int i = 0; i <= std::min(total, forward_depth); ++i) {
            int j = total - i;
            if (j > backward_depth) continue;
            for (OrbitPoint& p : layers[i][j]) {
                if (known(p.point)) continue;
                index.emplace(p.point.turns(), S.points.size());
                S.points.push_back(std::move(p));
                if (S.points.size() > cfg.orbit_cap) throw OrbitTooLarge("grand orbit exceeds the configured cap");
            }
        }
    }
    return S;
}

double witness_error(const GrandOrbitSet& S, const GroupPresentation& G) {
    double worst = 0.0;
    for (const auto& p : S.points)
        worst = std::max(worst, circular_distance(G.evaluate(p.witness).apply(S.seed), p.point));
    return worst;
}

OrbitEquivalenceResult test_orbit_equivalence(const PfmMap& A, const GroupPresentation& G, int samples, int depth,
                                              std::uint64_t seed, const std::vector<CirclePoint>& probes,
                                              const Config& cfg) {
    OrbitEquivalenceResult r;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<CirclePoint> xs = probes;
    for (int s = 0; s < samples; ++s) xs.emplace_back(unif(rng));
    for (CirclePoint x : xs) {
        GrandOrbitSet S = grand_orbit(A, x, depth, depth, cfg);
        for (int g = 1; g <= static_cast<int>(G.generators.size()); ++g) {
            for (int sign : {1, -1}) {
                const MoebiusMap& m = G.generator(g);
                CirclePoint y = (sign > 0 ? m : m.inverse()).apply(x);
                ++r.checks;
                int idx = S.find(y, cfg.eps_point * 1e2);
                if (idx < 0) {
                    r.pass = false;
                    r.failing_point = x;
                    r.failing_generator = sign * g;
                    return r;
                }
                r.max_forward_used = std::max(r.max_forward_used, S.points[idx].forward);
                r.max_backward_used = std::max(r.max_backward_used, S.points[idx].backward);
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------- conjugacy

namespace {

constexpr double kPi = std::numbers::pi;

double u_of_offset(double t) {
    if (t <= 0.0) return -std::numeric_limits<double>::infinity();
    return -1.0 / std::tan(kPi * t);
}

double offset_of_u(double u) {
    if (std::isinf(u)) return u < 0 ? 0.0 : 1.0;
    if (u < 0.0) return std::atan(-1.0 / u) / kPi;  // avoids cancellation near the anchor
    return 0.5 + std::atan(u) / kPi;
}

// ccw distance from u to the anchor at +inf side.
double gap_to_end(double u) {
    if (std::isinf(u)) return u < 0 ? 1.0 : 0.0;
    return u > 0.0 ? std::atan(1.0 / u) / kPi : 0.5 - std::atan(u) / kPi;
}

// tan(pi * circular distance) between two points in u-coordinates.
double tan_distance(double u1, double u2) {
    if (std::isinf(u1) || std::isinf(u2)) {
        double d = circular_distance(offset_of_u(u1), offset_of_u(u2));
        return d >= 0.5 ? std::numeric_limits<double>::infinity() : std::tan(kPi * d);
    }
    return std::abs(u2 - u1) / std::abs(1.0 + u1 * u2);
}

// Running maximum of ccw gaps between ascending u values. Gaps below half a
// turn are compared through tan(pi gap); the rest are converted exactly.
struct GapTracker {
    double tan_max = 0.0, exact_max = 0.0;
    void add(double u1, double u2) {
        if (std::isinf(u1) || std::isinf(u2)) {
            exact_max = std::max(exact_max, offset_of_u(u2) - offset_of_u(u1));
            return;
        }
        double den = 1.0 + u1 * u2;
        if (den > 0.0)
            tan_max = std::max(tan_max, (u2 - u1) / den);
        else
            exact_max = std::max(exact_max, offset_of_u(u2) - offset_of_u(u1));
    }
    double value() const { return std::max(std::atan(tan_max) / kPi, exact_max); }
};

}  // namespace

double ConjugacyTable::RealMap::operator()(double u) const {
    if (std::isinf(u)) {
        if (c != 0.0) return a / c;
        return (a / d > 0.0) == (u > 0.0) ? std::numeric_limits<double>::infinity()
                                           : -std::numeric_limits<double>::infinity();
    }
    return (a * u + b) / (c * u + d);
}

namespace {

ConjugacyTable::RealMap real_map(const MoebiusMap& M, double q0) {
    using Mat = std::array<cplx, 4>;
    auto mul = [](const Mat& x, const Mat& y) {
        return Mat{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                   x[2] * y[1] + x[3] * y[3]};
    };
    const cplx i(0.0, 1.0);
    cplx e = std::polar(1.0, kPi * q0);
    Mat m{M.alpha(), M.beta(), std::conj(M.beta()), std::conj(M.alpha())};
    Mat R{e, 0.0, 0.0, std::conj(e)};
    Mat Rinv{std::conj(e), 0.0, 0.0, e};
    Mat C{1.0, -i, 1.0, i};
    Mat Cinv{i, i, -1.0, 1.0};
    Mat K = mul(Cinv, mul(Rinv, mul(m, mul(R, C))));
    std::size_t big = 0;
    for (std::size_t s = 1; s < 4; ++s)
        if (std::abs(K[s]) > std::abs(K[big])) big = s;
    cplx phase = std::conj(K[big]) / std::abs(K[big]);
    for (cplx& x : K) x *= phase;
    return {K[0].real(), K[1].real(), K[2].real(), K[3].real()};
}

}  // namespace

double ConjugacyTable::apply_branch(int j, double u) const {
    if (std::isinf(u) && u < 0) return level1_[j];
    const Branch& b = branches_[j];
    auto it = std::upper_bound(b.starts.begin(), b.starts.end(), u);
    std::size_t idx = it == b.starts.begin() ? 0 : static_cast<std::size_t>(it - b.starts.begin()) - 1;
    double r = b.maps[idx](u);
    double lo = level1_[j];
    double hi = j + 1 == n_ ? std::numeric_limits<double>::infinity() : level1_[j + 1];
    if (!(r >= lo && r <= hi)) r = u < 0.0 ? lo : hi;  // rounding just outside the arc
    return r;
}

double ConjugacyTable::u_at_level(int m, std::uint64_t j) const {
    if (m <= stored_level_) {
        std::uint64_t scale = 1;
        for (int i = m; i < stored_level_; ++i) scale *= static_cast<std::uint64_t>(n_);
        return stored_[j * scale];
    }
    std::uint64_t nl = stored_.size();
    double v = stored_[j % nl];
    std::uint64_t prefix = j / nl;
    for (int i = stored_level_; i < m; ++i) {
        v = apply_branch(static_cast<int>(prefix % n_), v);
        prefix /= n_;
    }
    return v;
}

double ConjugacyTable::offset_at_level(int m, std::uint64_t j) const {
    std::uint64_t nm = 1;
    for (int i = 0; i < m; ++i) nm *= static_cast<std::uint64_t>(n_);
    if (j >= nm) return 1.0 + offset_at_level(m, j - nm);
    return offset_of_u(u_at_level(m, j));
}

double ConjugacyTable::offset(std::uint64_t j) const { return offset_at_level(depth_, j); }

double ConjugacyTable::theta(std::uint64_t j) const { return static_cast<double>(j) / static_cast<double>(count_); }

CirclePoint ConjugacyTable::interpolate(double th) const {
    th = wrap_turns(th);
    double x = th * static_cast<double>(count_);
    std::uint64_t j = std::min<std::uint64_t>(static_cast<std::uint64_t>(x), count_ - 1);
    double f = x - static_cast<double>(j);
    double a = offset(j), b = offset(j + 1);
    return CirclePoint(q0_ + a + f * (b - a));
}

double ConjugacyTable::inverse(CirclePoint y, double* gap) const {
    double t = ccw_offset(q0_, y.turns());
    double ut = u_of_offset(t);
    std::uint64_t lo = 0, hi = count_;  // H(lo) <= y < H(hi)
    while (hi - lo > 1) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (u_at_level(depth_, mid) <= ut)
            lo = mid;
        else
            hi = mid;
    }
    double a = offset(lo), b = offset(lo + 1);
    if (gap) *gap = b - a;
    double f = b > a ? std::clamp((t - a) / (b - a), 0.0, 1.0) : 0.0;
    return (static_cast<double>(lo) + f) / static_cast<double>(count_);
}

ConjugacyTable conjugacy_to_power(const PfmMap& A, int depth, const Config& cfg) {
    if (depth < 0) throw std::invalid_argument("depth must be non-negative");
    std::vector<int> f = breakpoint_dynamics(A, cfg);
    int anchor = -1;
    for (int j = 0; j < static_cast<int>(A.size()); ++j) {
        if (f[j] == j) {
            anchor = j;
            break;
        }
    }
    if (anchor < 0) throw NoFixedPoint("no breakpoint is fixed by the map");
    ConjugacyTable H;
    H.q0_ = A.breakpoint(anchor).turns();
    H.n_ = degree(A, cfg);
    H.depth_ = depth;
    const double q0 = H.q0_;
    const int n = H.n_;
    const double inf = std::numeric_limits<double>::infinity();

    std::vector<double> p1;
    for (CirclePoint p : preimages(A, CirclePoint(q0), cfg)) p1.push_back(ccw_offset(q0, p.turns()));
    for (double& o : p1)
        if (o > 1.0 - cfg.eps_point || o < cfg.eps_point) o = 0.0;
    std::sort(p1.begin(), p1.end());
    if (static_cast<int>(p1.size()) != n || p1[0] != 0.0)
        throw NonNestedPreimages("level-1 preimage count " + std::to_string(p1.size()) + " differs from degree " +
                                 std::to_string(n));
    for (double o : p1) H.level1_.push_back(u_of_offset(o));

    // The map itself in u-coordinates, arcs listed from the anchor.
    const std::size_t k = A.size();
    std::vector<double> a_starts;
    std::vector<ConjugacyTable::RealMap> a_maps;
    for (std::size_t s = 0; s < k; ++s) {
        std::size_t idx = (static_cast<std::size_t>(anchor) + s) % k;
        a_starts.push_back(s == 0 ? -inf : u_of_offset(ccw_offset(q0, A.breakpoint(idx).turns())));
        a_maps.push_back(real_map(A.piece(idx).matrix, q0));
    }
    auto apply_A = [&](double u) {
        std::size_t idx = static_cast<std::size_t>(std::upper_bound(a_starts.begin(), a_starts.end(), u) -
                                                   a_starts.begin()) - 1;
        return a_maps[idx](u);
    };

    // Inverse branch j maps the circle onto the level-1 arc [p1[j], p1[j+1]].
    for (int j = 0; j < n; ++j) {
        double lo = p1[j], hi = j + 1 < n ? p1[j + 1] : 1.0;
        std::vector<double> cuts{lo};
        for (const CirclePoint& b : A.breakpoints()) {
            double o = ccw_offset(q0, b.turns());
            if (o > lo + cfg.eps_point && o < hi - cfg.eps_point) cuts.push_back(o);
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.push_back(hi);
        ConjugacyTable::Branch br;
        double last = -1.0;
        for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
            std::size_t l = A.arc_index(CirclePoint(q0 + 0.5 * (cuts[s] + cuts[s + 1])));
            const MoebiusMap& g = A.piece(l).matrix;
            double start = s == 0 ? 0.0 : ccw_offset(q0, g.apply(CirclePoint(q0 + cuts[s])).turns());
            if (!(start > last))
                throw NonNestedPreimages("inverse branch " + std::to_string(j) + " is not monotone");
            last = start;
            br.starts.push_back(u_of_offset(start));
            br.maps.push_back(real_map(g.inverse(), q0));
        }
        H.branches_.push_back(std::move(br));
    }

    int stored = 0;
    std::uint64_t size = 1;
    while (stored < depth && size * static_cast<std::uint64_t>(n) <= cfg.table_cap) {
        size *= static_cast<std::uint64_t>(n);
        ++stored;
    }
    H.stored_level_ = stored;
    H.count_ = 1;
    for (int i = 0; i < depth; ++i) H.count_ *= static_cast<std::uint64_t>(n);

    H.level_gap_.assign(1, 1.0);
    double res_tan = 0.0;
    auto residual = [&](double child, double parent) {
        res_tan = std::max(res_tan, tan_distance(apply_A(child), parent));
    };

    std::vector<double> prev{-inf};
    for (int m = 1; m <= stored; ++m) {
        std::vector<double> cur(prev.size() * n);
        GapTracker gap;
        for (int j = 0; j < n; ++j) {
            for (std::size_t r = 0; r < prev.size(); ++r) {
                std::size_t J = j * prev.size() + r;
                cur[J] = H.apply_branch(j, prev[r]);
                residual(cur[J], prev[r]);
                if (J > 0) {
                    if (!(cur[J] > cur[J - 1])) H.monotone_ = false;
                    gap.add(cur[J - 1], cur[J]);
                }
            }
        }
        if (!(cur.back() < inf)) H.monotone_ = false;
        H.level_gap_.push_back(std::max(gap.value(), gap_to_end(cur.back())));
        prev = std::move(cur);
    }
    H.stored_ = std::move(prev);

    // Deeper levels are streamed in order and never stored.
    const std::uint64_t nl = H.stored_.size();
    for (int m = stored + 1; m <= depth; ++m) {
        const int extra = m - stored;
        std::uint64_t prefixes = 1;
        for (int i = 0; i < extra; ++i) prefixes *= static_cast<std::uint64_t>(n);
        GapTracker gap;
        double last = -inf;
        bool first = true;
        std::vector<int> digits(extra);
        for (std::uint64_t p = 0; p < prefixes; ++p) {
            std::uint64_t q = p;
            for (int i = extra - 1; i >= 0; --i) {  // digits[0] is the most significant
                digits[i] = static_cast<int>(q % n);
                q /= n;
            }
            for (std::uint64_t r = 0; r < nl; ++r) {
                double v = H.stored_[r], parent = v;
                for (int i = extra - 1; i >= 0; --i) {
                    parent = v;
                    v = H.apply_branch(digits[i], v);
                }
                residual(v, parent);
                if (!first) {
                    if (!(v > last)) H.monotone_ = false;
                    gap.add(last, v);
                }
                first = false;
                last = v;
            }
        }
        if (!(last < inf)) H.monotone_ = false;
        H.level_gap_.push_back(std::max(gap.value(), gap_to_end(last)));
    }
    H.residual_ = std::atan(res_tan) / kPi;
    return H;
}

Bracket conjugacy_bracket(const ConjugacyTable& H, double th, int level) {
    std::uint64_t N = 1;
    for (int i = 0; i < level; ++i) N *= static_cast<std::uint64_t>(H.n());
    th = wrap_turns(th);
    auto J = static_cast<std::uint64_t>(th * static_cast<double>(N));
    if (J >= N) J = N - 1;
    double lo = J == 0 ? H.offset_at_level(level, N - 1) - 1.0 : H.offset_at_level(level, J - 1);
    double hi = H.offset_at_level(level, J + 2);
    return {lo, hi};
}

namespace {

// Digits of the forward itinerary of y (offset from the anchor) with respect
// to the level-1 partition; returns the lower end of the theta bracket.
double itinerary_theta(const ConjugacyTable& H, const PfmMap& A, const std::vector<double>& p1, double t, int digits) {
    const int n = H.n();
    const double q0 = H.anchor().turns();
    double theta = 0.0, scale = 1.0;
    for (int s = 0; s < digits; ++s) {
        auto it = std::upper_bound(p1.begin(), p1.end(), t);
        int j = static_cast<int>(it - p1.begin()) - 1;
        if (j < 0) j = 0;
        scale /= n;
        theta += j * scale;
        double lo = p1[j], hi = j + 1 < n ? p1[j + 1] : 1.0;
        double rel = t - lo;
        double next = ccw_offset(q0, A.apply(CirclePoint(q0 + t)).turns());
        // Keep the image on the side of the anchor that matches the position in the arc.
        if (next > 1.0 - 1e-12 && rel < 0.5 * (hi - lo)) next = 0.0;
        if (next < 1e-12 && rel > 0.5 * (hi - lo)) next = std::nextafter(1.0, 0.0);
        t = next;
    }
    return theta;
}

}  // namespace

Bracket inverse_bracket(const ConjugacyTable& H, const PfmMap& A, double y_lo, double y_hi, int digits) {
    std::vector<double> p1;
    for (int j = 0; j < H.n(); ++j) p1.push_back(H.offset_at_level(1, j));
    double unit = std::pow(static_cast<double>(H.n()), -digits);
    auto theta_of = [&](double y) {
        double shift = std::floor(y);
        double t = y - shift;
        if (t >= 1.0) {
            t = 0.0;
            shift += 1.0;
        }
        return shift + itinerary_theta(H, A, p1, t, digits);
    };
    double lo = theta_of(y_lo), hi = theta_of(y_hi) + unit;
    return {std::min(lo, hi), std::max(lo, hi)};
}

RigidityReport compose_rigidity(int k, int depth, int samples, int orbit_depth, const Config& cfg) {
    if (k < 3) throw InvalidK("k must be at least 3, got " + std::to_string(k));
    RigidityReport rep;
    rep.k = k;
    PfmMap A1 = bowen_series(build_G_d(k - 1), cfg);
    PfmMap A2 = higher_bowen_series(k, cfg);
    ConjugacyTable H1 = conjugacy_to_power(A1, depth, cfg);
    ConjugacyTable H2 = conjugacy_to_power(A2, depth, cfg);
    rep.n_source = H1.n();
    rep.n_target = H2.n();
    rep.source_max_gap = H1.max_gap();
    rep.target_max_gap = H2.max_gap();

    // Tabulated Phi = H2^{-1} o H1 on the source grid.
    double prev = -1.0;
    for (std::uint64_t j = 0; j < H1.size(); ++j) {
        double u = H2.inverse(H1.value(j));
        if (j == 0) {
            rep.phi_zero = u;
        } else if (!(u > prev)) {
            rep.phi_monotone = false;
        }
        prev = u;
    }

    // Precise per-point evaluation with certified brackets.
    const int n1 = rep.n_source, n2 = rep.n_target;
    const int level1 = static_cast<int>(std::floor(48.0 / std::log2(static_cast<double>(n1))));
    const int level2 = static_cast<int>(std::floor(48.0 / std::log2(static_cast<double>(n2))));
    const int max_iter = 2 * orbit_depth + 2;
    // Forward itineraries of an expanding map amplify rounding, so brackets
    // narrower than this are not trusted.
    constexpr double kFloor = 1e-12;
    auto phi = [&](double th) {
        Bracket b = conjugacy_bracket(H1, th, level1);
        return inverse_bracket(H2, A2, b.lo, b.hi, level2);
    };
    auto related = [&](const Bracket& x, const Bracket& y) {
        double px = 1.0;
        for (int a = 0; a <= max_iter; ++a, px *= n2) {
            double py = 1.0;
            for (int b = 0; b <= max_iter; ++b, py *= n2) {
                double cx = 0.5 * (x.lo + x.hi) * px, cy = 0.5 * (y.lo + y.hi) * py;
                double tol = 0.5 * cfg.rigidity_c * ((x.width() + kFloor) * px + (y.width() + kFloor) * py);
                if (circular_distance(cx, cy) <= tol) return true;
            }
        }
        return false;
    };

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    rep.samples = samples;
    for (int s = 0; s < samples; ++s) {
        double th = unif(rng);
        Bracket u0 = phi(th);
        rep.max_width = std::max(rep.max_width, u0.width());
        double pb = 1.0;
        for (int b = 0; b <= orbit_depth; ++b, pb *= n1) {
            double base = wrap_turns(th * pb);
            double pa = 1.0;
            for (int a = 0; a <= orbit_depth; ++a, pa *= n1) {
                for (int i = 0; i < static_cast<int>(pa); ++i) {
                    double th2 = wrap_turns((base + i) / pa);
                    Bracket u = phi(th2);
                    rep.max_width = std::max(rep.max_width, u.width());
                    ++rep.checked_points;
                    if (!related(u, u0)) ++rep.failures;
                }
            }
        }
    }
    rep.pass = rep.failures == 0 && rep.phi_monotone && std::abs(rep.phi_zero) <= cfg.eps_point;
    return rep;
}

std::vector<PushedLeaf> push_lamination(const ConjugacyTable& H, const std::vector<std::pair<double, double>>& leaves,
                                        double tolerance) {
    std::vector<PushedLeaf> out;
    for (const auto& [a, b] : leaves) {
        double ga = 0.0, gb = 0.0;
        double u = H.inverse(CirclePoint(a), &ga);
        double v = H.inverse(CirclePoint(b), &gb);
        if (ga > tolerance || gb > tolerance)
            throw LeafOutsideResolution("leaf endpoint lies in a table gap of width " +
                                        std::to_string(std::max(ga, gb)) + " > tolerance");
        out.push_back({u, v});
    }
    return out;
}

}  // namespace pfm
