#include "pfm/pfm_map.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pfm/errors.hpp"

namespace pfm {

PfmMap::PfmMap(std::vector<CirclePoint> breakpoints, std::vector<GroupElement> pieces, GroupPresentation group)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)), group_(std::move(group)) {
    if (breaks_.empty()) throw std::invalid_argument("PfmMap needs at least one breakpoint");
    if (breaks_.size() != pieces_.size()) throw std::invalid_argument("PfmMap: one piece per breakpoint arc");
    for (std::size_t j = 1; j < breaks_.size(); ++j)
        if (!(breaks_[j - 1].turns() < breaks_[j].turns()))
            throw std::invalid_argument("PfmMap: breakpoints must be strictly ascending");
}

double PfmMap::arc_length(std::size_t j) const {
    if (breaks_.size() == 1) return 1.0;
    return ccw_offset(breakpoint(j).turns(), breakpoint(j + 1).turns());
}

std::size_t PfmMap::arc_index(CirclePoint p) const {
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), p.turns(),
                               [](double t, const CirclePoint& b) { return t < b.turns(); });
    if (it == breaks_.begin()) return breaks_.size() - 1;
    return static_cast<std::size_t>(it - breaks_.begin()) - 1;
}

CirclePoint PfmMap::apply(CirclePoint p) const { return pieces_[arc_index(p)].matrix.apply(p); }

CirclePoint PfmMap::left_image(std::size_t j) const {
    return piece(j + size() - 1).matrix.apply(breakpoint(j));
}

CirclePoint PfmMap::right_image(std::size_t j) const { return piece(j).matrix.apply(breakpoint(j)); }

double PfmMap::derivative(CirclePoint p) const { return boundary_derivative(pieces_[arc_index(p)].matrix, p); }

ContinuityReport verify_continuity(const PfmMap& A, const Config& cfg) {
    ContinuityReport r;
    const std::size_t k = A.size();
    MoebiusMap corner;
    for (std::size_t j = 0; j < k; ++j) {
        CirclePoint x = A.breakpoint(j + 1);
        const MoebiusMap& g = A.piece(j).matrix;
        const MoebiusMap& h = A.piece(j + 1).matrix;
        double res = circular_distance(g.apply(x), h.apply(x));
        r.residuals.push_back(res);
        r.c1_mismatch.push_back(std::abs(boundary_derivative(g, x) - boundary_derivative(h, x)));
        r.max_residual = std::max(r.max_residual, res);
        if (res > cfg.eps_point && !r.first_failure) r.first_failure = static_cast<int>(j);
        corner = compose(corner, compose(g.inverse(), h));
    }
    r.corner_residual = distance(corner, MoebiusMap::identity());
    return r;
}

void require_continuity(const PfmMap& A, const Config& cfg) {
    ContinuityReport r = verify_continuity(A, cfg);
    if (!r.ok()) {
        int j = *r.first_failure;
        throw Discontinuous(j, "discontinuous at breakpoint " + std::to_string((j + 1) % A.size()) +
                                   " (residual " + std::to_string(r.residuals[j]) + ")");
    }
}

double image_length(const PfmMap& A, std::size_t j) {
    const MoebiusMap& g = A.piece(j).matrix;
    double a = A.breakpoint(j).turns();
    double len = A.arc_length(j);
    if (A.size() == 1) {
        // A single piece covering the whole circle is a homeomorphism.
        return 1.0;
    }
    return ccw_offset(g.apply(CirclePoint(a)).turns(), g.apply(CirclePoint(a + len)).turns());
}

int degree(const PfmMap& A, const Config& cfg) {
    double total = 0.0;
    for (std::size_t j = 0; j < A.size(); ++j) {
        const MoebiusMap& g = A.piece(j).matrix;
        double a = A.breakpoint(j).turns();
        double len = A.arc_length(j);
        double img = image_length(A, j);
        double mid = ccw_offset(g.apply(CirclePoint(a)).turns(), g.apply(CirclePoint(a + 0.5 * len)).turns());
        if (img <= 0.0 || mid >= img) throw NotACovering("piece " + std::to_string(j) + " reverses orientation");
        total += img;
    }
    double rounded = std::round(total);
    if (std::abs(total - rounded) > 1e3 * cfg.eps_point || rounded < 1.0)
        throw NotACovering("lift increments sum to " + std::to_string(total) + " turns");
    return static_cast<int>(rounded);
}

std::vector<int> TransitionMatrix::row_sums() const {
    std::vector<int> s;
    for (const auto& row : entries) {
        int t = 0;
        for (int v : row) t += v;
        s.push_back(t);
    }
    return s;
}

TransitionMatrix TransitionMatrix::permuted(const std::vector<int>& order) const {
    TransitionMatrix t;
    t.markov_ok = markov_ok;
    t.entries.assign(order.size(), std::vector<int>(order.size(), 0));
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < order.size(); ++j) t.entries[i][j] = entries[order[i]][order[j]];
    return t;
}

int find_breakpoint(const PfmMap& A, CirclePoint p, double eps) {
    const auto& b = A.breakpoints();
    auto it = std::lower_bound(b.begin(), b.end(), p.turns(),
                               [](const CirclePoint& x, double t) { return x.turns() < t; });
    std::size_t k = b.size();
    std::size_t hi = static_cast<std::size_t>(it - b.begin());
    for (std::size_t c : {hi % k, (hi + k - 1) % k, (hi + 1) % k}) {
        if (same_point(b[c], p, eps)) return static_cast<int>(c);
    }
    return -1;
}

std::vector<int> breakpoint_dynamics(const PfmMap& A, const Config& cfg) {
    std::vector<int> f(A.size());
    for (std::size_t j = 0; j < A.size(); ++j) {
        int i = find_breakpoint(A, A.right_image(j), cfg.eps_point);
        if (i < 0)
            throw NotMarkov(static_cast<int>(j), "image of breakpoint " + std::to_string(j) + " (angle " +
                                                     std::to_string(A.breakpoint(j).turns()) +
                                                     ") is not a breakpoint");
        f[j] = i;
    }
    return f;
}

TransitionMatrix transition_matrix(const PfmMap& A, const Config& cfg) {
    const std::size_t k = A.size();
    std::vector<int> f = breakpoint_dynamics(A, cfg);
    TransitionMatrix t;
    t.entries.assign(k, std::vector<int>(k, 0));
    for (std::size_t l = 0; l < k; ++l) {
        int s = f[l];
        int e = find_breakpoint(A, A.piece(l).matrix.apply(A.breakpoint(l + 1)), cfg.eps_point);
        if (e < 0) throw NotMarkov(static_cast<int>((l + 1) % k), "image of breakpoint is not a breakpoint");
        if (s == e) throw NotACovering("piece " + std::to_string(l) + " has a degenerate image");
        for (int m = s; m != e; m = (m + 1) % static_cast<int>(k)) t.entries[m][l] = 1;
    }
    t.markov_ok = true;
    return t;
}

const char* to_string(BreakClass c) {
    switch (c) {
        case BreakClass::sym_parabolic: return "sym-parabolic";
        case BreakClass::sym_hyperbolic: return "sym-hyperbolic";
        case BreakClass::asym_hyperbolic: return "asym-hyperbolic";
        case BreakClass::par_left_hyp_right: return "par-left-hyp-right";
        case BreakClass::hyp_left_par_right: return "hyp-left-par-right";
        case BreakClass::non_expanding: return "non-expanding";
    }
    return "?";
}

bool is_mixed(BreakClass c) {
    return c == BreakClass::par_left_hyp_right || c == BreakClass::hyp_left_par_right;
}

namespace {
SideType side_type(double m, double tol) {
    if (std::abs(m - 1.0) <= tol) return SideType::parabolic;
    return m > 1.0 ? SideType::hyperbolic : SideType::contracting;
}
}  // namespace

BreakpointReport breakpoint_report(const PfmMap& A, int max_period, const Config& cfg, double multiplier_tol) {
    std::vector<int> f = breakpoint_dynamics(A, cfg);
    const int k = static_cast<int>(A.size());
    BreakpointReport rep;
    for (int j = 0; j < k; ++j) {
        // After k steps the orbit sits on its cycle.
        int c = j;
        for (int s = 0; s < k; ++s) c = f[c];
        int period = 1;
        for (int x = f[c]; x != c; x = f[x]) ++period;
        if (period > max_period)
            throw PeriodOverflow("breakpoint " + std::to_string(j) + " has eventual period " +
                                 std::to_string(period) + " > " + std::to_string(max_period));
        bool periodic = false;
        int x = j;
        for (int s = 0; s < period; ++s) x = f[x];
        periodic = (x == j);
        if (!periodic) {
            rep.preperiodic.push_back(j);
            continue;
        }
        double left = 1.0, right = 1.0;
        x = j;
        for (int s = 0; s < period; ++s) {
            CirclePoint p = A.breakpoint(x);
            right *= boundary_derivative(A.piece(x).matrix, p);
            left *= boundary_derivative(A.piece(x + k - 1).matrix, p);
            x = f[x];
        }
        SideType l = side_type(left, multiplier_tol), r = side_type(right, multiplier_tol);
        BreakClass cls;
        if (l == SideType::contracting || r == SideType::contracting)
            cls = BreakClass::non_expanding;
        else if (l == SideType::parabolic && r == SideType::parabolic)
            cls = BreakClass::sym_parabolic;
        else if (l == SideType::parabolic)
            cls = BreakClass::par_left_hyp_right;
        else if (r == SideType::parabolic)
            cls = BreakClass::hyp_left_par_right;
        else
            cls = std::abs(left - right) <= multiplier_tol * std::max(left, right) ? BreakClass::sym_hyperbolic
                                                                                 : BreakClass::asym_hyperbolic;
        rep.periodic.push_back({j, period, left, right, cls});
    }
    return rep;
}

MinimalityReport minimality_check(const PfmMap& A, const Config& cfg) {
    MinimalityReport r;
    const std::size_t k = A.size();
    if (k < 2) return r;
    for (std::size_t j = 0; j < k; ++j)
        if (distance(A.piece(j + k - 1).matrix, A.piece(j).matrix) <= cfg.eps_match)
            r.mergeable.push_back(static_cast<int>(j));
    return r;
}

PfmMap minimize(const PfmMap& A, const Config& cfg) {
    MinimalityReport r = minimality_check(A, cfg);
    if (r.minimal()) return A;
    const std::size_t k = A.size();
    std::vector<bool> drop(k, false);
    for (int j : r.mergeable) drop[j] = true;
    if (std::all_of(drop.begin(), drop.end(), [](bool b) { return b; })) {
        return PfmMap({A.breakpoint(0)}, {A.piece(0)}, A.group());
    }
    // The surviving piece of a merged run is the one starting it.
    std::vector<CirclePoint> b;
    std::vector<GroupElement> p;
    for (std::size_t j = 0; j < k; ++j) {
        if (drop[j]) continue;
        b.push_back(A.breakpoint(j));
        p.push_back(A.piece(j));
    }
    return PfmMap(std::move(b), std::move(p), A.group());
}

FundamentalDomain fundamental_domain(const PfmMap& A, const Config& cfg) {
    FundamentalDomain fd;
    fd.vertices = A.breakpoints();
    for (std::size_t j = 0; j < A.size(); ++j)
        fd.edges.push_back(geodesic_between(A.breakpoint(j), A.breakpoint(j + 1), cfg));
    return fd;
}

PfmMap compose(const PfmMap& outer, const PfmMap& inner, const Config& cfg) {
    struct Entry {
        double angle;
        GroupElement piece;
    };
    std::vector<Entry> entries;
    const auto& ob = outer.breakpoints();
    for (std::size_t j = 0; j < inner.size(); ++j) {
        const GroupElement& h = inner.piece(j);
        double a = inner.breakpoint(j).turns();
        double ha = h.matrix.apply(CirclePoint(a)).turns();
        double L = image_length(inner, j);
        // Outer breakpoints strictly inside the image arc, by ccw offset.
        std::vector<double> cuts{0.0};
        std::vector<double> offs;
        for (const auto& y : ob) {
            double o = ccw_offset(ha, y.turns());
            if (o > cfg.eps_point && o < L - cfg.eps_point) offs.push_back(o);
        }
        std::sort(offs.begin(), offs.end());
        cuts.insert(cuts.end(), offs.begin(), offs.end());
        cuts.push_back(L);
        MoebiusMap hinv = h.matrix.inverse();
        for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
            double start = s == 0 ? a : hinv.apply(CirclePoint(ha + cuts[s])).turns();
            CirclePoint mid(ha + 0.5 * (cuts[s] + cuts[s + 1]));
            const GroupElement& g = outer.piece(outer.arc_index(mid));
            Word w = g.word;
            w.insert(w.end(), h.word.begin(), h.word.end());
            entries.push_back({wrap_turns(start), {std::move(w), compose(g.matrix, h.matrix)}});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.angle < y.angle; });
    std::vector<CirclePoint> b;
    std::vector<GroupElement> p;
    for (auto& e : entries) {
        b.emplace_back(e.angle);
        p.push_back(std::move(e.piece));
    }
    return PfmMap(std::move(b), std::move(p), inner.group());
}

double min_derivative(const PfmMap& A, int samples) {
    double m = 1e300;
    for (int i = 0; i < samples; ++i) m = std::min(m, A.derivative(CirclePoint((i + 0.5) / samples)));
    return m;
}

}  // namespace pfm
