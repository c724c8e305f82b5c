#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfm/fuchsian.hpp"

namespace pfm {

// Piecewise Moebius circle map. Piece j acts on the arc [x_j, x_{j+1})
// (indices mod k). Construction only validates the shape; continuity and
// the covering/Markov properties are checked by the verifiers below.
class PfmMap {
public:
    PfmMap() = default;
    PfmMap(std::vector<CirclePoint> breakpoints, std::vector<GroupElement> pieces, GroupPresentation group);

    std::size_t size() const { return breaks_.size(); }
    const std::vector<CirclePoint>& breakpoints() const { return breaks_; }
    const std::vector<GroupElement>& pieces() const { return pieces_; }
    const GroupPresentation& group() const { return group_; }

    CirclePoint breakpoint(std::size_t j) const { return breaks_[j % breaks_.size()]; }
    const GroupElement& piece(std::size_t j) const { return pieces_[j % pieces_.size()]; }
    // Arc length of [x_j, x_{j+1}] in turns.
    double arc_length(std::size_t j) const;
    // Index of the arc containing p (right-continuous at breakpoints).
    std::size_t arc_index(CirclePoint p) const;
    CirclePoint apply(CirclePoint p) const;
    // One-sided images at breakpoint j.
    CirclePoint left_image(std::size_t j) const;
    CirclePoint right_image(std::size_t j) const;
    // |A'| on the open arc containing p.
    double derivative(CirclePoint p) const;

private:
    std::vector<CirclePoint> breaks_;
    std::vector<GroupElement> pieces_;
    GroupPresentation group_;
};

inline CirclePoint evaluate(const PfmMap& A, CirclePoint p) { return A.apply(p); }

struct ContinuityReport {
    std::vector<double> residuals;     // residual at x_{j+1}
    std::vector<double> c1_mismatch;   // | |g_j'| - |g_{j+1}'| | at x_{j+1}
    double corner_residual = 0.0;      // distance of a_1 o ... o a_k to identity
    double max_residual = 0.0;
    std::optional<int> first_failure;  // first j with residual_j > eps_point

    bool ok() const { return !first_failure.has_value(); }
};
ContinuityReport verify_continuity(const PfmMap& A, const Config& cfg = default_config());
// Throws Discontinuous on failure.
void require_continuity(const PfmMap& A, const Config& cfg = default_config());

// Oriented image-arc length of piece j, in (0,1).
double image_length(const PfmMap& A, std::size_t j);
int degree(const PfmMap& A, const Config& cfg = default_config());

struct TransitionMatrix {
    std::vector<std::vector<int>> entries;  // entries[j][l] = 1 iff A(int I_l) covers I_j
    bool markov_ok = false;

    std::size_t size() const { return entries.size(); }
    std::vector<int> row_sums() const;
    TransitionMatrix permuted(const std::vector<int>& order) const;  // order[i] = original arc index
};
// Index of the breakpoint equal to p, or -1.
int find_breakpoint(const PfmMap& A, CirclePoint p, double eps);
// Throws NotMarkov when a breakpoint image is not a breakpoint.
TransitionMatrix transition_matrix(const PfmMap& A, const Config& cfg = default_config());
// Breakpoint index map j -> index of A(x_j); throws NotMarkov.
std::vector<int> breakpoint_dynamics(const PfmMap& A, const Config& cfg = default_config());

enum class SideType { parabolic, hyperbolic, contracting };
enum class BreakClass {
    sym_parabolic,
    sym_hyperbolic,
    asym_hyperbolic,
    par_left_hyp_right,
    hyp_left_par_right,
    non_expanding
};
const char* to_string(BreakClass c);
bool is_mixed(BreakClass c);

struct PeriodicBreakpoint {
    int index;
    int period;
    double left_multiplier;
    double right_multiplier;
    BreakClass cls;
};
struct BreakpointReport {
    std::vector<PeriodicBreakpoint> periodic;
    std::vector<int> preperiodic;  // breakpoints that are not periodic
};
BreakpointReport breakpoint_report(const PfmMap& A, int max_period, const Config& cfg = default_config(),
                                   double multiplier_tol = 1e-7);

struct MinimalityReport {
    std::vector<int> mergeable;  // j such that piece_{j-1} equals piece_j
    bool minimal() const { return mergeable.empty(); }
};
MinimalityReport minimality_check(const PfmMap& A, const Config& cfg = default_config());
// Merge equal adjacent pieces (keeping the first word).
PfmMap minimize(const PfmMap& A, const Config& cfg = default_config());

struct FundamentalDomain {
    std::vector<Geodesic> edges;       // edge j over the arc [x_j, x_{j+1}]
    std::vector<CirclePoint> vertices;
};
FundamentalDomain fundamental_domain(const PfmMap& A, const Config& cfg = default_config());

// Composite map `outer o inner`, with the breakpoints of `inner` plus the
// inner-preimages of the breakpoints of `outer`. Words concatenate.
PfmMap compose(const PfmMap& outer, const PfmMap& inner, const Config& cfg = default_config());

// Minimum of |A'| sampled on `samples` equally spaced points.
double min_derivative(const PfmMap& A, int samples);

}  // namespace pfm
