// Command-line front end for the piecewise Fuchsian Markov toolkit.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "pfm/constructions.hpp"
#include "pfm/dynamics.hpp"
#include "pfm/io.hpp"
#include "pfm/laminations.hpp"
#include "pfm/render.hpp"

using namespace pfm;

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Globals {
    double eps_point = default_config().eps_point;
    std::uint64_t seed = default_config().seed;
    bool json = false;

    Config config() const {
        Config c;
        c.eps_point = eps_point;
        c.seed = seed;
        return c;
    }
};

std::string fmt(double x, const char* f = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

void emit(const Globals& g, const json& j, const std::string& text) {
    if (g.json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

PfmMap load_map(const std::string& path) { return map_from_json(read_json_file(path)); }

void write_or_print(const std::string& out, const std::string& text) {
    if (out.empty())
        std::cout << text;
    else
        write_text_file(out, text);
}

// ---------------------------------------------------------------- build

struct BuildArgs {
    std::string family, group = "G_d", out;
    int d = 0, k = 0;
};

int cmd_build(const Globals& g, const BuildArgs& a) {
    Config cfg = g.config();
    PfmMap A;
    if (a.family == "bowen-series") {
        if (a.d == 0) throw CLI::ValidationError("--d is required for bowen-series");
        GroupPresentation G = a.group == "G_d1"   ? build_G_d1(a.d)
                              : a.group == "G_d2" ? build_G_d2(a.d)
                                                  : build_G_d(a.d);
        A = bowen_series(G, cfg);
    } else if (a.family == "higher-bs" || a.family == "cfm") {
        if (a.k == 0) throw CLI::ValidationError("--k is required for " + a.family);
        A = a.family == "cfm" ? completely_folding(a.k, cfg) : higher_bowen_series(a.k, cfg);
    } else {
        if (a.d == 0) throw CLI::ValidationError("--d is required for non-example-b");
        A = non_example_B(a.d, cfg);
    }
    std::string text = to_json(A).dump(2) + "\n";
    if (a.out.empty()) {
        std::cout << text;
    } else {
        write_text_file(a.out, text);
        json j = {{"out", a.out}, {"arcs", A.size()}, {"degree", degree(A, cfg)}};
        emit(g, j, "wrote " + a.out + ": " + std::to_string(A.size()) + " arcs, degree " +
                       std::to_string(degree(A, cfg)) + "\n");
    }
    return kPass;
}

// ---------------------------------------------------------------- report

int cmd_report(const Globals& g, const std::string& path, int max_period) {
    Config cfg = g.config();
    PfmMap A = load_map(path);
    std::ostringstream os;
    json j;
    j["arcs"] = A.size();
    os << "arcs: " << A.size() << '\n';

    ContinuityReport c = verify_continuity(A, cfg);
    j["continuity"] = {{"max_residual", c.max_residual}, {"corner_residual", c.corner_residual}, {"ok", c.ok()}};
    double c1 = 0.0;
    for (double x : c.c1_mismatch) c1 = std::max(c1, x);
    j["continuity"]["max_c1_mismatch"] = c1;
    if (!c.ok()) {
        j["status"] = "Discontinuous";
        j["failing_breakpoint"] = *c.first_failure;
        os << "Discontinuous at breakpoint " << *c.first_failure << " (residual "
           << fmt(c.residuals[*c.first_failure]) << ")\n";
        emit(g, j, os.str());
        return kCheckFailed;
    }
    os << "continuity: max residual " << fmt(c.max_residual) << ", max C1 mismatch " << fmt(c1) << '\n';

    bool ok = true;
    try {
        int n = degree(A, cfg);
        j["degree"] = n;
        os << "degree: " << n << '\n';
        TransitionMatrix T = transition_matrix(A, cfg);
        j["markov_ok"] = T.markov_ok;
        j["transition_matrix"] = T.entries;
        os << "MarkovOK: " << (T.markov_ok ? "yes" : "no") << '\n';
        for (const auto& row : T.entries) {
            os << "  ";
            for (int e : row) os << e;
            os << '\n';
        }
        ok = ok && T.markov_ok;

        BreakpointReport br = breakpoint_report(A, max_period, cfg);
        json classes = json::array();
        int mixed = 0;
        os << "periodic breakpoints:\n";
        for (const PeriodicBreakpoint& p : br.periodic) {
            classes.push_back({{"index", p.index},
                               {"period", p.period},
                               {"left", p.left_multiplier},
                               {"right", p.right_multiplier},
                               {"class", to_string(p.cls)}});
            if (is_mixed(p.cls)) ++mixed;
            os << "  x" << p.index << " period " << p.period << " multipliers " << fmt(p.left_multiplier) << ' '
               << fmt(p.right_multiplier) << ' ' << to_string(p.cls) << '\n';
        }
        j["periodic_breakpoints"] = classes;
        j["preperiodic_breakpoints"] = br.preperiodic;
        ok = ok && mixed == 0;

        MinimalityReport m = minimality_check(A, cfg);
        j["minimal"] = m.minimal();
        os << "minimal: " << (m.minimal() ? "yes" : "no") << '\n';

        BoundaryCheck b = boundary_self_map_check(A, cfg);
        j["boundary_self_map"] = {{"passes", b.passes}, {"reason", b.reason}, {"failing_edge", b.failing_edge}};
        os << "boundary self-map: " << (b.passes ? "passes" : "fails (" + b.reason + ")") << '\n';
        if (b.passes) {
            j["boundary_self_map"]["punctures"] = b.punctures;
            j["boundary_self_map"]["order_two_points"] = b.order_two_points;
            os << "  punctures " << b.punctures << ", order-two points " << b.order_two_points << '\n';
        }

        FoldReport f = folding_check(A, cfg);
        json folds = json::array();
        for (auto [x, y] : f.folds) folds.push_back({x, y});
        j["folds"] = folds;
        os << "folding: " << (f.no_fold() ? "noFold" : std::to_string(f.folds.size()) + " folds") << '\n';

        try {
            InnerDomain I = inner_domain(A, cfg);
            json verts = json::array();
            for (std::size_t i = 0; i < I.vertices.size(); ++i)
                verts.push_back({{"breakpoint", I.breakpoint_indices[i]}, {"turns", I.vertices[i].turns()}});
            j["inner_domain"] = verts;
            os << "inner domain:";
            for (std::size_t i = 0; i < I.vertices.size(); ++i)
                os << " x" << I.breakpoint_indices[i] << '(' << fmt(I.vertices[i].turns()) << ')';
            os << '\n';
            ComponentReport cr = component_injectivity(A, cfg);
            j["component_injective"] = cr.injective;
            os << "component injectivity: " << (cr.injective ? "yes" : "no") << '\n';
        } catch (const NoFixedVertices&) {
            j["inner_domain"] = nullptr;
            os << "inner domain: none (no fixed vertices)\n";
        }
    } catch (const NotMarkov& e) {
        j["status"] = "NotMarkov";
        os << "NotMarkov: " << e.what() << '\n';
        emit(g, j, os.str());
        return kCheckFailed;
    } catch (const NotACovering& e) {
        j["status"] = "NotACovering";
        os << "NotACovering: " << e.what() << '\n';
        emit(g, j, os.str());
        return kCheckFailed;
    }
    j["status"] = ok ? "ok" : "failed";
    emit(g, j, os.str());
    return ok ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------- check-oe

int cmd_check_oe(const Globals& g, const std::string& path, int samples, int depth, const std::vector<double>& probes) {
    Config cfg = g.config();
    PfmMap A = load_map(path);
    std::vector<CirclePoint> pts;
    for (double p : probes) pts.emplace_back(p);
    OrbitEquivalenceResult r = test_orbit_equivalence(A, A.group(), samples, depth, cfg.seed, pts, cfg);
    json j = {{"pass", r.pass},
              {"checks", r.checks},
              {"max_forward_used", r.max_forward_used},
              {"max_backward_used", r.max_backward_used}};
    std::ostringstream os;
    if (r.pass) {
        os << "orbit equivalence: pass (" << r.checks << " checks, witnesses use at most " << r.max_forward_used
           << " forward / " << r.max_backward_used << " backward steps)\n";
    } else {
        j["failing_point"] = r.failing_point->turns();
        j["failing_generator"] = r.failing_generator;
        os << "orbit equivalence: FAIL at x = " << fmt(r.failing_point->turns(), "%.12f") << " with generator "
           << A.group().word_label({r.failing_generator}) << '\n';
    }
    emit(g, j, os.str());
    return r.pass ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------- conjugacy

int cmd_conjugacy(const Globals& g, const std::string& path, int depth, const std::string& out) {
    Config cfg = g.config();
    PfmMap A = load_map(path);
    ConjugacyTable H = conjugacy_to_power(A, depth, cfg);
    if (!out.empty()) write_text_file(out, to_json(H).dump() + "\n");
    json j = {{"n", H.n()},
              {"depth", H.depth()},
              {"anchor", H.anchor().turns()},
              {"strictly_monotone", H.strictly_monotone()},
              {"table_residual", H.table_residual()},
              {"level_max_gap", H.level_max_gap()}};
    std::ostringstream os;
    os << "n " << H.n() << ", depth " << H.depth() << ", anchor " << fmt(H.anchor().turns()) << '\n';
    os << "strictly monotone: " << (H.strictly_monotone() ? "yes" : "no") << '\n';
    os << "table residual: " << fmt(H.table_residual()) << '\n';
    for (std::size_t m = 1; m < H.level_max_gap().size(); ++m)
        os << "  maxGap level " << m << ": " << fmt(H.level_max_gap()[m]) << '\n';
    if (!out.empty()) os << "wrote " << out << '\n';
    emit(g, j, os.str());
    return H.strictly_monotone() ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------- lamination

int cmd_lamination(const Globals& g, const std::string& path, const std::string& elements, int radius,
                   const std::string& out) {
    Config cfg = g.config();
    PfmMap A = load_map(path);
    std::vector<Word> words = parse_word_list(A.group(), elements);
    json j;
    std::ostringstream os;
    Lamination L;
    try {
        L = expand(A.group(), words, radius, cfg);
    } catch (const LeavesCross& e) {
        j = {{"status", "LeavesCross"}, {"w1", e.w1}, {"w2", e.w2}};
        os << "LeavesCross: " << e.what() << '\n';
        emit(g, j, os.str());
        return kCheckFailed;
    }
    if (!out.empty()) write_text_file(out, to_json(L).dump(2) + "\n");
    InvarianceReport r = invariance_check(A, L, cfg);
    j = {{"leaves", L.leaves.size()},   {"checked", r.checked},     {"symbolic", r.symbolic},
         {"points", r.points},          {"matched", r.matched},     {"chained", r.chained},
         {"inconclusive", r.inconclusive}, {"violations", r.violations}, {"lookup_radius", r.lookup_radius},
         {"status", r.invariant() ? "invariant" : "violation"}};
    os << L.leaves.size() << " leaves at radius " << radius << " (unlinked)\n";
    os << "invariance: " << r.checked << " checked, " << r.symbolic << " symbolic, " << r.matched << " matched, "
       << r.chained << " chained, " << r.points << " collapsed, " << r.inconclusive << " inconclusive, "
       << r.violations << " violations\n";
    if (r.violation_leaf) {
        const Leaf& l = L.leaves[*r.violation_leaf];
        j["violation_leaf"] = {l.a.turns(), l.b.turns()};
        j["violation_image"] = {r.violation_image->a.turns(), r.violation_image->b.turns()};
        os << "violation: leaf {" << fmt(l.a.turns()) << ", " << fmt(l.b.turns()) << "} maps to {"
           << fmt(r.violation_image->a.turns()) << ", " << fmt(r.violation_image->b.turns()) << "}\n";
    }
    os << "(simplicity is approximated by unlinkedness of translates at finite radius)\n";
    if (!out.empty()) os << "wrote " << out << '\n';
    emit(g, j, os.str());
    return r.invariant() ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------- render

struct RenderArgs {
    std::string map, layers, lamination, out;
    int width = 800, height = 800, conjugacy_depth = 6;
};

int cmd_render(const Globals& g, const RenderArgs& a) {
    Config cfg = g.config();
    RenderSpec spec;
    spec.width = a.width;
    spec.height = a.height;
    std::stringstream ss(a.layers);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (!item.empty()) spec.layers.insert(layer_from_name(item));
    }
    std::optional<PfmMap> A;
    if (!a.map.empty()) A = load_map(a.map);
    std::optional<Lamination> L;
    if (!a.lamination.empty()) L = lamination_from_json(read_json_file(a.lamination));
    std::optional<ConjugacyTable> H;
    if (spec.layers.count(Layer::conjugacyGraph) && A) H = conjugacy_to_power(*A, a.conjugacy_depth, cfg);
    RenderInput in;
    in.map = A ? &*A : nullptr;
    in.leaves = L ? &L->leaves : nullptr;
    in.conjugacy = H ? &*H : nullptr;
    std::string svg = render_svg(spec, in, cfg);
    write_or_print(a.out, svg);
    if (!a.out.empty()) emit(g, {{"out", a.out}, {"bytes", svg.size()}}, "wrote " + a.out + "\n");
    return kPass;
}

// ---------------------------------------------------------------- second-iterate

int cmd_second_iterate(const Globals& g, const std::string& path, const std::string& out) {
    Config cfg = g.config();
    PfmMap A = load_map(path);
    PfmMap B = second_iterate_hbs(A, cfg);
    std::string text = to_json(B).dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        write_text_file(out, text);
        emit(g, {{"out", out}, {"arcs", B.size()}, {"degree", degree(B, cfg)}},
             "wrote " + out + ": " + std::to_string(B.size()) + " arcs, degree " + std::to_string(degree(B, cfg)) +
                 "\n");
    }
    return kPass;
}

// ---------------------------------------------------------------- rigidity

int cmd_rigidity(const Globals& g, int k, int depth, int samples, int orbit_depth) {
    Config cfg = g.config();
    RigidityReport r = compose_rigidity(k, depth, samples, orbit_depth, cfg);
    json j = {{"k", r.k},
              {"n_source", r.n_source},
              {"n_target", r.n_target},
              {"phi_monotone", r.phi_monotone},
              {"phi_zero", r.phi_zero},
              {"source_max_gap", r.source_max_gap},
              {"target_max_gap", r.target_max_gap},
              {"checked_points", r.checked_points},
              {"failures", r.failures},
              {"max_bracket_width", r.max_width},
              {"pass", r.pass}};
    std::ostringstream os;
    os << "z^" << r.n_source << " vs z^" << r.n_target << " at depth " << depth << '\n';
    os << "Phi monotone: " << (r.phi_monotone ? "yes" : "no") << ", Phi(0) = " << fmt(r.phi_zero) << '\n';
    os << "maxGap source " << fmt(r.source_max_gap) << ", target " << fmt(r.target_max_gap) << '\n';
    os << "grand-orbit points checked " << r.checked_points << ", failures " << r.failures << '\n';
    os << (r.pass ? "PASS" : "FAIL") << '\n';
    emit(g, j, os.str());
    return r.pass ? kPass : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Piecewise Fuchsian Markov maps: construction, verification and conjugacy"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--eps-point", g.eps_point, "point-equality tolerance in turns")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "seed for sampled checks");
    app.add_flag("--json", g.json, "machine-readable output");

    BuildArgs build;
    auto* b = app.add_subcommand("build", "construct a map and write its JSON");
    b->add_option("--family", build.family)
        ->required()
        ->check(CLI::IsMember({"bowen-series", "higher-bs", "cfm", "non-example-b"}));
    b->add_option("--d", build.d, "genus parameter d")->check(CLI::Range(2, 64));
    b->add_option("--k", build.k, "number of punctures k")->check(CLI::Range(3, 64));
    b->add_option("--group", build.group, "group family for bowen-series")
        ->check(CLI::IsMember({"G_d", "G_d1", "G_d2"}));
    b->add_option("--out", build.out, "output file (stdout if omitted)");

    std::string map_path;
    int max_period = 12;
    auto* rep = app.add_subcommand("report", "verify a map and print its invariants");
    rep->add_option("map", map_path)->required();
    rep->add_option("--max-period", max_period)->check(CLI::Range(1, 64));

    int samples = 200, depth = 2;
    std::vector<double> probes;
    auto* oe = app.add_subcommand("check-oe", "sampled orbit-equivalence test against the map's group");
    oe->add_option("map", map_path)->required();
    oe->add_option("--samples", samples)->check(CLI::NonNegativeNumber);
    oe->add_option("--depth", depth)->check(CLI::Range(0, 8));
    oe->add_option("--probe", probes, "extra points (turns) tested first");

    int cdepth = 12;
    std::string out;
    auto* conj = app.add_subcommand("conjugacy", "tabulate the conjugacy to z^n");
    conj->add_option("map", map_path)->required();
    conj->add_option("--depth", cdepth)->check(CLI::Range(0, 40));
    conj->add_option("--out", out, "h.json output");

    std::string elements;
    int radius = 3;
    auto* lam = app.add_subcommand("lamination", "expand a lamination and check invariance");
    lam->add_option("map", map_path)->required();
    lam->add_option("--elements", elements, "comma-separated words, e.g. \"g2, g1^-1*g3\"")->required();
    lam->add_option("--radius", radius)->check(CLI::Range(0, 8));
    lam->add_option("--out", out, "lamination JSON output");

    RenderArgs ra;
    auto* ren = app.add_subcommand("render", "draw an SVG diagram");
    ren->add_option("map", ra.map);
    ren->add_option("--layers", ra.layers, "comma-separated layer names");
    ren->add_option("--width", ra.width)->check(CLI::Range(16, 20000));
    ren->add_option("--height", ra.height)->check(CLI::Range(16, 20000));
    ren->add_option("--lamination", ra.lamination, "lamination JSON for the laminationLeaves layer");
    ren->add_option("--conjugacy-depth", ra.conjugacy_depth)->check(CLI::Range(0, 16));
    ren->add_option("--out", ra.out, "SVG output (stdout if omitted)");

    auto* sec = app.add_subcommand("second-iterate", "higher Bowen-Series map of the index-two subgroup");
    sec->add_option("map", map_path)->required();
    sec->add_option("--out", out);

    int k = 3, rdepth = 8, rsamples = 50, orbit_depth = 3;
    auto* rig = app.add_subcommand("rigidity", "orbit equivalence of z^(2k-3) and z^((k-1)^2)");
    rig->add_option("--k", k)->check(CLI::Range(3, 16));
    rig->add_option("--depth", rdepth)->check(CLI::Range(1, 16));
    rig->add_option("--samples", rsamples)->check(CLI::NonNegativeNumber);
    rig->add_option("--orbit-depth", orbit_depth)->check(CLI::Range(0, 6));

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*b) return cmd_build(g, build);
        if (*rep) return cmd_report(g, map_path, max_period);
        if (*oe) return cmd_check_oe(g, map_path, samples, depth, probes);
        if (*conj) return cmd_conjugacy(g, map_path, cdepth, out);
        if (*lam) return cmd_lamination(g, map_path, elements, radius, out);
        if (*ren) return cmd_render(g, ra);
        if (*sec) return cmd_second_iterate(g, map_path, out);
        if (*rig) return cmd_rigidity(g, k, rdepth, rsamples, orbit_depth);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "ParseError: " << e.what() << '\n';
        return kUsage;
    } catch (const IOError& e) {
        std::cerr << "IOError: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidDegree& e) {
        std::cerr << "InvalidDegree: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidK& e) {
        std::cerr << "InvalidK: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "check failed: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsage;
}
