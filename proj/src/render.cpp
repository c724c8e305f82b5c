#include "pfm/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "pfm/constructions.hpp"

namespace pfm {

const char* to_string(Layer l) {
    switch (l) {
        case Layer::unitCircle: return "unitCircle";
        case Layer::fundamentalDomain: return "fundamentalDomain";
        case Layer::innerDomain: return "innerDomain";
        case Layer::laminationLeaves: return "laminationLeaves";
        case Layer::breakpointLabels: return "breakpointLabels";
        case Layer::mapGraph: return "mapGraph";
        case Layer::conjugacyGraph: return "conjugacyGraph";
    }
    return "?";
}

Layer layer_from_name(const std::string& s) {
    for (Layer l : {Layer::unitCircle, Layer::fundamentalDomain, Layer::innerDomain, Layer::laminationLeaves,
                    Layer::breakpointLabels, Layer::mapGraph, Layer::conjugacyGraph})
        if (s == to_string(l)) return l;
    throw ParseError("unknown render layer '" + s + "'");
}

namespace {

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    std::string s(buf);
    if (s == "-0.000000") s = "0.000000";
    return s;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

struct Disk {
    double cx, cy, r;
    double x(cplx z) const { return cx + r * z.real(); }
    double y(cplx z) const { return cy - r * z.imag(); }
};

void geodesic_path(std::ostringstream& os, const Disk& D, CirclePoint a, CirclePoint b, const char* cls,
                   const Config& cfg) {
    Geodesic g = geodesic_between(a, b, cfg);
    cplx za = g.a.z(), zb = g.b.z();
    os << "<path class=\"" << cls << "\" d=\"M " << num(D.x(za)) << ' ' << num(D.y(za));
    if (g.is_diameter()) {
        os << " L " << num(D.x(zb)) << ' ' << num(D.y(zb));
    } else {
        const auto& e = std::get<EuclideanCircle>(g.realization);
        cplx u = za - e.center, v = zb - e.center;
        // Counter-clockwise around the centre in the plane is clockwise on screen.
        int sweep = (u.real() * v.imag() - u.imag() * v.real()) > 0.0 ? 1 : 0;
        os << " A " << num(D.r * e.radius) << ' ' << num(D.r * e.radius) << " 0 0 " << sweep << ' ' << num(D.x(zb))
           << ' ' << num(D.y(zb));
    }
    os << "\"/>\n";
}

void label(std::ostringstream& os, double x, double y, const char* cls, const std::string& text) {
    os << "<text class=\"" << cls << "\" x=\"" << num(x) << "\" y=\"" << num(y) << "\">" << escape(text)
       << "</text>\n";
}

struct Panel {
    double x0, y0, w, h;
};

void frame(std::ostringstream& os, const Panel& P, const char* cls) {
    os << "<rect class=\"" << cls << "\" x=\"" << num(P.x0) << "\" y=\"" << num(P.y0) << "\" width=\"" << num(P.w)
       << "\" height=\"" << num(P.h) << "\" fill=\"none\" stroke=\"black\"/>\n";
}

// Lifted graph of A on [0,1): one polyline per piece, continuous across the
// breakpoints, with total rise equal to the degree.
void map_graph(std::ostringstream& os, const Panel& P, const PfmMap& A, const Config& cfg) {
    const int n = degree(A, cfg);
    const std::size_t k = A.size();
    frame(os, P, "map-frame");
    auto px = [&](double t) { return P.x0 + P.w * t; };
    auto py = [&](double v) { return P.y0 + P.h * (1.0 - v / n); };
    // Start from the arc containing angle 0 so the graph starts at x = 0.
    std::size_t first = A.arc_index(CirclePoint(0.0));
    double lift = A.apply(CirclePoint(0.0)).turns();
    std::vector<std::pair<double, std::size_t>> segs;  // (start angle, arc) in increasing angle on [0,1)
    for (std::size_t s = 0; s < k; ++s) {
        std::size_t j = (first + s) % k;
        double start = s == 0 ? 0.0 : A.breakpoint(j).turns();
        segs.push_back({start, j});
    }
    if (A.breakpoint(first).turns() > 0.0) segs.push_back({A.breakpoint(first).turns(), first});
    for (std::size_t s = 0; s < segs.size(); ++s) {
        double lo = segs[s].first, hi = s + 1 < segs.size() ? segs[s + 1].first : 1.0;
        if (hi <= lo) continue;
        const MoebiusMap& g = A.piece(segs[s].second).matrix;
        os << "<polyline class=\"branch\" fill=\"none\" stroke=\"black\" points=\"";
        const int samples = 32;
        double prev = g.apply(CirclePoint(lo)).turns();
        double v = lift;
        for (int i = 0; i <= samples; ++i) {
            double t = lo + (hi - lo) * i / samples;
            double img = g.apply(CirclePoint(t)).turns();
            if (i > 0) v += wrap_turns(img - prev);
            prev = img;
            os << (i ? " " : "") << num(px(t)) << ',' << num(py(v));
        }
        os << "\"/>\n";
        lift = v;
    }
}

void conjugacy_graph(std::ostringstream& os, const Panel& P, const ConjugacyTable& H) {
    frame(os, P, "conjugacy-frame");
    std::uint64_t N = H.size();
    std::uint64_t step = N > 2048 ? N / 2048 : 1;
    os << "<polyline class=\"conjugacy\" fill=\"none\" stroke=\"black\" points=\"";
    bool firstpt = true;
    for (std::uint64_t j = 0; j <= N; j += step) {
        double t = static_cast<double>(j) / static_cast<double>(N);
        double y = H.offset(j);
        os << (firstpt ? "" : " ") << num(P.x0 + P.w * t) << ',' << num(P.y0 + P.h * (1.0 - y));
        firstpt = false;
    }
    os << "\"/>\n";
}

}  // namespace

std::string render_svg(const RenderSpec& spec, const RenderInput& in, const Config& cfg) {
    const bool graph_map = spec.layers.count(Layer::mapGraph) > 0;
    const bool graph_h = spec.layers.count(Layer::conjugacyGraph) > 0;
    const int columns = 1 + (graph_map ? 1 : 0) + (graph_h ? 1 : 0);
    const double colw = static_cast<double>(spec.width) / columns;
    const double side = std::min(colw, static_cast<double>(spec.height));
    Disk D{0.5 * colw, 0.5 * spec.height, 0.42 * side};

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\"" << spec.height
       << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\">\n";
    os << "<style>path{fill:none;stroke-width:1}.domain{stroke:#1f4e9c}.inner{stroke:#b0261c}"
          ".leaf{stroke:#2e7d32}text{font-family:sans-serif;font-size:11px}</style>\n";

    os << "<g id=\"unitCircle\">\n<circle cx=\"" << num(D.cx) << "\" cy=\"" << num(D.cy) << "\" r=\"" << num(D.r)
       << "\" fill=\"none\" stroke=\"black\"/>\n</g>\n";

    const PfmMap* A = in.map;
    if (spec.layers.count(Layer::fundamentalDomain)) {
        os << "<g id=\"fundamentalDomain\">\n";
        if (!A) {
            os << "<!-- no map given -->\n";
        } else {
            for (std::size_t j = 0; j < A->size(); ++j)
                geodesic_path(os, D, A->breakpoint(j), A->breakpoint(j + 1), "domain", cfg);
            for (std::size_t j = 0; j < A->size(); ++j) {
                double mid = A->breakpoint(j).turns() + 0.5 * A->arc_length(j);
                cplx z = 1.08 * CirclePoint(mid).z();
                label(os, D.x(z), D.y(z), "piece-label", A->group().word_label(A->piece(j).word));
            }
        }
        os << "</g>\n";
    }
    if (spec.layers.count(Layer::innerDomain)) {
        os << "<g id=\"innerDomain\">\n";
        if (!A) {
            os << "<!-- no map given -->\n";
        } else {
            try {
                InnerDomain I = inner_domain(*A, cfg);
                for (const Geodesic& e : I.edges) geodesic_path(os, D, e.a, e.b, "inner", cfg);
            } catch (const NoFixedVertices&) {
                os << "<!-- no fixed vertices -->\n";
            }
        }
        os << "</g>\n";
    }
    if (spec.layers.count(Layer::laminationLeaves)) {
        os << "<g id=\"laminationLeaves\">\n";
        if (!in.leaves) {
            os << "<!-- no lamination given -->\n";
        } else {
            for (const Leaf& l : *in.leaves) geodesic_path(os, D, l.a, l.b, "leaf", cfg);
        }
        os << "</g>\n";
    }
    if (spec.layers.count(Layer::breakpointLabels)) {
        os << "<g id=\"breakpointLabels\">\n";
        if (!A) {
            os << "<!-- no map given -->\n";
        } else {
            for (std::size_t j = 0; j < A->size(); ++j) {
                cplx z = A->breakpoint(j).z();
                os << "<circle class=\"breakpoint\" cx=\"" << num(D.x(z)) << "\" cy=\"" << num(D.y(z))
                   << "\" r=\"2.000000\"/>\n";
                cplx t = 1.16 * z;
                label(os, D.x(t), D.y(t), "breakpoint-label", "x" + std::to_string(j));
            }
        }
        os << "</g>\n";
    }
    int col = 1;
    if (graph_map) {
        Panel P{col * colw + 0.08 * colw, 0.1 * spec.height, 0.84 * colw, 0.8 * spec.height};
        ++col;
        os << "<g id=\"mapGraph\">\n";
        if (!A)
            os << "<!-- no map given -->\n";
        else
            map_graph(os, P, *A, cfg);
        os << "</g>\n";
    }
    if (graph_h) {
        Panel P{col * colw + 0.08 * colw, 0.1 * spec.height, 0.84 * colw, 0.8 * spec.height};
        os << "<g id=\"conjugacyGraph\">\n";
        if (!in.conjugacy)
            os << "<!-- no conjugacy table given -->\n";
        else
            conjugacy_graph(os, P, *in.conjugacy);
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace pfm
