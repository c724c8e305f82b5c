#include "pfm/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace pfm {

namespace {

const json& field(const json& j, const char* name, const std::string& where) {
    if (!j.is_object() || !j.contains(name)) throw ParseError(where + ": missing field '" + name + "'");
    return j.at(name);
}

double number(const json& j, const std::string& where) {
    if (!j.is_number()) throw ParseError(where + ": expected a number");
    return j.get<double>();
}

int integer(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
    return j.get<int>();
}

const json& array(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    return j;
}

cplx complex_from(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw ParseError(where + ": expected [re, im]");
    return {number(j[0], where), number(j[1], where)};
}

Word word_from(const json& j, const std::string& where) {
    Word w;
    for (std::size_t i = 0; i < array(j, where).size(); ++i) {
        int g = integer(j[i], where + "[" + std::to_string(i) + "]");
        if (g == 0) throw ParseError(where + ": generator index 0");
        w.push_back(g);
    }
    return w;
}

std::vector<std::string> default_labels(Family f, int d, std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= count; ++i) out.push_back("g" + std::to_string(i));
    if (f == Family::TwoOrbifold && count == static_cast<std::size_t>(d) + 1) out.back() = "g-" + std::to_string(d);
    return out;
}

}  // namespace

json to_json(const MoebiusMap& m) {
    return {{"alpha", {m.alpha().real(), m.alpha().imag()}}, {"beta", {m.beta().real(), m.beta().imag()}}};
}

json to_json(const GroupPresentation& G) {
    json gens = json::array();
    for (const Generator& g : G.generators) gens.push_back(to_json(g.map));
    json verts = json::array();
    for (CirclePoint v : G.vertices) verts.push_back(v.turns());
    return {{"family", family_name(G.family)}, {"d", G.d}, {"generators", gens}, {"vertices", verts}};
}

json to_json(const PfmMap& A) {
    json br = json::array();
    for (CirclePoint b : A.breakpoints()) br.push_back(b.turns());
    json pieces = json::array();
    for (const GroupElement& p : A.pieces()) pieces.push_back({{"word", p.word}, {"matrix", to_json(p.matrix)}});
    return {{"breakpoints", br}, {"pieces", pieces}, {"group", to_json(A.group())}};
}

json to_json(const Lamination& L) {
    json leaves = json::array();
    for (const Leaf& l : L.leaves) leaves.push_back({l.a.turns(), l.b.turns()});
    return {{"elements", L.elements}, {"radius", L.radius}, {"leaves", leaves}};
}

json to_json(const ConjugacyTable& H) {
    json pairs = json::array();
    for (std::uint64_t j = 0; j < H.size(); ++j) pairs.push_back({H.theta(j), H.value(j).turns()});
    return {{"n", H.n()}, {"depth", H.depth()}, {"pairs", pairs}};
}

MoebiusMap moebius_from_json(const json& j, const std::string& where) {
    cplx a = complex_from(field(j, "alpha", where), where + ".alpha");
    cplx b = complex_from(field(j, "beta", where), where + ".beta");
    if (!(std::norm(a) > std::norm(b))) throw ParseError(where + ": |alpha| must exceed |beta|");
    return MoebiusMap(a, b);
}

GroupPresentation group_from_json(const json& j) {
    GroupPresentation G;
    const json& fam = field(j, "family", "group");
    if (!fam.is_string()) throw ParseError("group.family: expected a string");
    try {
        G.family = family_from_name(fam.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(std::string("group.family: ") + e.what());
    }
    G.d = integer(field(j, "d", "group"), "group.d");
    const json& gens = array(field(j, "generators", "group"), "group.generators");
    std::vector<std::string> labels = default_labels(G.family, G.d, gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        G.generators.push_back({labels[i], moebius_from_json(gens[i], "group.generators[" + std::to_string(i) + "]")});
    const json& verts = array(field(j, "vertices", "group"), "group.vertices");
    for (std::size_t i = 0; i < verts.size(); ++i)
        G.vertices.emplace_back(number(verts[i], "group.vertices[" + std::to_string(i) + "]"));
    return G;
}

PfmMap map_from_json(const json& j) {
    GroupPresentation G = group_from_json(field(j, "group", "map"));
    std::vector<CirclePoint> br;
    const json& bj = array(field(j, "breakpoints", "map"), "map.breakpoints");
    for (std::size_t i = 0; i < bj.size(); ++i)
        br.emplace_back(number(bj[i], "map.breakpoints[" + std::to_string(i) + "]"));
    std::vector<GroupElement> pieces;
    const json& pj = array(field(j, "pieces", "map"), "map.pieces");
    for (std::size_t i = 0; i < pj.size(); ++i) {
        std::string where = "map.pieces[" + std::to_string(i) + "]";
        Word w = word_from(field(pj[i], "word", where), where + ".word");
        for (int g : w)
            if (std::abs(g) > static_cast<int>(G.generators.size()))
                throw ParseError(where + ".word: generator " + std::to_string(g) + " out of range");
        pieces.push_back({w, moebius_from_json(field(pj[i], "matrix", where), where + ".matrix")});
    }
    if (br.size() != pieces.size() || br.empty())
        throw ParseError("map.pieces: need one piece per breakpoint");
    try {
        return PfmMap(br, pieces, G);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("map.breakpoints: ") + e.what());
    }
}

Lamination lamination_from_json(const json& j) {
    Lamination L;
    const json& el = array(field(j, "elements", "lamination"), "lamination.elements");
    for (std::size_t i = 0; i < el.size(); ++i)
        L.elements.push_back(word_from(el[i], "lamination.elements[" + std::to_string(i) + "]"));
    L.radius = integer(field(j, "radius", "lamination"), "lamination.radius");
    const json& lv = array(field(j, "leaves", "lamination"), "lamination.leaves");
    for (std::size_t i = 0; i < lv.size(); ++i) {
        std::string where = "lamination.leaves[" + std::to_string(i) + "]";
        if (!lv[i].is_array() || lv[i].size() != 2) throw ParseError(where + ": expected [a, b]");
        CirclePoint a(number(lv[i][0], where)), b(number(lv[i][1], where));
        if (a.turns() > b.turns()) std::swap(a, b);
        L.leaves.push_back({a, b});
    }
    return L;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IOError("cannot write '" + path + "'");
    out << text;
    if (!out) throw IOError("write failed for '" + path + "'");
}

Word parse_word(const GroupPresentation& G, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty word");
    if (s == "id" || s == "1") return {};
    Word w;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        int power = 1;
        if (auto hat = tok.find('^'); hat != std::string::npos) {
            try {
                std::size_t used = 0;
                power = std::stoi(tok.substr(hat + 1), &used);
                if (used != tok.size() - hat - 1) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw ParseError("bad exponent in '" + tok + "'");
            }
            tok = tok.substr(0, hat);
        }
        int index = 0;
        for (std::size_t i = 0; i < G.generators.size(); ++i)
            if (G.generators[i].label == tok) index = static_cast<int>(i) + 1;
        if (index == 0) throw ParseError("unknown generator '" + tok + "'");
        if (power == 0) throw ParseError("zero exponent in '" + tok + "'");
        for (int k = 0; k < std::abs(power); ++k) w.push_back(power > 0 ? index : -index);
    }
    return w;
}

std::vector<Word> parse_word_list(const GroupPresentation& G, const std::string& text) {
    std::vector<Word> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_word(G, item));
    if (out.empty()) throw ParseError("no elements given");
    return out;
}

}  // namespace pfm
