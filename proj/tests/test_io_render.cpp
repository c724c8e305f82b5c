#include <doctest.h>

#include <regex>

#include "pfm/constructions.hpp"
#include "pfm/io.hpp"
#include "pfm/render.hpp"

using namespace pfm;

namespace {
int count(const std::string& s, const std::string& needle) {
    int n = 0;
    for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
}
}  // namespace

TEST_CASE("map JSON round trip") {
    for (const PfmMap& A : {bowen_series(build_G_d(3)), higher_bowen_series(4), bowen_series(build_G_d2(3))}) {
        PfmMap B = map_from_json(json::parse(to_json(A).dump()));
        REQUIRE(B.size() == A.size());
        for (std::size_t j = 0; j < A.size(); ++j) {
            CHECK(std::abs(A.breakpoint(j).turns() - B.breakpoint(j).turns()) < 1e-12);
            CHECK(distance(A.piece(j).matrix, B.piece(j).matrix) < 1e-12);
            CHECK(A.piece(j).word == B.piece(j).word);
        }
        CHECK(B.group().generators.size() == A.group().generators.size());
    }
}

TEST_CASE("parse errors name the field") {
    json j = to_json(bowen_series(build_G_d(3)));
    j["pieces"][2]["matrix"].erase("alpha");
    try {
        map_from_json(j);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("map.pieces[2].matrix") != std::string::npos);
    }
    json k = to_json(bowen_series(build_G_d(3)));
    k["breakpoints"].erase(0);
    CHECK_THROWS_AS(map_from_json(k), ParseError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), IOError);
}

TEST_CASE("word parsing") {
    GroupPresentation G = build_G_d(4);
    CHECK(parse_word(G, "g1^-1*g3") == Word{-1, 3});
    CHECK(parse_word(G, "g2^2") == Word{2, 2});
    CHECK(parse_word(G, "id").empty());
    CHECK(parse_word_list(G, "g2, g1^-1*g3").size() == 2);
    CHECK_THROWS_AS(parse_word(G, "g7"), ParseError);
    CHECK_THROWS_AS(parse_word(G, "g1^x"), ParseError);
    CHECK(parse_word(build_G_d2(3), "g-3") == Word{4});
}

TEST_CASE("lamination JSON round trip") {
    Lamination L = expand(build_G_d(4), {{2}}, 1);
    Lamination M = lamination_from_json(json::parse(to_json(L).dump()));
    REQUIRE(M.leaves.size() == L.leaves.size());
    for (std::size_t i = 0; i < L.leaves.size(); ++i) CHECK(same_leaf(L.leaves[i], M.leaves[i], 1e-12));
}

TEST_CASE("render: only the circle without layers") {
    PfmMap A = bowen_series(build_G_d(3));
    std::string svg = render_svg({}, {&A});
    CHECK(count(svg, "<circle") == 1);
    CHECK(count(svg, "<path") == 0);
    CHECK(svg.find("id=\"unitCircle\"") != std::string::npos);
}

TEST_CASE("render: fundamental domain of BS(G_5)") {
    PfmMap A = bowen_series(build_G_d(5));
    RenderSpec spec;
    spec.layers = {Layer::fundamentalDomain, Layer::breakpointLabels};
    std::string svg = render_svg(spec, {&A});
    CHECK(count(svg, "class=\"domain\"") == 10);
    CHECK(count(svg, "class=\"piece-label\"") == 10);
    CHECK(svg.find(">g5^-1<") != std::string::npos);
    CHECK(count(svg, "class=\"breakpoint-label\"") == 10);
    CHECK(svg == render_svg(spec, {&A}));
}

TEST_CASE("render: map graph of BS(G_2) rises by the degree") {
    PfmMap A = bowen_series(build_G_d(2));
    RenderSpec spec;
    spec.width = 800;
    spec.height = 400;
    spec.layers = {Layer::mapGraph};
    std::string svg = render_svg(spec, {&A});
    CHECK(count(svg, "class=\"branch\"") == 4);
    // The panel spans 0.8 * height for a rise of deg = 3: first y is bottom, last is top.
    std::regex pts("points=\"([^\"]*)\"");
    std::vector<std::pair<double, double>> all;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), pts); it != std::sregex_iterator(); ++it) {
        std::string s = (*it)[1];
        std::regex xy("([-0-9.]+),([-0-9.]+)");
        for (auto p = std::sregex_iterator(s.begin(), s.end(), xy); p != std::sregex_iterator(); ++p)
            all.push_back({std::stod((*p)[1]), std::stod((*p)[2])});
    }
    REQUIRE(all.size() > 4);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i].second <= all[i - 1].second + 1e-6);
    double rise = (all.front().second - all.back().second) / (0.8 * 400) * 3;
    CHECK(rise == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("render: missing inputs are skipped with a comment") {
    RenderSpec spec;
    spec.layers = {Layer::laminationLeaves, Layer::conjugacyGraph, Layer::innerDomain};
    std::string svg = render_svg(spec, {});
    CHECK(count(svg, "<!--") == 3);
    CHECK_THROWS_AS(layer_from_name("bogus"), ParseError);
    CHECK(layer_from_name("mapGraph") == Layer::mapGraph);
}
