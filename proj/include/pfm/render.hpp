#pragma once

#include <set>
#include <string>
#include <vector>

#include "pfm/dynamics.hpp"
#include "pfm/laminations.hpp"

namespace pfm {

enum class Layer {
    unitCircle,
    fundamentalDomain,
    innerDomain,
    laminationLeaves,
    breakpointLabels,
    mapGraph,
    conjugacyGraph,
};
const char* to_string(Layer l);
Layer layer_from_name(const std::string& s);  // ParseError

struct RenderSpec {
    int width = 800;
    int height = 800;
    std::set<Layer> layers;  // the unit circle is always drawn
};

struct RenderInput {
    const PfmMap* map = nullptr;
    const std::vector<Leaf>* leaves = nullptr;
    const ConjugacyTable* conjugacy = nullptr;
};

// Deterministic SVG: fixed element order and 6-decimal coordinates.
// Layers whose input is missing are skipped with an XML comment.
std::string render_svg(const RenderSpec& spec, const RenderInput& in, const Config& cfg = default_config());

}  // namespace pfm
