#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pfm/dynamics.hpp"
#include "pfm/laminations.hpp"

namespace pfm {

using json = nlohmann::json;

json to_json(const MoebiusMap& m);
json to_json(const GroupPresentation& G);
json to_json(const PfmMap& A);
json to_json(const Lamination& L);
// h.json: {"n", "depth", "pairs": [[theta, H(theta)], ...]} over the full depth grid.
json to_json(const ConjugacyTable& H);

// Parsers throw ParseError naming the offending field.
MoebiusMap moebius_from_json(const json& j, const std::string& where = "matrix");
GroupPresentation group_from_json(const json& j);
PfmMap map_from_json(const json& j);
Lamination lamination_from_json(const json& j);

json read_json_file(const std::string& path);  // IOError, ParseError
void write_text_file(const std::string& path, const std::string& text);  // IOError

// "g1^-1*g3" -> {-1, 3}; labels are the group's generator labels
// (so "g-3" names the extra half-turn of G_{3,2}). "id" is the empty word.
Word parse_word(const GroupPresentation& G, const std::string& text);
// Comma-separated list of words.
std::vector<Word> parse_word_list(const GroupPresentation& G, const std::string& text);

}  // namespace pfm
