#pragma once

#include <cstddef>
#include <cstdint>

namespace pfm {

// Numerical knobs shared by every module.
struct Config {
    double eps_point = 1e-9;   // two circle points coincide below this distance (turns)
    double eps_cls = 1e-8;     // trace window for parabolic classification
    double eps_match = 1e-8;   // matrix distance for element equality
    std::size_t ball_cap = 1'000'000;
    std::size_t orbit_cap = 5'000'000;
    std::size_t table_cap = std::size_t{1} << 26;  // largest conjugacy level kept in memory
    double rigidity_c = 3.0;
    std::uint64_t seed = 7;
};

inline const Config& default_config() {
    static const Config c{};
    return c;
}

}  // namespace pfm
