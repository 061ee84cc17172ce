#pragma once

#include <array>
#include <span>
#include <string_view>

namespace vtypes {

/// Small-order witness graphs found by exhaustive or targeted search and
/// frozen here. `vtypes search all --output fixtures` regenerates them; the
/// JSON files under fixtures/ mirror this table.
struct WitnessFixture {
  std::string_view objective;
  int order;
  std::string_view graph6;
  int achieved;
};

inline constexpr int kFixtureGeneratorVersion = 1;

// clang-format off
inline constexpr std::array<WitnessFixture, 14> kWitnessFixtures = {{
    {"t-max", 5, "D}g", 2},
    {"t-max", 6, "E~yO", 3},
    {"t-max", 7, "F{dPO", 4},
    {"t-max", 8, "G}iYpG", 5},
    {"vt-max", 5, "DsO", 1},
    {"vt-max", 6, "EsO_", 2},
    {"vt-max", 7, "F}q_o", 4},
    {"vt-max", 8, "G}mtaW", 5},
    {"vt-max", 9, "H}mqXa@", 6},
    {"vt-max", 10, "I]|JyT|`O", 8},
    {"vt-max", 11, "JBlr]JcLjI_", 9},
    {"pantypical-min-size", 9, "H{S[?G@", 11},
    {"figure1-pair", 6, "E}l_", 1},
    {"figure1-pair", 6, "E}ko", 3},
}};
// clang-format on

inline std::span<const WitnessFixture> witness_fixtures() { return kWitnessFixtures; }

}  // namespace vtypes
