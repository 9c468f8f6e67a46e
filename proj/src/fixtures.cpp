#include "strans/fixtures.hpp"

#include <stdexcept>

namespace strans {
namespace {

// Embedded reference data, version 1. Transcribed from the published
// summary tables of the 11 laboratory treatments: payoff parameters and
// observation counts, actual transition counts (both reading directions),
// mean starting/terminal points (2 decimals as printed), expected
// transition counts, and the 99% regression rows. Two corrupt expected
// cells hold recomputed values; see kTypoCells.
constexpr GameFixture kFixtures[] = {
  {
    "g1", {77, 35, 8, 48, 100}, 9, 500,
    {994, 433, 1659, 1405},
    {{{464, 155, 274, 102}, {55, 106, 78, 193}, {401, 83, 1021, 152}, {74, 89, 286, 958}}},
    {{{464, 55, 401, 74}, {155, 106, 83, 89}, {274, 78, 1021, 286}, {102, 193, 152, 958}}},
    {{{0.38, 0.26}, {0.63, 0.69}, {0.71, 0.14}, {0.88, 0.74}}},
    {{{0.48, 0.13}, {0.40, 0.45}, {0.79, 0.22}, {0.79, 0.82}}},
    {{{459, 160, 279, 97}, {50, 111, 83, 188}, {415, 69, 1007, 166}, {42, 121, 318, 926}}},
    {{{452, 67, 413, 62}, {143, 118, 95, 77}, {275, 77, 1020, 287}, {53, 242, 201, 909}}},
    {1.019, 0.971, 1.067, -24.497, 13.829},
    {1.020, 0.950, 1.090, -33.665, 22.369},
  },
  {
    "g2", {73, 74, 87, 20, 100}, 9, 500,
    {1373, 250, 2401, 467},
    {{{764, 52, 504, 53}, {86, 48, 69, 45}, {446, 75, 1722, 160}, {77, 75, 106, 209}}},
    {{{764, 86, 446, 77}, {52, 48, 75, 75}, {504, 69, 1722, 106}, {53, 45, 160, 209}}},
    {{{0.41, 0.08}, {0.46, 0.38}, {0.78, 0.10}, {0.67, 0.61}}},
    {{{0.38, 0.12}, {0.60, 0.49}, {0.76, 0.07}, {0.79, 0.54}}},
    {{{754, 62, 514, 43}, {84, 50, 71, 43}, {470, 51, 1698, 184}, {60, 92, 123, 192}}},
    {{{749, 101, 461, 62}, {51, 49, 76, 74}, {531, 42, 1695, 133}, {45, 53, 168, 201}}},
    {1.010, 0.982, 1.039, -17.453, 11.596},
    {1.012, 0.983, 1.041, -17.993, 11.337},
  },
  {
    "g3", {63, 8, 1, 17, 100}, 9, 500,
    {664, 333, 1955, 1539},
    {{{184, 73, 327, 79}, {35, 89, 100, 111}, {383, 99, 1046, 424}, {62, 72, 482, 925}}},
    {{{184, 35, 383, 62}, {73, 89, 99, 72}, {327, 100, 1046, 482}, {79, 111, 424, 925}}},
    {{{0.61, 0.23}, {0.63, 0.60}, {0.75, 0.27}, {0.91, 0.65}}},
    {{{0.67, 0.15}, {0.51, 0.48}, {0.78, 0.30}, {0.88, 0.67}}},
    {{{198, 59, 313, 93}, {50, 74, 85, 126}, {353, 129, 1076, 394}, {47, 87, 497, 910}}},
    {{{187, 32, 380, 65}, {84, 78, 88, 83}, {300, 127, 1073, 455}, {62, 128, 441, 908}}},
    {0.995, 0.943, 1.047, -19.863, 22.717},
    {0.997, 0.952, 1.041, -17.420, 19.273},
  },
  {
    "g4", {55, 75, 73, 60, 100}, 9, 500,
    {643, 1611, 588, 1649},
    {{{314, 67, 193, 66}, {239, 1054, 70, 245}, {45, 65, 258, 223}, {45, 425, 67, 1115}}},
    {{{314, 239, 45, 45}, {67, 1054, 65, 425}, {193, 70, 258, 67}, {66, 245, 223, 1115}}},
    {{{0.40, 0.21}, {0.20, 0.81}, {0.81, 0.49}, {0.72, 0.93}}},
    {{{0.14, 0.44}, {0.30, 0.92}, {0.55, 0.23}, {0.81, 0.82}}},
    {{{302, 79, 205, 54}, {248, 1045, 61, 254}, {56, 54, 247, 234}, {32, 438, 80, 1102}}},
    {{{309, 244, 50, 40}, {92, 1029, 40, 450}, {202, 61, 249, 76}, {55, 256, 234, 1104}}},
    {1.009, 0.981, 1.037, -14.445, 9.388},
    {1.013, 0.978, 1.048, -18.533, 11.146},
  },
  {
    "g5", {5, 64, 93, 40, 100}, 9, 500,
    {548, 891, 1153, 1899},
    {{{124, 68, 207, 149}, {213, 217, 191, 268}, {51, 143, 483, 476}, {160, 463, 272, 1006}}},
    {{{124, 213, 51, 160}, {68, 217, 143, 463}, {207, 191, 483, 272}, {149, 268, 476, 1006}}},
    {{{0.65, 0.40}, {0.52, 0.55}, {0.83, 0.54}, {0.67, 0.77}}},
    {{{0.39, 0.68}, {0.68, 0.76}, {0.65, 0.40}, {0.78, 0.67}}},
    {{{116, 76, 215, 141}, {195, 235, 209, 250}, {90, 104, 444, 515}, {142, 481, 290, 988}}},
    {{{108, 229, 67, 144}, {67, 218, 144, 462}, {238, 160, 452, 303}, {137, 280, 488, 994}}},
    {1.005, 0.922, 1.088, -31.300, 28.440},
    {1.007, 0.942, 1.072, -25.466, 21.471},
  },
  {
    "g6", {46, 54, 61, 23, 100}, 9, 500,
    {1135, 706, 1729, 921},
    {{{529, 99, 382, 124}, {226, 311, 86, 85}, {235, 86, 1029, 380}, {145, 210, 232, 332}}},
    {{{529, 226, 235, 145}, {99, 311, 86, 210}, {382, 86, 1029, 232}, {124, 85, 380, 332}}},
    {{{0.45, 0.20}, {0.24, 0.56}, {0.81, 0.27}, {0.61, 0.59}}},
    {{{0.33, 0.33}, {0.42, 0.74}, {0.73, 0.18}, {0.77, 0.45}}},
    {{{505, 124, 407, 100}, {237, 300, 75, 96}, {235, 86, 1030, 380}, {146, 209, 231, 333}}},
    {{{508, 247, 256, 124}, {107, 303, 78, 218}, {382, 86, 1029, 232}, {114, 95, 390, 322}}},
    {1.002, 0.956, 1.049, -17.457, 16.123},
    {1.003, 0.961, 1.045, -16.216, 14.447},
  },
  {
    "g7", {89, 53, 82, 92, 100}, 9, 500,
    {502, 1840, 825, 1324},
    {{{143, 169, 89, 98}, {104, 1191, 66, 482}, {145, 99, 478, 103}, {110, 381, 192, 641}}},
    {{{143, 104, 145, 110}, {169, 1191, 99, 381}, {89, 66, 478, 192}, {98, 482, 103, 641}}},
    {{{0.37, 0.54}, {0.30, 0.91}, {0.70, 0.24}, {0.63, 0.77}}},
    {{{0.51, 0.43}, {0.26, 0.85}, {0.81, 0.31}, {0.56, 0.85}}},
    {{{145, 167, 87, 100}, {119, 1176, 51, 497}, {184, 60, 439, 142}, {112, 379, 190, 643}}},
    {{{142, 105, 146, 109}, {198, 1162, 70, 410}, {107, 48, 460, 210}, {88, 492, 113, 631}}},
    {1.012, 0.954, 1.070, -26.656, 19.858},
    {1.017, 0.970, 1.065, -23.895, 14.080},
  },
  {
    "g8", {88, 38, 40, 55, 100}, 9, 500,
    {353, 663, 1443, 2032},
    {{{111, 95, 70, 75}, {11, 264, 62, 327}, {169, 82, 858, 333}, {62, 222, 453, 1297}}},
    {{{111, 11, 169, 62}, {95, 264, 82, 222}, {70, 62, 858, 453}, {75, 327, 333, 1297}}},
    {{{0.41, 0.48}, {0.59, 0.89}, {0.83, 0.29}, {0.86, 0.75}}},
    {{{0.65, 0.21}, {0.46, 0.73}, {0.91, 0.36}, {0.80, 0.80}}},
    {{{106, 100, 75, 70}, {30, 245, 43, 346}, {179, 72, 848, 343}, {72, 212, 443, 1307}}},
    {{{97, 25, 183, 48}, {96, 263, 81, 223}, {85, 47, 843, 468}, {81, 321, 327, 1303}}},
    {0.997, 0.968, 1.026, -11.762, 13.329},
    {1.000, 0.974, 1.026, -11.121, 11.139},
  },
  {
    "g9", {40, 76, 91, 23, 100}, 9, 500,
    {1157, 860, 1366, 1108},
    {{{606, 67, 362, 120}, {263, 365, 85, 145}, {144, 99, 691, 434}, {144, 329, 228, 409}}},
    {{{606, 263, 144, 144}, {67, 365, 99, 329}, {362, 85, 691, 228}, {120, 145, 434, 409}}},
    {{{0.42, 0.16}, {0.27, 0.59}, {0.82, 0.39}, {0.57, 0.66}}},
    {{{0.25, 0.35}, {0.50, 0.81}, {0.67, 0.23}, {0.76, 0.50}}},
    {{{564, 109, 404, 78}, {255, 373, 93, 137}, {148, 95, 687, 438}, {159, 314, 213, 424}}},
    {{{563, 306, 187, 101}, {83, 349, 83, 345}, {345, 102, 708, 211}, {133, 133, 422, 422}}},
    {1.009, 0.909, 1.110, -36.096, 30.798},
    {1.006, 0.894, 1.118, -38.853, 35.654},
  },
  {
    "g10", {69, 5, 13, 33, 100}, 9, 500,
    {443, 465, 995, 2588},
    {{{116, 139, 123, 63}, {43, 121, 55, 247}, {232, 91, 370, 302}, {52, 114, 447, 1976}}},
    {{{116, 43, 232, 52}, {139, 121, 91, 114}, {123, 55, 370, 447}, {63, 247, 302, 1976}}},
    {{{0.42, 0.46}, {0.65, 0.79}, {0.68, 0.39}, {0.94, 0.81}}},
    {{{0.64, 0.21}, {0.44, 0.51}, {0.82, 0.50}, {0.88, 0.86}}},
    {{{138, 117, 101, 85}, {34, 130, 64, 238}, {195, 128, 407, 265}, {32, 134, 467, 1956}}},
    {{{125, 34, 223, 61}, {129, 131, 101, 104}, {88, 90, 405, 412}, {44, 266, 321, 1957}}},
    {1.008, 0.966, 1.050, -24.502, 20.038},
    {1.009, 0.972, 1.045, -21.852, 16.953},
  },
  {
    "g11", {5, 0, 0, 5, 5}, 12, 300,
    {837, 913, 907, 931},
    {{{196, 241, 182, 218}, {149, 216, 231, 319}, {281, 263, 191, 173}, {211, 193, 303, 221}}},
    {{{196, 149, 281, 211}, {241, 216, 263, 193}, {182, 231, 191, 303}, {218, 319, 173, 221}}},
    {{{0.48, 0.55}, {0.60, 0.58}, {0.40, 0.48}, {0.56, 0.45}}},
    {{{0.59, 0.43}, {0.50, 0.45}, {0.54, 0.59}, {0.42, 0.58}}},
    {{{197, 240, 181, 219}, {152, 213, 228, 322}, {283, 261, 189, 175}, {224, 180, 290, 234}}},
    {{{197, 148, 280, 212}, {252, 205, 252, 204}, {170, 243, 203, 291}, {226, 311, 165, 229}}},
    {1.002, 0.886, 1.119, -27.159, 26.109},
    {1.011, 0.848, 1.175, -39.890, 34.780},
  },
};

constexpr PrintedRegression kTotalBackward{1.007, 0.995, 1.019, -6.700, 2.889};
constexpr PrintedRegression kTotalForward{1.009, 0.997, 1.020, -7.170, 2.317};

constexpr std::string_view kIds[] = {"g1", "g2", "g3", "g4",  "g5", "g6",
                                     "g7", "g8", "g9", "g10", "g11"};

constexpr TypoCell kTypoCells[] = {
    {"g6", Direction::Backward, 3, 3, "3~33", 333},
    {"g8", Direction::Forward, 0, 0, "~v97", 97},
};

}  // namespace

std::span<const std::string_view> fixture_ids() { return kIds; }

bool is_fixture_id(std::string_view game_id) {
  for (std::string_view id : kIds)
    if (id == game_id) return true;
  return false;
}

const GameFixture& load_game_fixture(std::string_view game_id) {
  for (const GameFixture& f : kFixtures)
    if (f.id == game_id) return f;
  throw std::invalid_argument("load_game_fixture: unknown game id '" +
                              std::string(game_id) + "'");
}

std::span<const TypoCell> typo_cells() { return kTypoCells; }

const PrintedRegression& printed_total_regression(Direction dir) {
  return dir == Direction::Backward ? kTotalBackward : kTotalForward;
}

}  // namespace strans
