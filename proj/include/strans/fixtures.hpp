#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "strans/game.hpp"
#include "strans/transition.hpp"

namespace strans {

// Printed slope and 99% interval endpoints of one published regression row.
struct PrintedRegression {
  double slope = 0.0;
  double slope_lo = 0.0;
  double slope_hi = 0.0;
  double intercept_lo = 0.0;
  double intercept_hi = 0.0;
};

// Embedded aggregate tables of one of the 11 published constant-sum 2x2
// game treatments (g1-g10: 9 fixed pairs x 500 rounds, g11: 12 x 300).
// Raw round-by-round play was never published; these summaries are the
// reference data for the reproduction chain.
struct GameFixture {
  std::string_view id;  // "g1".."g11"
  PayoffMatrix payoffs;
  int groups = 0;  // number of fixed pairs
  int rounds = 0;  // rounds per pair

  // Observation counts per state (occurrences with a successor round).
  std::array<long long, 4> omega{};

  // Printed transition counts. backward[s][f] counts moves into s from f,
  // forward[s][t] counts moves out of s into t; the two blocks are
  // transposes of one another.
  std::array<std::array<long long, 4>, 4> backward{};
  std::array<std::array<long long, 4>, 4> forward{};

  // Printed mean starting points (backward) and terminal points (forward),
  // two decimals as published.
  std::array<MeanPoint, 4> mean_backward{};
  std::array<MeanPoint, 4> mean_forward{};

  // Printed expected transition counts. The two typographically corrupt
  // cells (see typo_cells) are stored with their recomputed values.
  std::array<std::array<long long, 4>, 4> expected_backward{};
  std::array<std::array<long long, 4>, 4> expected_forward{};

  PrintedRegression regression_backward;
  PrintedRegression regression_forward;

  TransitionCounts transition_counts() const {
    return TransitionCounts::from_matrix(forward);
  }
};

// A published expected-count cell whose printed text is corrupt; `stored`
// is the value recomputed from the counts chain and embedded instead.
struct TypoCell {
  std::string_view game_id;
  Direction direction;
  int state;    // state index
  int partner;  // partner state index
  std::string_view printed_text;
  long long stored;
};

std::span<const std::string_view> fixture_ids();

// Throws std::invalid_argument for an unknown id.
const GameFixture& load_game_fixture(std::string_view game_id);
bool is_fixture_id(std::string_view game_id);

std::span<const TypoCell> typo_cells();

// Published pooled regression rows (176 points per direction across all games).
const PrintedRegression& printed_total_regression(Direction dir);

}  // namespace strans
