#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "strans/fixtures.hpp"
#include "strans/simulate.hpp"
#include "strans/stats.hpp"

namespace strans {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct AnalysisOptions {
  double confidence = 0.99;
  Normalization normalization = Normalization::DirectionTotal;
};

// Per (state, direction) fit diagnostics: chi-square against the MaxEnt
// expectation (when every expected cell is positive) and entropy of the
// actual distribution next to the MaxEnt and minimum-entropy benchmarks.
struct StateFitDetail {
  SocialState state;
  Direction direction = Direction::Backward;
  long long total = 0;
  std::optional<GoodnessOfFit> gof;
  std::string skip_reason;  // set when gof is absent
  double actual_entropy_nats = 0.0;
  double maxent_entropy_nats = 0.0;
  double min_constrained_entropy_nats = 0.0;
};

// Everything the pipeline derives from one treatment's transition counts.
struct GameAnalysis {
  std::string label;
  TransitionCounts counts;
  std::array<long long, 4> omega{};
  std::array<std::optional<AggregatedTransition>, 4> agg_backward{};
  std::array<std::optional<AggregatedTransition>, 4> agg_forward{};
  ExpectedTable expected;
  PairedPoints points;
  std::optional<RegressionResult> regression_backward;
  std::optional<RegressionResult> regression_forward;
  std::vector<StateFitDetail> fits;

  const std::array<std::optional<AggregatedTransition>, 4>& aggregates(Direction dir) const {
    return dir == Direction::Backward ? agg_backward : agg_forward;
  }
  const std::optional<RegressionResult>& regression(Direction dir) const {
    return dir == Direction::Backward ? regression_backward : regression_forward;
  }
};

GameAnalysis analyze_counts(const TransitionCounts& tc, std::string_view label,
                            const AnalysisOptions& opts = {});
GameAnalysis analyze_dataset(const SessionDataset& d, std::string_view label,
                             const AnalysisOptions& opts = {});

// Cross-game pooled regressions: per direction over the concatenated points
// (the published "total" rows), plus the shared-slope variant with a
// direction-shift dummy for comparison.
struct PooledRegressions {
  std::optional<RegressionResult> backward;
  std::optional<RegressionResult> forward;
  std::optional<DummyRegressionResult> combined;
};
PooledRegressions pool_regressions(std::span<const GameAnalysis> games, double level);

// ---- artifact emission (CSV layouts follow the published tables) ----

std::string counts_csv(std::span<const GameAnalysis> games);
std::string aggregates_csv(std::span<const GameAnalysis> games);
std::string expected_csv(std::span<const GameAnalysis> games);  // display-rounded
std::string regression_csv(std::span<const GameAnalysis> games,
                           const PooledRegressions* pooled = nullptr);

nlohmann::ordered_json counts_json(std::span<const GameAnalysis> games);
nlohmann::ordered_json aggregates_json(std::span<const GameAnalysis> games);
nlohmann::ordered_json expected_json(std::span<const GameAnalysis> games);
nlohmann::ordered_json regression_json(std::span<const GameAnalysis> games,
                                       const PooledRegressions* pooled = nullptr);

nlohmann::ordered_json points_json(std::span<const GameAnalysis> games);
nlohmann::ordered_json predictions_json(std::span<const GameAnalysis> games);
nlohmann::ordered_json gof_json(std::span<const GameAnalysis> games);
nlohmann::ordered_json entropy_json(std::span<const GameAnalysis> games);

// ---- JSON configuration ----

// Payoff matrix document: {"a":..,"b":..,"c":..,"d":..,"s":..}.
PayoffMatrix payoff_matrix_from_json(const nlohmann::json& j);
nlohmann::ordered_json payoff_matrix_to_json(const PayoffMatrix& m);

// Simulation document: game, pairs, rounds, row_agent, col_agent,
// master_seed; agents as {"kind": "IidMixed"|"RothErev"|"LogitResponse",
// ...kind-specific fields}. Throws std::invalid_argument naming the field
// path on any shape or range error.
SimConfig sim_config_from_json(const nlohmann::json& j);
nlohmann::ordered_json sim_config_to_json(const SimConfig& cfg);

// ---- run manifests ----

std::string fnv1a64_hex(std::string_view data);
std::string file_digest(const std::filesystem::path& path);  // "fnv1a64:<hex>"

struct RunManifest {
  std::string command;
  nlohmann::ordered_json resolved_config;
  std::map<std::string, std::string> input_digests;
  std::vector<std::string> artifacts;
  std::optional<std::uint64_t> master_seed;
};

// Adds tool_version and a wall-clock timestamp; timestamps live only here,
// never in the data artifacts.
void write_manifest(const RunManifest& m, const std::filesystem::path& path);

// ---- reproduction of the published chain ----

struct DiffCell {
  std::string table;  // "mean_points", "expected", "regression"
  std::string game;
  std::string location;
  double computed = 0.0;
  double printed = 0.0;
  double tolerance = 0.0;
  bool ok = false;
  std::string note;
};

struct ReproOutcome {
  bool ok = false;
  int cells_checked = 0;
  int cells_failed = 0;
  std::vector<DiffCell> diffs;
  std::vector<std::filesystem::path> files;
};

// Regenerates the mean-point, expected-count and regression tables from the
// embedded transition counts, diffs every cell against the printed values
// at the documented tolerances, and writes the regenerated tables, the diff
// report, scatter plot data and a manifest into out_dir.
ReproOutcome run_paper_repro(std::span<const std::string> game_ids,
                             const std::filesystem::path& out_dir,
                             const AnalysisOptions& opts = {});

void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace strans
