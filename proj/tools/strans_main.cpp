// strans: transition statistics and maximum-entropy tests for repeated
// two-person constant-sum 2x2 games.
//
// Subcommands:
//   paper-repro  regenerate the published summary tables from the embedded
//                counts and diff every cell against the printed values
//   simulate     generate a synthetic session CSV from an agent-model config
//   analyze      run the full counting -> prediction -> validation chain on
//                a session CSV
//   validate     lint a session CSV against the dataset invariants

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "strans/analysis.hpp"

namespace fs = std::filesystem;
using namespace strans;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsage = 2;

fs::path default_out_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("STRANS_OUT_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return "strans-out";
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PayoffMatrix resolve_game(const std::string& spec) {
  if (is_fixture_id(spec)) return load_game_fixture(spec).payoffs;
  return payoff_matrix_from_json(nlohmann::json::parse(read_file(spec)));
}

int cmd_paper_repro(const std::string& games_arg, const std::string& out_flag,
                    double confidence, const std::string& normalization) {
  std::vector<std::string> ids;
  if (games_arg == "all") {
    for (std::string_view id : fixture_ids()) ids.emplace_back(id);
  } else {
    std::istringstream ss(games_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!is_fixture_id(tok)) {
        std::cerr << "unknown game id '" << tok << "' (expected g1..g11 or all)\n";
        return kExitUsage;
      }
      ids.push_back(tok);
    }
    if (ids.empty()) {
      std::cerr << "no games selected\n";
      return kExitUsage;
    }
  }

  AnalysisOptions opts;
  opts.confidence = confidence;
  opts.normalization =
      normalization == "omega" ? Normalization::Omega : Normalization::DirectionTotal;
  const fs::path out_dir = default_out_dir(out_flag);
  const ReproOutcome outcome = run_paper_repro(ids, out_dir, opts);

  std::cout << "checked " << outcome.cells_checked << " cells, "
            << outcome.cells_failed << " outside tolerance\n";
  for (const auto& c : outcome.diffs) {
    if (!c.ok) {
      std::cout << "  DEVIATION " << c.table << " " << c.game << " " << c.location
                << ": computed " << c.computed << " vs printed " << c.printed << "\n";
    }
  }
  std::cout << "artifacts in " << out_dir.string() << "\n";
  return outcome.ok ? kExitOk : kExitDataError;
}

int cmd_simulate(const std::string& config_path, const std::string& out_flag,
                 const std::optional<std::uint64_t>& seed_override) {
  SimConfig cfg;
  try {
    cfg = sim_config_from_json(nlohmann::json::parse(read_file(config_path)));
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config: invalid JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "config: " << e.what() << "\n";
    return kExitUsage;
  }
  if (seed_override.has_value()) cfg.master_seed = *seed_override;
  const auto errs = validate_config(cfg);
  if (!errs.empty()) {
    for (const auto& e : errs) std::cerr << "config: " << e << "\n";
    return kExitUsage;
  }

  const fs::path out_dir = default_out_dir(out_flag);
  fs::create_directories(out_dir);
  const fs::path csv_path = out_dir / "sessions.csv";
  const SessionDataset dataset = simulate_experiment(cfg);
  write_text_file(csv_path, serialize_sessions(dataset));

  RunManifest manifest;
  manifest.command = "simulate";
  manifest.resolved_config = sim_config_to_json(cfg);
  manifest.input_digests[config_path] = file_digest(config_path);
  manifest.artifacts = {csv_path.filename().string()};
  manifest.master_seed = cfg.master_seed;
  write_manifest(manifest, out_dir / "manifest.json");

  std::cout << "wrote " << csv_path.string() << " (" << cfg.pairs << " pairs x "
            << cfg.rounds << " rounds)\n";
  return kExitOk;
}

int cmd_analyze(const std::string& data_path, const std::string& game_spec,
                const std::string& out_flag, double confidence,
                const std::string& normalization, const std::string& format,
                const std::string& label) {
  PayoffMatrix game;
  try {
    game = resolve_game(game_spec);
  } catch (const std::exception& e) {
    std::cerr << "game: " << e.what() << "\n";
    return kExitUsage;
  }

  SessionDataset dataset;
  try {
    std::ifstream in(data_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + data_path);
    dataset = parse_sessions_unchecked(in, game);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitDataError;
  }
  const ValidationReport report = validate_dataset(dataset);
  if (!report.ok()) {
    std::cerr << "validation failed:\n" << report.to_string();
    return kExitDataError;
  }

  AnalysisOptions opts;
  opts.confidence = confidence;
  opts.normalization =
      normalization == "omega" ? Normalization::Omega : Normalization::DirectionTotal;
  const GameAnalysis analysis = analyze_dataset(dataset, label, opts);
  const std::span<const GameAnalysis> one(&analysis, 1);

  const fs::path out_dir = default_out_dir(out_flag);
  fs::create_directories(out_dir);
  std::vector<std::string> artifacts;
  const auto write = [&out_dir, &artifacts](const std::string& name,
                                            std::string_view text) {
    write_text_file(out_dir / name, text);
    artifacts.push_back(name);
  };

  if (format == "json") {
    write("counts.json", counts_json(one).dump(2) + "\n");
    write("aggregates.json", aggregates_json(one).dump(2) + "\n");
    write("expected.json", expected_json(one).dump(2) + "\n");
    write("regression.json", regression_json(one).dump(2) + "\n");
  } else {
    write("counts.csv", counts_csv(one));
    write("aggregates.csv", aggregates_csv(one));
    write("expected.csv", expected_csv(one));
    write("regression.csv", regression_csv(one));
  }
  write("gof.json", gof_json(one).dump(2) + "\n");
  write("points.json", points_json(one).dump(2) + "\n");
  write("entropy.json", entropy_json(one).dump(2) + "\n");
  write("predictions.json", predictions_json(one).dump(2) + "\n");

  RunManifest manifest;
  manifest.command = "analyze";
  manifest.resolved_config = {{"data", data_path},
                              {"game", game_spec},
                              {"label", label},
                              {"confidence", confidence},
                              {"normalization", normalization},
                              {"format", format}};
  manifest.input_digests[data_path] = file_digest(data_path);
  if (!is_fixture_id(game_spec)) {
    manifest.input_digests[game_spec] = file_digest(game_spec);
  }
  manifest.artifacts = artifacts;
  write_manifest(manifest, out_dir / "manifest.json");

  std::cout << "analyzed " << dataset.meta.pairs << " pairs x " << dataset.meta.rounds
            << " rounds; artifacts in " << out_dir.string() << "\n";
  return kExitOk;
}

int cmd_validate(const std::string& data_path, const std::string& game_spec) {
  PayoffMatrix game;  // payoffs are irrelevant to structural checks
  if (!game_spec.empty()) {
    try {
      game = resolve_game(game_spec);
    } catch (const std::exception& e) {
      std::cerr << "game: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  try {
    std::ifstream in(data_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + data_path);
    const SessionDataset dataset = parse_sessions_unchecked(in, game);
    const ValidationReport report = validate_dataset(dataset);
    if (!report.ok()) {
      std::cout << report.to_string();
      return kExitDataError;
    }
    std::cout << "ok: " << dataset.meta.pairs << " pairs x " << dataset.meta.rounds
              << " rounds\n";
    return kExitOk;
  } catch (const std::exception& e) {
    std::cout << e.what() << "\n";
    return kExitDataError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transition statistics and maximum-entropy tests for repeated 2x2 games"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string out_flag;
  double confidence = 0.99;
  std::string normalization = "total";
  std::string format = "csv";

  auto add_common = [&](CLI::App* sub, bool with_analysis_opts) {
    sub->add_option("--out", out_flag, "output directory (default $STRANS_OUT_DIR or ./strans-out)");
    if (with_analysis_opts) {
      sub->add_option("--confidence", confidence, "confidence level for intervals")
          ->check(CLI::Range(0.5, 0.9999));
      sub->add_option("--normalization", normalization,
                      "expected-count scale: direction total or omega")
          ->check(CLI::IsMember({"total", "omega"}));
    }
  };

  auto* repro = app.add_subcommand("paper-repro",
                                   "regenerate the published tables and diff them");
  std::string games_arg = "all";
  repro->add_option("--games", games_arg, "comma-separated g1..g11, or all");
  add_common(repro, true);

  auto* simulate = app.add_subcommand("simulate", "generate a synthetic session CSV");
  std::string config_path;
  simulate->add_option("--config", config_path, "simulation config JSON")->required();
  std::uint64_t seed_flag = 0;
  bool seed_set = false;
  simulate->add_option("--seed", seed_flag, "override master_seed from the config")
      ->each([&seed_set](const std::string&) { seed_set = true; });
  add_common(simulate, false);

  auto* analyze = app.add_subcommand("analyze", "analyze a session CSV");
  std::string data_path, game_spec, label = "dataset";
  analyze->add_option("--data", data_path, "session CSV path")->required();
  analyze->add_option("--game", game_spec, "fixture id (g1..g11) or payoff JSON path")
      ->required();
  analyze->add_option("--label", label, "column label for emitted tables");
  analyze->add_option("--format", format, "table artifact format")
      ->check(CLI::IsMember({"csv", "json"}));
  add_common(analyze, true);

  auto* validate = app.add_subcommand("validate", "lint a session CSV");
  std::string v_data, v_game;
  validate->add_option("--data", v_data, "session CSV path")->required();
  validate->add_option("--game", v_game, "fixture id or payoff JSON path (optional)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (repro->parsed()) {
      return cmd_paper_repro(games_arg, out_flag, confidence, normalization);
    }
    if (simulate->parsed()) {
      std::optional<std::uint64_t> seed_override;
      if (seed_set) seed_override = seed_flag;
      return cmd_simulate(config_path, out_flag, seed_override);
    }
    if (analyze->parsed()) {
      return cmd_analyze(data_path, game_spec, out_flag, confidence, normalization,
                         format, label);
    }
    if (validate->parsed()) {
      return cmd_validate(v_data, v_game);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitUsage;
}
