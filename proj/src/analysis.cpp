#include "strans/analysis.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace strans {
namespace {

std::string fmt(double v, int decimals = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string transition_label(SocialState s, Direction dir, int partner) {
  const char* arrow = dir == Direction::Backward ? "<-" : "->";
  return "T" + std::to_string(s.i) + std::to_string(s.j) + arrow +
         std::to_string(partner / 2) + std::to_string(partner % 2);
}

const nlohmann::json& field(const nlohmann::json& j, const std::string& path,
                            const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(path.empty() ? std::string(key) + ": missing field"
                                             : path + "." + key + ": missing field");
  }
  return j.at(key);
}

double number_field(const nlohmann::json& j, const std::string& path, const char* key) {
  const auto& v = field(j, path, key);
  if (!v.is_number()) {
    throw std::invalid_argument((path.empty() ? std::string(key) : path + "." + key) +
                                ": expected a number");
  }
  return v.get<double>();
}

long long int_field(const nlohmann::json& j, const std::string& path, const char* key) {
  const auto& v = field(j, path, key);
  if (!v.is_number_integer()) {
    throw std::invalid_argument((path.empty() ? std::string(key) : path + "." + key) +
                                ": expected an integer");
  }
  return v.get<long long>();
}

}  // namespace

GameAnalysis analyze_counts(const TransitionCounts& tc, std::string_view label,
                            const AnalysisOptions& opts) {
  GameAnalysis a;
  a.label = std::string(label);
  a.counts = tc;
  for (const SocialState s : kStates) a.omega[s.index()] = tc.total_forward(s);

  for (const Direction dir : {Direction::Backward, Direction::Forward}) {
    for (const SocialState s : kStates) {
      if (tc.total(s, dir) == 0) continue;
      auto& slot = dir == Direction::Backward ? a.agg_backward : a.agg_forward;
      slot[s.index()] = aggregated_transition(tc, s, dir);
    }
  }
  a.expected = expected_frequency_table(tc, opts.normalization);
  a.points = build_paired_points(tc, a.expected, label);

  for (const Direction dir : {Direction::Backward, Direction::Forward}) {
    try {
      const RegressionResult r =
          ols_regression(filter_direction(a.points, dir), opts.confidence);
      (dir == Direction::Backward ? a.regression_backward : a.regression_forward) = r;
    } catch (const std::domain_error&) {
      // Too few usable points or degenerate regressor: reported missing.
    }
  }

  for (const Direction dir : {Direction::Backward, Direction::Forward}) {
    for (const SocialState s : kStates) {
      const auto& pred = a.expected.rows(dir)[s.index()];
      if (!pred.has_value()) continue;
      StateFitDetail detail;
      detail.state = s;
      detail.direction = dir;
      detail.total = tc.total(s, dir);

      const auto actual_row = tc.row(s, dir);
      DiscreteDistribution actual_dist;
      std::array<double, 4> actual_d{};
      for (int k = 0; k < 4; ++k) {
        actual_dist.values[k] = static_cast<double>(actual_row[k]);
        actual_d[k] = static_cast<double>(actual_row[k]);
      }
      detail.actual_entropy_nats = shannon_entropy(actual_dist);
      detail.maxent_entropy_nats =
          shannon_entropy(DiscreteDistribution{pred->probabilities});
      detail.min_constrained_entropy_nats = shannon_entropy(
          extremal_counterexample(pred->constraint, detail.total));

      bool positive = true;
      for (double e : pred->expected_counts) positive = positive && e > 0.0;
      if (positive) {
        detail.gof = goodness_of_fit(actual_d, pred->expected_counts);
      } else {
        detail.skip_reason = "an expected cell is zero (boundary mean point)";
      }
      a.fits.push_back(std::move(detail));
    }
  }
  return a;
}

GameAnalysis analyze_dataset(const SessionDataset& d, std::string_view label,
                             const AnalysisOptions& opts) {
  return analyze_counts(count_transitions(d), label, opts);
}

PooledRegressions pool_regressions(std::span<const GameAnalysis> games, double level) {
  std::vector<PairedPoints> sets;
  sets.reserve(games.size());
  for (const auto& g : games) sets.push_back(g.points);
  const PairedPoints all = pool_points(sets);

  PooledRegressions out;
  for (const Direction dir : {Direction::Backward, Direction::Forward}) {
    try {
      const RegressionResult r = ols_regression(filter_direction(all, dir), level);
      (dir == Direction::Backward ? out.backward : out.forward) = r;
    } catch (const std::domain_error&) {
    }
  }
  try {
    out.combined = ols_regression_direction_dummy(all, level);
  } catch (const std::domain_error&) {
  }
  return out;
}

// ---- CSV / JSON emission ----

std::string counts_csv(std::span<const GameAnalysis> games) {
  std::ostringstream os;
  os << "direction,transition";
  for (const auto& g : games) os << ',' << g.label;
  os << '\n';
  for (const Direction dir : {Direction::Backward, Direction::Forward}) {
    for (const SocialState s : kStates) {
      for (int k = 0; k < 4; ++k) {
        os << to_string(dir) << ',' << transition_label(s, dir, k);
        for (const auto& g : games) os << ',' << g.counts.row(s, dir)[k];
        os << '\n';
      }
    }
  }
  return os.str();
}

std::string aggregates_csv(std::span<const GameAnalysis> games) {
  std::ostringstream os;
  os << "direction,state,component";
  for (const auto& g : games) os << ',' << g.label;
  os << '\n';
  const char* comps[] = {"p_mean", "q_mean", "dp", "dq", "total"};
  for (const Direction dir : {Direction::Backward, Direction::Forward}) {
    for (const SocialState s : kStates) {
      for (const char* comp : comps) {
        os << to_string(dir) << ',' << s.name() << ',' << comp;
        for (const auto& g : games) {
          const auto& agg = g.aggregates(dir)[s.index()];
          os << ',';
          if (!agg.has_value()) continue;  // empty cell: undefined aggregate
          const std::string c(comp);
          if (c == "p_mean") os << fmt(agg->mean_point.p);
          else if (c == "q_mean") os << fmt(agg->mean_point.q);
          else if (c == "dp") os << fmt(agg->dp);
          else if (c == "dq") os << fmt(agg->dq);
          else os << agg->total;
        }
        os << '\n';
      }
    }
  }
  return os.str();
}

std::string expected_csv(std::span<const GameAnalysis> games) {
  std::ostringstream os;
  os << "direction,transition";
  for (const auto& g : games) os << ',' << g.label;
  os << '\n';
  for (const Direction dir : {Direction::Backward, Direction::Forward}) {
    for (const SocialState s : kStates) {
      for (int k = 0; k < 4; ++k) {
        os << to_string(dir) << ',' << transition_label(s, dir, k);
        for (const auto& g : games) {
          os << ',';
          const auto& pred = g.expected.rows(dir)[s.index()];
          if (pred.has_value()) os << round_half_up(pred->expected_counts[k]);
        }
        os << '\n';
      }
    }
  }
  return os.str();
}

namespace {

void regression_row(std::ostringstream& os, const std::string& game, const char* dir,
                    const RegressionResult& r, const char* note) {
  os << game << ',' << dir << ',' << r.n << ',' << r.dof << ',' << fmt(r.level, 2)
     << ',' << fmt(r.slope) << ',' << fmt(r.slope_lo) << ',' << fmt(r.slope_hi) << ','
     << fmt(r.intercept) << ',' << fmt(r.intercept_lo) << ',' << fmt(r.intercept_hi)
     << ',' << note << '\n';
}

nlohmann::ordered_json regression_entry(const std::string& game, const char* dir,
                                        const RegressionResult& r, const char* note) {
  nlohmann::ordered_json j;
  j["game"] = game;
  j["direction"] = dir;
  j["n"] = r.n;
  j["dof"] = r.dof;
  j["level"] = r.level;
  j["slope"] = r.slope;
  j["slope_ci"] = {r.slope_lo, r.slope_hi};
  j["intercept"] = r.intercept;
  j["intercept_ci"] = {r.intercept_lo, r.intercept_hi};
  if (note[0] != '\0') j["note"] = note;
  return j;
}

}  // namespace

std::string regression_csv(std::span<const GameAnalysis> games,
                           const PooledRegressions* pooled) {
  std::ostringstream os;
  os << "game,direction,n,dof,level,slope,slope_lo,slope_hi,intercept,"
        "intercept_lo,intercept_hi,note\n";
  for (const auto& g : games) {
    for (const Direction dir : {Direction::Backward, Direction::Forward}) {
      const auto& r = g.regression(dir);
      if (r.has_value()) {
        regression_row(os, g.label, to_string(dir), *r, "");
      } else {
        os << g.label << ',' << to_string(dir) << ",,,,,,,,,,unavailable\n";
      }
    }
  }
  if (pooled != nullptr) {
    if (pooled->backward.has_value()) {
      regression_row(os, "total", "backward", *pooled->backward,
                     "per-direction pooling (published method)");
    }
    if (pooled->forward.has_value()) {
      regression_row(os, "total", "forward", *pooled->forward,
                     "per-direction pooling (published method)");
    }
    if (pooled->combined.has_value()) {
      const auto& c = *pooled->combined;
      os << "total,both," << c.n << ',' << c.n - 3 << ',' << fmt(c.level, 2) << ','
         << fmt(c.slope) << ',' << fmt(c.slope_lo) << ',' << fmt(c.slope_hi) << ','
         << fmt(c.intercept) << ",,"
         << ",shared slope with direction dummy (shift " << fmt(c.direction_shift)
         << "); comparison only\n";
    }
  }
  return os.str();
}

nlohmann::ordered_json counts_json(std::span<const GameAnalysis> games) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& g : games) {
    for (const Direction dir : {Direction::Backward, Direction::Forward}) {
      for (const SocialState s : kStates) {
        const auto row = g.counts.row(s, dir);
        for (int k = 0; k < 4; ++k) {
          rows.push_back({{"game", g.label},
                          {"direction", to_string(dir)},
                          {"transition", transition_label(s, dir, k)},
                          {"count", row[k]}});
        }
      }
    }
  }
  return rows;
}

nlohmann::ordered_json aggregates_json(std::span<const GameAnalysis> games) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& g : games) {
    for (const Direction dir : {Direction::Backward, Direction::Forward}) {
      for (const SocialState s : kStates) {
        const auto& agg = g.aggregates(dir)[s.index()];
        nlohmann::ordered_json j{{"game", g.label},
                                 {"direction", to_string(dir)},
                                 {"state", s.name()}};
        if (agg.has_value()) {
          j["p_mean"] = agg->mean_point.p;
          j["q_mean"] = agg->mean_point.q;
          j["dp"] = agg->dp;
          j["dq"] = agg->dq;
          j["total"] = agg->total;
        } else {
          j["missing"] = "zero total";
        }
        rows.push_back(std::move(j));
      }
    }
  }
  return rows;
}

nlohmann::ordered_json expected_json(std::span<const GameAnalysis> games) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& g : games) {
    for (const Direction dir : {Direction::Backward, Direction::Forward}) {
      for (const SocialState s : kStates) {
        const auto& pred = g.expected.rows(dir)[s.index()];
        for (int k = 0; k < 4; ++k) {
          nlohmann::ordered_json j{{"game", g.label},
                                   {"direction", to_string(dir)},
                                   {"transition", transition_label(s, dir, k)}};
          if (pred.has_value()) {
            j["expected"] = pred->expected_counts[k];
            j["expected_rounded"] = round_half_up(pred->expected_counts[k]);
          } else {
            j["missing"] = "zero total";
          }
          rows.push_back(std::move(j));
        }
      }
    }
  }
  return rows;
}

nlohmann::ordered_json regression_json(std::span<const GameAnalysis> games,
                                       const PooledRegressions* pooled) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& g : games) {
    for (const Direction dir : {Direction::Backward, Direction::Forward}) {
      const auto& r = g.regression(dir);
      if (r.has_value()) {
        rows.push_back(regression_entry(g.label, to_string(dir), *r, ""));
      } else {
        rows.push_back({{"game", g.label},
                        {"direction", to_string(dir)},
                        {"missing", "unavailable"}});
      }
    }
  }
  if (pooled != nullptr) {
    if (pooled->backward.has_value()) {
      rows.push_back(regression_entry("total", "backward", *pooled->backward,
                                      "per-direction pooling (published method)"));
    }
    if (pooled->forward.has_value()) {
      rows.push_back(regression_entry("total", "forward", *pooled->forward,
                                      "per-direction pooling (published method)"));
    }
    if (pooled->combined.has_value()) {
      const auto& c = *pooled->combined;
      rows.push_back({{"game", "total"},
                      {"direction", "both"},
                      {"n", c.n},
                      {"dof", c.n - 3},
                      {"level", c.level},
                      {"slope", c.slope},
                      {"slope_ci", {c.slope_lo, c.slope_hi}},
                      {"intercept", c.intercept},
                      {"direction_shift", c.direction_shift},
                      {"note", "shared slope with direction dummy; comparison only"}});
    }
  }
  return rows;
}

nlohmann::ordered_json points_json(std::span<const GameAnalysis> games) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& g : games) {
    for (const auto& pt : g.points.points) {
      rows.push_back({{"game", pt.game},
                      {"direction", to_string(pt.direction)},
                      {"label", pt.label},
                      {"expected", pt.expected},
                      {"actual", pt.actual}});
    }
    for (const auto& note : g.points.exclusions) {
      rows.push_back({{"game", g.label}, {"excluded", note}});
    }
  }
  return rows;
}

nlohmann::ordered_json predictions_json(std::span<const GameAnalysis> games) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& g : games) {
    for (const Direction dir : {Direction::Backward, Direction::Forward}) {
      for (const SocialState s : kStates) {
        const auto& pred = g.expected.rows(dir)[s.index()];
        if (!pred.has_value()) continue;
        const auto actual = g.counts.row(s, dir);
        rows.push_back({{"game", g.label},
                        {"state", s.name()},
                        {"direction", to_string(dir)},
                        {"constraint", {{"p", pred->constraint.p}, {"q", pred->constraint.q}}},
                        {"probabilities", pred->probabilities},
                        {"expected", pred->expected_counts},
                        {"actual", actual},
                        {"scale", pred->scale}});
      }
    }
  }
  return rows;
}

nlohmann::ordered_json gof_json(std::span<const GameAnalysis> games) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& g : games) {
    for (const auto& detail : g.fits) {
      nlohmann::ordered_json j{{"game", g.label},
                               {"state", detail.state.name()},
                               {"direction", to_string(detail.direction)},
                               {"total", detail.total}};
      if (detail.gof.has_value()) {
        j["chi2"] = detail.gof->chi2;
        j["p_value"] = detail.gof->p_value;
        j["dof"] = detail.gof->dof;
      } else {
        j["skipped"] = detail.skip_reason;
      }
      rows.push_back(std::move(j));
    }
  }
  return rows;
}

nlohmann::ordered_json entropy_json(std::span<const GameAnalysis> games) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& g : games) {
    for (const auto& detail : g.fits) {
      rows.push_back({{"game", g.label},
                      {"state", detail.state.name()},
                      {"direction", to_string(detail.direction)},
                      {"total", detail.total},
                      {"actual_nats", detail.actual_entropy_nats},
                      {"actual_bits", nats_to_bits(detail.actual_entropy_nats)},
                      {"maxent_nats", detail.maxent_entropy_nats},
                      {"maxent_bits", nats_to_bits(detail.maxent_entropy_nats)},
                      {"min_constrained_nats", detail.min_constrained_entropy_nats}});
    }
  }
  return rows;
}

// ---- JSON configuration ----

PayoffMatrix payoff_matrix_from_json(const nlohmann::json& j) {
  PayoffMatrix m;
  m.a = number_field(j, "game", "a");
  m.b = number_field(j, "game", "b");
  m.c = number_field(j, "game", "c");
  m.d = number_field(j, "game", "d");
  m.s = number_field(j, "game", "s");
  if (!m.finite()) throw std::invalid_argument("game: payoffs must be finite");
  return m;
}

nlohmann::ordered_json payoff_matrix_to_json(const PayoffMatrix& m) {
  return {{"a", m.a}, {"b", m.b}, {"c", m.c}, {"d", m.d}, {"s", m.s}};
}

namespace {

AgentSpec agent_from_json(const nlohmann::json& j, const std::string& path) {
  const auto& kind_j = field(j, path, "kind");
  if (!kind_j.is_string()) {
    throw std::invalid_argument(path + ".kind: expected a string");
  }
  const std::string kind = kind_j.get<std::string>();
  if (kind == "IidMixed") {
    return AgentSpec::iid_mixed(number_field(j, path, "action_probability"));
  }
  if (kind == "RothErev") {
    return AgentSpec::roth_erev(number_field(j, path, "initial_propensity"),
                                number_field(j, path, "recency"),
                                number_field(j, path, "experimentation"));
  }
  if (kind == "LogitResponse") {
    return AgentSpec::logit_response(
        number_field(j, path, "precision"),
        static_cast<int>(int_field(j, path, "window")));
  }
  throw std::invalid_argument(path + ".kind: unknown agent kind '" + kind + "'");
}

nlohmann::ordered_json agent_to_json(const AgentSpec& spec) {
  nlohmann::ordered_json j;
  j["kind"] = spec.kind_name();
  if (const auto* iid = std::get_if<IidMixedParams>(&spec.params)) {
    j["action_probability"] = iid->action_probability;
  } else if (const auto* re = std::get_if<RothErevParams>(&spec.params)) {
    j["initial_propensity"] = re->initial_propensity;
    j["recency"] = re->recency;
    j["experimentation"] = re->experimentation;
  } else if (const auto* lr = std::get_if<LogitResponseParams>(&spec.params)) {
    j["precision"] = lr->precision;
    j["window"] = lr->window;
  }
  return j;
}

}  // namespace

SimConfig sim_config_from_json(const nlohmann::json& j) {
  SimConfig cfg;
  cfg.game = payoff_matrix_from_json(field(j, "", "game"));
  cfg.pairs = static_cast<int>(int_field(j, "", "pairs"));
  cfg.rounds = static_cast<int>(int_field(j, "", "rounds"));
  cfg.row_agent = agent_from_json(field(j, "", "row_agent"), "row_agent");
  cfg.col_agent = agent_from_json(field(j, "", "col_agent"), "col_agent");
  const auto& seed = field(j, "", "master_seed");
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
    throw std::invalid_argument("master_seed: expected an integer");
  }
  cfg.master_seed = seed.get<std::uint64_t>();
  return cfg;
}

nlohmann::ordered_json sim_config_to_json(const SimConfig& cfg) {
  nlohmann::ordered_json j;
  j["game"] = payoff_matrix_to_json(cfg.game);
  j["pairs"] = cfg.pairs;
  j["rounds"] = cfg.rounds;
  j["row_agent"] = agent_to_json(cfg.row_agent);
  j["col_agent"] = agent_to_json(cfg.col_agent);
  j["master_seed"] = cfg.master_seed;
  return j;
}

// ---- manifests ----

std::string fnv1a64_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("file_digest: cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return "fnv1a64:" + fnv1a64_hex(buf.str());
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
}

void write_manifest(const RunManifest& m, const std::filesystem::path& path) {
  nlohmann::ordered_json j;
  j["command"] = m.command;
  j["tool_version"] = std::string(kToolVersion);
  j["resolved_config"] = m.resolved_config;
  j["input_digests"] = m.input_digests;
  j["artifacts"] = m.artifacts;
  if (m.master_seed.has_value()) j["master_seed"] = *m.master_seed;
  const auto now = std::chrono::system_clock::now();
  j["generated_at_unix_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch())
          .count();
  write_text_file(path, j.dump(2) + "\n");
}

// ---- reproduction ----

namespace {

void diff_value(ReproOutcome& out, std::string table, std::string game,
                std::string location, double computed, double printed,
                double tolerance, std::string note = "") {
  DiffCell cell;
  cell.table = std::move(table);
  cell.game = std::move(game);
  cell.location = std::move(location);
  cell.computed = computed;
  cell.printed = printed;
  cell.tolerance = tolerance;
  cell.ok = std::abs(computed - printed) <= tolerance;
  cell.note = std::move(note);
  out.cells_checked += 1;
  if (!cell.ok) out.cells_failed += 1;
  out.diffs.push_back(std::move(cell));
}

void diff_regression(ReproOutcome& out, const std::string& game, Direction dir,
                     const RegressionResult& r, const PrintedRegression& printed) {
  const std::string d = to_string(dir);
  diff_value(out, "regression", game, d + " slope", r.slope, printed.slope, 0.005);
  diff_value(out, "regression", game, d + " slope_lo", r.slope_lo, printed.slope_lo, 0.02);
  diff_value(out, "regression", game, d + " slope_hi", r.slope_hi, printed.slope_hi, 0.02);
  diff_value(out, "regression", game, d + " intercept_lo", r.intercept_lo,
             printed.intercept_lo, 0.02);
  diff_value(out, "regression", game, d + " intercept_hi", r.intercept_hi,
             printed.intercept_hi, 0.02);
  // The published finding: the intercept interval always brackets zero.
  DiffCell cell;
  cell.table = "regression";
  cell.game = game;
  cell.location = d + " intercept brackets 0";
  cell.computed = r.intercept_lo;
  cell.printed = 0.0;
  cell.tolerance = 0.0;
  cell.ok = r.intercept_lo <= 0.0 && 0.0 <= r.intercept_hi;
  cell.note = "interval check";
  out.cells_checked += 1;
  if (!cell.ok) out.cells_failed += 1;
  out.diffs.push_back(std::move(cell));
}

const TypoCell* find_typo(std::string_view game, Direction dir, int state, int partner) {
  for (const TypoCell& t : typo_cells()) {
    if (t.game_id == game && t.direction == dir && t.state == state &&
        t.partner == partner) {
      return &t;
    }
  }
  return nullptr;
}

std::string diff_csv(const ReproOutcome& out) {
  std::ostringstream os;
  os << "table,game,location,computed,printed,tolerance,ok,note\n";
  for (const auto& c : out.diffs) {
    os << c.table << ',' << c.game << ',' << c.location << ',' << fmt(c.computed) << ','
       << fmt(c.printed) << ',' << fmt(c.tolerance) << ',' << (c.ok ? "yes" : "no")
       << ',' << c.note << '\n';
  }
  return os.str();
}

}  // namespace

ReproOutcome run_paper_repro(std::span<const std::string> game_ids,
                             const std::filesystem::path& out_dir,
                             const AnalysisOptions& opts) {
  ReproOutcome out;
  std::vector<GameAnalysis> analyses;
  analyses.reserve(game_ids.size());

  constexpr double kMeanTol = 0.005 + 1e-9;  // printed values carry 2 decimals

  for (const std::string& id : game_ids) {
    const GameFixture& fx = load_game_fixture(id);
    GameAnalysis a = analyze_counts(fx.transition_counts(), id, opts);

    for (const Direction dir : {Direction::Backward, Direction::Forward}) {
      const auto& printed_means =
          dir == Direction::Backward ? fx.mean_backward : fx.mean_forward;
      for (const SocialState s : kStates) {
        const auto& agg = a.aggregates(dir)[s.index()];
        const std::string d = to_string(dir);
        diff_value(out, "mean_points", id, d + " " + s.name() + " p_mean",
                   agg->mean_point.p, printed_means[s.index()].p, kMeanTol);
        diff_value(out, "mean_points", id, d + " " + s.name() + " q_mean",
                   agg->mean_point.q, printed_means[s.index()].q, kMeanTol);
      }

      const auto& printed_expected =
          dir == Direction::Backward ? fx.expected_backward : fx.expected_forward;
      for (const SocialState s : kStates) {
        const auto& pred = a.expected.rows(dir)[s.index()];
        for (int k = 0; k < 4; ++k) {
          const double regen =
              static_cast<double>(round_half_up(pred->expected_counts[k]));
          const double printed = static_cast<double>(printed_expected[s.index()][k]);
          const TypoCell* typo = find_typo(id, dir, s.index(), k);
          if (typo != nullptr) {
            diff_value(out, "expected", id,
                       transition_label(s, dir, k) + " (corrupt print '" +
                           std::string(typo->printed_text) + "')",
                       regen, static_cast<double>(typo->stored), 2.0,
                       "recomputed reference");
          } else {
            diff_value(out, "expected", id, transition_label(s, dir, k), regen,
                       printed, 1.0);
          }
        }
      }

      const auto& reg = a.regression(dir);
      diff_regression(out, id, dir, *reg,
                      dir == Direction::Backward ? fx.regression_backward
                                                 : fx.regression_forward);
    }
    analyses.push_back(std::move(a));
  }

  const bool all_games = game_ids.size() == fixture_ids().size();
  PooledRegressions pooled = pool_regressions(analyses, opts.confidence);
  if (all_games) {
    for (const Direction dir : {Direction::Backward, Direction::Forward}) {
      const auto& r = dir == Direction::Backward ? pooled.backward : pooled.forward;
      diff_regression(out, "total", dir, *r, printed_total_regression(dir));
    }
  }

  std::filesystem::create_directories(out_dir);
  const auto write = [&out, &out_dir](const std::string& name, std::string_view text) {
    const auto path = out_dir / name;
    write_text_file(path, text);
    out.files.push_back(path);
  };
  write("mean_points_regen.csv", aggregates_csv(analyses));
  write("expected_regen.csv", expected_csv(analyses));
  write("regression_regen.csv", regression_csv(analyses, &pooled));
  write("diff_report.csv", diff_csv(out));
  write("scatter_points.json", points_json(analyses).dump(2) + "\n");

  RunManifest manifest;
  manifest.command = "paper-repro";
  manifest.resolved_config = {{"games", std::vector<std::string>(game_ids.begin(),
                                                                 game_ids.end())},
                              {"confidence", opts.confidence},
                              {"normalization",
                               opts.normalization == Normalization::Omega ? "omega"
                                                                          : "total"}};
  manifest.input_digests["embedded_fixtures"] = "version:1";
  for (const auto& f : out.files) manifest.artifacts.push_back(f.filename().string());
  const auto manifest_path = out_dir / "manifest.json";
  write_manifest(manifest, manifest_path);
  out.files.push_back(manifest_path);

  out.ok = out.cells_failed == 0;
  return out;
}

}  // namespace strans
