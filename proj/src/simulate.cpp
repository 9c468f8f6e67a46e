#include "strans/simulate.hpp"

#include <cmath>
#include <stdexcept>

namespace strans {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void check_probability(std::vector<std::string>& errs, const char* path, double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    errs.push_back(std::string(path) + ": must lie in [0,1]");
  }
}

void validate_agent(std::vector<std::string>& errs, const std::string& path,
                    const AgentSpec& spec, PlayerSide side, const PayoffMatrix& game) {
  if (const auto* iid = std::get_if<IidMixedParams>(&spec.params)) {
    check_probability(errs, (path + ".action_probability").c_str(),
                      iid->action_probability);
  } else if (const auto* re = std::get_if<RothErevParams>(&spec.params)) {
    if (!(re->initial_propensity > 0.0)) {
      errs.push_back(path + ".initial_propensity: must be positive");
    }
    if (!(re->recency >= 0.0 && re->recency < 1.0)) {
      errs.push_back(path + ".recency: must lie in [0,1)");
    }
    if (!(re->experimentation >= 0.0 && re->experimentation < 1.0)) {
      errs.push_back(path + ".experimentation: must lie in [0,1)");
    }
    // Negative realized payoffs could drive propensities negative, so the
    // learner only accepts games whose own-side payoffs are non-negative.
    for (const SocialState s : kStates) {
      const double pay =
          side == PlayerSide::Row ? game.row_payoff(s) : game.col_payoff(s);
      if (pay < 0.0) {
        errs.push_back(path + ": RothErev requires non-negative payoffs, but " +
                       (side == PlayerSide::Row ? "row" : "col") + " payoff at " +
                       s.name() + " is negative");
        break;
      }
    }
  } else if (const auto* lr = std::get_if<LogitResponseParams>(&spec.params)) {
    if (!(lr->precision >= 0.0)) errs.push_back(path + ".precision: must be >= 0");
    if (lr->window < 1) errs.push_back(path + ".window: must be >= 1");
  }
}

}  // namespace

const char* AgentSpec::kind_name() const {
  if (std::holds_alternative<IidMixedParams>(params)) return "IidMixed";
  if (std::holds_alternative<RothErevParams>(params)) return "RothErev";
  return "LogitResponse";
}

std::vector<std::string> validate_config(const SimConfig& cfg) {
  std::vector<std::string> errs;
  if (!cfg.game.finite()) errs.push_back("game: payoffs must be finite");
  if (cfg.pairs < 1) errs.push_back("pairs: must be >= 1");
  if (cfg.rounds < 2) errs.push_back("rounds: must be >= 2");
  validate_agent(errs, "row_agent", cfg.row_agent, PlayerSide::Row, cfg.game);
  validate_agent(errs, "col_agent", cfg.col_agent, PlayerSide::Col, cfg.game);
  return errs;
}

std::uint64_t RandomStream::next_u64() { return splitmix64(state_); }

double RandomStream::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = next_unit();
  while (u1 <= 0.0) u1 = next_unit();
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * 3.141592653589793 * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::uint64_t derive_stream_seed(std::uint64_t master_seed, int pair_index, int player) {
  std::uint64_t s = master_seed ^ (0x9E3779B97F4A7C15ULL *
                                   (2ULL * static_cast<std::uint64_t>(pair_index) +
                                    static_cast<std::uint64_t>(player) + 1ULL));
  splitmix64(s);
  splitmix64(s);
  return s;
}

Agent::Agent(const AgentSpec& spec, PlayerSide side, const PayoffMatrix& game)
    : spec_(spec), side_(side), game_(game) {
  if (const auto* re = std::get_if<RothErevParams>(&spec_.params)) {
    prop0_ = prop1_ = re->initial_propensity;
  }
}

double Agent::own_payoff(int own, int opp) const {
  // Row indicator is j, column indicator is i.
  const SocialState s = side_ == PlayerSide::Row ? SocialState{opp, own}
                                                 : SocialState{own, opp};
  return side_ == PlayerSide::Row ? game_.row_payoff(s) : game_.col_payoff(s);
}

double Agent::choice_probability() const {
  if (const auto* iid = std::get_if<IidMixedParams>(&spec_.params)) {
    return iid->action_probability;
  }
  if (std::holds_alternative<RothErevParams>(spec_.params)) {
    return prop1_ / (prop0_ + prop1_);
  }
  const auto& lr = std::get<LogitResponseParams>(spec_.params);
  // Opponent indicator-1 frequency over the window, uniform prior on
  // unfilled slots.
  const double w = static_cast<double>(lr.window);
  double ones = 0.0;
  for (int a : opp_window_) ones += a;
  const double f = (ones + 0.5 * (w - static_cast<double>(opp_window_.size()))) / w;
  const double eu0 = (1.0 - f) * own_payoff(0, 0) + f * own_payoff(0, 1);
  const double eu1 = (1.0 - f) * own_payoff(1, 0) + f * own_payoff(1, 1);
  return 1.0 / (1.0 + std::exp(-lr.precision * (eu1 - eu0)));
}

int Agent::act(RandomStream& stream) {
  return stream.bernoulli(choice_probability()) ? 1 : 0;
}

void Agent::observe(const AgentObservation& obs) {
  if (const auto* re = std::get_if<RothErevParams>(&spec_.params)) {
    prop0_ *= 1.0 - re->recency;
    prop1_ *= 1.0 - re->recency;
    const double direct = obs.payoff * (1.0 - re->experimentation);
    const double spill = obs.payoff * re->experimentation;
    if (obs.own_action == 1) {
      prop1_ += direct;
      prop0_ += spill;
    } else {
      prop0_ += direct;
      prop1_ += spill;
    }
  } else if (const auto* lr = std::get_if<LogitResponseParams>(&spec_.params)) {
    opp_window_.push_back(obs.opp_action);
    while (static_cast<int>(opp_window_.size()) > lr->window) opp_window_.pop_front();
  }
}

int agent_step(const AgentSpec& spec, PlayerSide side, const PayoffMatrix& game,
               std::span<const AgentObservation> history, RandomStream& stream) {
  Agent agent(spec, side, game);
  for (const auto& obs : history) agent.observe(obs);
  return agent.act(stream);
}

std::string pair_label(int pair_index, int pair_count) {
  const std::string width_ref = std::to_string(pair_count);
  std::string num = std::to_string(pair_index + 1);
  while (num.size() < width_ref.size()) num.insert(num.begin(), '0');
  return "p" + num;
}

std::vector<RoundRecord> simulate_session(const SimConfig& cfg, int pair_index) {
  const auto errs = validate_config(cfg);
  if (!errs.empty()) {
    std::string msg = "simulate_session: invalid config:";
    for (const auto& e : errs) msg += "\n  " + e;
    throw std::invalid_argument(msg);
  }
  if (pair_index < 0 || pair_index >= cfg.pairs) {
    throw std::invalid_argument("simulate_session: pair_index out of range");
  }

  RandomStream row_stream(derive_stream_seed(cfg.master_seed, pair_index, 0));
  RandomStream col_stream(derive_stream_seed(cfg.master_seed, pair_index, 1));
  Agent row(cfg.row_agent, PlayerSide::Row, cfg.game);
  Agent col(cfg.col_agent, PlayerSide::Col, cfg.game);

  const std::string id = pair_label(pair_index, cfg.pairs);
  std::vector<RoundRecord> out;
  out.reserve(static_cast<size_t>(cfg.rounds));
  for (int t = 1; t <= cfg.rounds; ++t) {
    const int j = row.act(row_stream);
    const int i = col.act(col_stream);
    const SocialState state{i, j};
    row.observe({j, i, cfg.game.row_payoff(state)});
    col.observe({i, j, cfg.game.col_payoff(state)});
    out.push_back(RoundRecord{id, t, static_cast<RowAction>(j), static_cast<ColAction>(i)});
  }
  return out;
}

SessionDataset simulate_experiment(const SimConfig& cfg) {
  const auto errs = validate_config(cfg);
  if (!errs.empty()) {
    std::string msg = "simulate_experiment: invalid config:";
    for (const auto& e : errs) msg += "\n  " + e;
    throw std::invalid_argument(msg);
  }
  SessionDataset d;
  d.game = cfg.game;
  d.pairs.reserve(static_cast<size_t>(cfg.pairs));
  for (int k = 0; k < cfg.pairs; ++k) {
    PairSession pair;
    pair.pair_id = pair_label(k, cfg.pairs);
    pair.rounds = simulate_session(cfg, k);
    d.pairs.push_back(std::move(pair));
  }
  d.meta = {cfg.pairs, cfg.rounds};
  return d;
}

}  // namespace strans
