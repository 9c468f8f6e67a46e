#pragma once

#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "strans/session.hpp"

namespace strans {

// Plays the indicator-1 action (R for the column player, D for the row
// player) with fixed probability each round.
struct IidMixedParams {
  double action_probability = 0.5;
};

// Two-parameter reinforcement learner: propensities decay by (1-recency)
// each round, the realized payoff reinforces the chosen action scaled by
// (1-experimentation) and the other action by experimentation; choice is
// proportional to propensities. Requires non-negative own payoffs.
struct RothErevParams {
  double initial_propensity = 1.0;
  double recency = 0.0;          // phi in [0,1)
  double experimentation = 0.0;  // epsilon in [0,1)
};

// Logit best response with the given precision to the opponent's empirical
// action frequency over the last `window` rounds. Unfilled window slots
// carry a uniform prior, so an empty history plays 50/50.
struct LogitResponseParams {
  double precision = 1.0;  // lambda >= 0
  int window = 1;          // w >= 1
};

struct AgentSpec {
  std::variant<IidMixedParams, RothErevParams, LogitResponseParams> params;

  static AgentSpec iid_mixed(double action_probability) {
    return {IidMixedParams{action_probability}};
  }
  static AgentSpec roth_erev(double initial_propensity, double recency,
                             double experimentation) {
    return {RothErevParams{initial_propensity, recency, experimentation}};
  }
  static AgentSpec logit_response(double precision, int window) {
    return {LogitResponseParams{precision, window}};
  }
  const char* kind_name() const;
};

struct SimConfig {
  PayoffMatrix game;
  int pairs = 0;
  int rounds = 0;
  AgentSpec row_agent = AgentSpec::iid_mixed(0.5);
  AgentSpec col_agent = AgentSpec::iid_mixed(0.5);
  std::uint64_t master_seed = 0;
};

// Field-path messages for every violated constraint; empty means valid.
std::vector<std::string> validate_config(const SimConfig& cfg);

// Deterministic 64-bit generator (splitmix64). Uniform doubles are built
// from the raw bits directly so sequences are identical across platforms.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64();
  double next_unit();  // [0, 1)
  bool bernoulli(double p) { return next_unit() < p; }
  double next_gaussian();  // standard normal (Box-Muller)

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Stream splitting rule: the (pair, player) stream seed is splitmix64
// applied twice to master ^ (odd constant * (2*pair_index + player + 1)).
// player 0 is the row player, 1 the column player.
std::uint64_t derive_stream_seed(std::uint64_t master_seed, int pair_index, int player);

enum class PlayerSide { Row, Col };

// What one agent saw in one round: actions as own-side indicators
// (row: 0=U 1=D, col: 0=L 1=R) plus its own realized payoff.
struct AgentObservation {
  int own_action = 0;
  int opp_action = 0;
  double payoff = 0.0;
};

// Incremental agent: act() consumes exactly one draw from the stream,
// observe() folds in the finished round.
class Agent {
 public:
  Agent(const AgentSpec& spec, PlayerSide side, const PayoffMatrix& game);

  int act(RandomStream& stream);
  void observe(const AgentObservation& obs);

  // Probability of playing the indicator-1 action given current state.
  double choice_probability() const;
  // RothErev propensities (action 0, action 1); meaningful only for that kind.
  std::pair<double, double> roth_erev_propensities() const { return {prop0_, prop1_}; }

 private:
  double own_payoff(int own, int opp) const;

  AgentSpec spec_;
  PlayerSide side_;
  PayoffMatrix game_;
  double prop0_ = 0.0, prop1_ = 0.0;      // RothErev state
  std::deque<int> opp_window_;            // LogitResponse state
};

// Functional form of one decision: replays the history into a fresh agent
// and draws the next action from the stream.
int agent_step(const AgentSpec& spec, PlayerSide side, const PayoffMatrix& game,
               std::span<const AgentObservation> history, RandomStream& stream);

// One pair's rounds, deterministic given (master_seed, pair_index); agents
// see only this pair's history. Throws std::invalid_argument on an invalid
// config (message lists the field paths).
std::vector<RoundRecord> simulate_session(const SimConfig& cfg, int pair_index);

// All pairs, assembled in pair-index order. Pair ids are "p1".."pN",
// zero-padded to the width of N.
SessionDataset simulate_experiment(const SimConfig& cfg);

std::string pair_label(int pair_index, int pair_count);

}  // namespace strans
