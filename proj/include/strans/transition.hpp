#pragma once

#include <array>
#include <span>
#include <vector>

#include "strans/session.hpp"

namespace strans {

// Reading direction for the 16 ordered state pairs: Forward looks at moves
// out of a state (x_t -> x_{t+1}), Backward at moves into it (x_{t-1} -> x_t).
// Both read the same counts; only the fixed endpoint differs.
enum class Direction { Backward, Forward };

const char* to_string(Direction dir);

struct MeanPoint {
  double p = 0.0;
  double q = 0.0;
};

// The 16 ordered transition counts of one treatment plus per-state totals.
class TransitionCounts {
 public:
  TransitionCounts() { for (auto& row : counts_) row.fill(0); }

  static TransitionCounts from_matrix(const std::array<std::array<long long, 4>, 4>& from_to);

  void add(SocialState from, SocialState to, long long n = 1) {
    counts_[from.index()][to.index()] += n;
  }

  long long count(SocialState from, SocialState to) const {
    return counts_[from.index()][to.index()];
  }

  // Counts out of s, ordered by target state index.
  std::array<long long, 4> row_forward(SocialState s) const;
  // Counts into s, ordered by source state index.
  std::array<long long, 4> row_backward(SocialState s) const;
  std::array<long long, 4> row(SocialState s, Direction dir) const {
    return dir == Direction::Forward ? row_forward(s) : row_backward(s);
  }

  long long total_forward(SocialState s) const;
  long long total_backward(SocialState s) const;
  long long total(SocialState s, Direction dir) const {
    return dir == Direction::Forward ? total_forward(s) : total_backward(s);
  }
  long long total() const;

  friend bool operator==(const TransitionCounts&, const TransitionCounts&) = default;

 private:
  std::array<std::array<long long, 4>, 4> counts_{};  // [from][to]
};

// Mean of a state's four transition endpoints and the resulting aggregate
// vector. Backward: vector = state - mean_point (mean starting point);
// forward: vector = mean_point - state (mean terminal point).
struct AggregatedTransition {
  SocialState state;
  Direction direction = Direction::Backward;
  MeanPoint mean_point;
  double dp = 0.0;
  double dq = 0.0;
  long long total = 0;
};

// Maps each round to its social state x_ij (i from col_action, j from row_action).
std::vector<SocialState> state_sequence(std::span<const RoundRecord> records);

// Counts consecutive-round transitions within each pair; never across pairs.
// Throws std::domain_error if any pair has fewer than 2 rounds.
TransitionCounts count_transitions(const SessionDataset& d);

// Per-state observation counts: occurrences that have a successor round,
// i.e. rounds 1..T-1, which equals the forward totals.
std::array<long long, 4> count_observations(const SessionDataset& d);

// Mean starting point (backward) or mean terminal point (forward) of state s
// at full precision. Throws std::domain_error when the direction-specific
// total is zero (state never entered / never left).
AggregatedTransition aggregated_transition(const TransitionCounts& tc, SocialState s,
                                           Direction dir);

}  // namespace strans
