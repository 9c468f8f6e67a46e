#include "strans/transition.hpp"

#include <stdexcept>

namespace strans {

const char* to_string(Direction dir) {
  return dir == Direction::Backward ? "backward" : "forward";
}

TransitionCounts TransitionCounts::from_matrix(
    const std::array<std::array<long long, 4>, 4>& from_to) {
  TransitionCounts tc;
  tc.counts_ = from_to;
  return tc;
}

std::array<long long, 4> TransitionCounts::row_forward(SocialState s) const {
  return counts_[s.index()];
}

std::array<long long, 4> TransitionCounts::row_backward(SocialState s) const {
  std::array<long long, 4> out{};
  for (int f = 0; f < 4; ++f) out[f] = counts_[f][s.index()];
  return out;
}

long long TransitionCounts::total_forward(SocialState s) const {
  long long sum = 0;
  for (long long v : counts_[s.index()]) sum += v;
  return sum;
}

long long TransitionCounts::total_backward(SocialState s) const {
  long long sum = 0;
  for (int f = 0; f < 4; ++f) sum += counts_[f][s.index()];
  return sum;
}

long long TransitionCounts::total() const {
  long long sum = 0;
  for (const auto& row : counts_)
    for (long long v : row) sum += v;
  return sum;
}

std::vector<SocialState> state_sequence(std::span<const RoundRecord> records) {
  std::vector<SocialState> out;
  out.reserve(records.size());
  for (const auto& rec : records) out.push_back(rec.state());
  return out;
}

TransitionCounts count_transitions(const SessionDataset& d) {
  TransitionCounts tc;
  for (const auto& pair : d.pairs) {
    if (pair.rounds.size() < 2) {
      throw std::domain_error("count_transitions: pair '" + pair.pair_id +
                              "' has T < 2, no transition exists");
    }
    SocialState prev = pair.rounds.front().state();
    for (size_t t = 1; t < pair.rounds.size(); ++t) {
      SocialState cur = pair.rounds[t].state();
      tc.add(prev, cur);
      prev = cur;
    }
  }
  return tc;
}

std::array<long long, 4> count_observations(const SessionDataset& d) {
  const TransitionCounts tc = count_transitions(d);
  std::array<long long, 4> omega{};
  for (const SocialState s : kStates) omega[s.index()] = tc.total_forward(s);
  return omega;
}

AggregatedTransition aggregated_transition(const TransitionCounts& tc, SocialState s,
                                           Direction dir) {
  const auto row = tc.row(s, dir);
  const long long total = row[0] + row[1] + row[2] + row[3];
  if (total == 0) {
    throw std::domain_error(std::string("aggregated_transition: no ") + to_string(dir) +
                            " transitions for state " + s.name());
  }
  AggregatedTransition agg;
  agg.state = s;
  agg.direction = dir;
  agg.total = total;
  // Partner states x10 and x11 carry p=1, x01 and x11 carry q=1.
  agg.mean_point.p = static_cast<double>(row[2] + row[3]) / static_cast<double>(total);
  agg.mean_point.q = static_cast<double>(row[1] + row[3]) / static_cast<double>(total);
  if (dir == Direction::Backward) {
    agg.dp = s.p() - agg.mean_point.p;
    agg.dq = s.q() - agg.mean_point.q;
  } else {
    agg.dp = agg.mean_point.p - s.p();
    agg.dq = agg.mean_point.q - s.q();
  }
  return agg;
}

}  // namespace strans
