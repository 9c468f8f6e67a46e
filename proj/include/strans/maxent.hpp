#pragma once

#include <array>
#include <optional>

#include "strans/transition.hpp"

namespace strans {

// Distribution over the four social states, in probability or count form.
struct DiscreteDistribution {
  std::array<double, 4> values{};  // indexed by state index x00,x01,x10,x11

  double sum() const { return values[0] + values[1] + values[2] + values[3]; }
  std::array<double, 4> probabilities() const;
};

// Shannon entropy of the normalized distribution, in nats, with 0*log 0 = 0.
double shannon_entropy(const DiscreteDistribution& d);

inline double nats_to_bits(double nats) { return nats / 0.6931471805599453; }

// Maximum-entropy distribution over partner states given the two marginal
// mean constraints: the probability of x_ij is
//   pbar^i (1-pbar)^(1-i) * qbar^j (1-qbar)^(1-j).
// Throws std::invalid_argument if either coordinate is outside [0,1].
DiscreteDistribution maxent_probabilities(MeanPoint mean_point);

// Grid search over the one-parameter family of distributions satisfying
//   pi10 + pi11 = pbar  and  pi01 + pi11 = qbar
// (pi11 ranges over [max(0, pbar+qbar-1), min(pbar, qbar)]), returning the
// entropy maximizer to within O(resolution). Independent check of the
// closed form; requires 0 < resolution <= 0.01.
DiscreteDistribution brute_force_maxent(MeanPoint mean_point, double resolution);

// Minimum-entropy distribution under the same two constraints: the lower-
// entropy endpoint of the feasible pi11 interval (ties broken toward the
// smaller pi11), scaled to integer counts summing to `total`. Throws
// std::invalid_argument on out-of-range constraints or total <= 0.
DiscreteDistribution extremal_counterexample(MeanPoint mean_point, long long total);

// Which total scales probabilities into expected counts: the direction-
// specific transition total (reproduces the published expected tables),
// or the observation count Omega (equal to the forward total).
enum class Normalization { DirectionTotal, Omega };

struct MaxEntPrediction {
  SocialState state;
  Direction direction = Direction::Backward;
  MeanPoint constraint;                     // mean point fed to the closed form
  std::array<double, 4> probabilities{};    // per partner state
  std::array<double, 4> expected_counts{};  // probabilities x scale
  long long scale = 0;
};

// Expected transition counts for every (state, direction) with a non-zero
// direction total; cells with zero totals stay empty (prediction undefined).
struct ExpectedTable {
  std::array<std::optional<MaxEntPrediction>, 4> backward{};
  std::array<std::optional<MaxEntPrediction>, 4> forward{};

  const std::array<std::optional<MaxEntPrediction>, 4>& rows(Direction dir) const {
    return dir == Direction::Backward ? backward : forward;
  }
};

ExpectedTable expected_frequency_table(const TransitionCounts& tc,
                                       Normalization norm = Normalization::DirectionTotal);

// Display convention for expected counts: round half up to integers.
long long round_half_up(double v);

}  // namespace strans
