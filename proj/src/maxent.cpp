#include "strans/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace strans {
namespace {

void require_unit_interval(MeanPoint mp, const char* who) {
  if (!(mp.p >= 0.0 && mp.p <= 1.0) || !(mp.q >= 0.0 && mp.q <= 1.0)) {
    throw std::invalid_argument(std::string(who) + ": mean point must lie in [0,1]^2");
  }
}

// Distribution with pi11 = t under the marginal constraints (pbar, qbar).
DiscreteDistribution constrained_point(MeanPoint mp, double t) {
  DiscreteDistribution d;
  d.values[3] = t;                          // x11
  d.values[2] = mp.p - t;                   // x10
  d.values[1] = mp.q - t;                   // x01
  d.values[0] = 1.0 - mp.p - mp.q + t;      // x00
  for (double& v : d.values) v = std::max(v, 0.0);  // clamp fp dust at the edges
  return d;
}

}  // namespace

std::array<double, 4> DiscreteDistribution::probabilities() const {
  const double s = sum();
  if (s <= 0.0) {
    throw std::domain_error("DiscreteDistribution: cannot normalize, sum is zero");
  }
  return {values[0] / s, values[1] / s, values[2] / s, values[3] / s};
}

double shannon_entropy(const DiscreteDistribution& d) {
  double h = 0.0;
  for (double p : d.probabilities()) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

DiscreteDistribution maxent_probabilities(MeanPoint mp) {
  require_unit_interval(mp, "maxent_probabilities");
  DiscreteDistribution d;
  d.values[0] = (1.0 - mp.p) * (1.0 - mp.q);
  d.values[1] = (1.0 - mp.p) * mp.q;
  d.values[2] = mp.p * (1.0 - mp.q);
  d.values[3] = mp.p * mp.q;
  return d;
}

DiscreteDistribution brute_force_maxent(MeanPoint mp, double resolution) {
  require_unit_interval(mp, "brute_force_maxent");
  if (!(resolution > 0.0 && resolution <= 0.01)) {
    throw std::invalid_argument("brute_force_maxent: resolution must be in (0, 0.01]");
  }
  const double lo = std::max(0.0, mp.p + mp.q - 1.0);
  const double hi = std::min(mp.p, mp.q);

  DiscreteDistribution best = constrained_point(mp, lo);
  double best_h = shannon_entropy(best);
  const long long steps = static_cast<long long>(std::floor((hi - lo) / resolution));
  for (long long k = 1; k <= steps + 1; ++k) {
    const double t = std::min(lo + static_cast<double>(k) * resolution, hi);
    DiscreteDistribution cand = constrained_point(mp, t);
    const double h = shannon_entropy(cand);
    if (h > best_h) {
      best_h = h;
      best = cand;
    }
    if (t >= hi) break;
  }
  return best;
}

DiscreteDistribution extremal_counterexample(MeanPoint mp, long long total) {
  require_unit_interval(mp, "extremal_counterexample");
  if (total <= 0) {
    throw std::invalid_argument("extremal_counterexample: total must be positive");
  }
  const double lo = std::max(0.0, mp.p + mp.q - 1.0);
  const double hi = std::min(mp.p, mp.q);

  const DiscreteDistribution at_lo = constrained_point(mp, lo);
  const DiscreteDistribution at_hi = constrained_point(mp, hi);
  // Entropy is strictly concave along the interval, so a minimizer is an
  // endpoint. Equal entropies take the smaller pi11.
  const DiscreteDistribution& pick =
      shannon_entropy(at_hi) < shannon_entropy(at_lo) ? at_hi : at_lo;

  // Scale to integers summing to total (largest remainder, index order ties).
  std::array<double, 4> exact{};
  std::array<long long, 4> counts{};
  long long assigned = 0;
  for (int k = 0; k < 4; ++k) {
    exact[k] = pick.values[k] * static_cast<double>(total);
    counts[k] = static_cast<long long>(std::floor(exact[k]));
    assigned += counts[k];
  }
  std::array<int, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return exact[x] - std::floor(exact[x]) > exact[y] - std::floor(exact[y]);
  });
  for (int k = 0; assigned < total; ++k, ++assigned) counts[order[static_cast<size_t>(k % 4)]] += 1;

  DiscreteDistribution out;
  for (int k = 0; k < 4; ++k) out.values[k] = static_cast<double>(counts[k]);
  return out;
}

ExpectedTable expected_frequency_table(const TransitionCounts& tc, Normalization norm) {
  ExpectedTable table;
  for (const SocialState s : kStates) {
    for (const Direction dir : {Direction::Backward, Direction::Forward}) {
      const long long dir_total = tc.total(s, dir);
      if (dir_total == 0) continue;  // undefined aggregate, reported missing
      const AggregatedTransition agg = aggregated_transition(tc, s, dir);
      const long long scale =
          norm == Normalization::Omega ? tc.total_forward(s) : dir_total;
      MaxEntPrediction pred;
      pred.state = s;
      pred.direction = dir;
      pred.constraint = agg.mean_point;
      pred.probabilities = maxent_probabilities(agg.mean_point).values;
      for (int k = 0; k < 4; ++k) {
        pred.expected_counts[k] = pred.probabilities[k] * static_cast<double>(scale);
      }
      pred.scale = scale;
      auto& slot = dir == Direction::Backward ? table.backward : table.forward;
      slot[s.index()] = pred;
    }
  }
  return table;
}

long long round_half_up(double v) {
  return static_cast<long long>(std::floor(v + 0.5));
}

}  // namespace strans
