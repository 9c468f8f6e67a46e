#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strans/maxent.hpp"

namespace strans {

// One actual-vs-expected frequency pair, e.g. ("g1", backward, "T01<-10").
struct PairedPoint {
  std::string game;
  Direction direction = Direction::Backward;
  std::string label;
  double expected = 0.0;  // regressor
  double actual = 0.0;    // response
};

struct PairedPoints {
  std::vector<PairedPoint> points;
  std::vector<std::string> exclusions;  // cells skipped for missing aggregates
};

struct RegressionResult {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_lo = 0.0;
  double slope_hi = 0.0;
  double intercept_lo = 0.0;
  double intercept_hi = 0.0;
  double level = 0.0;  // confidence level of the intervals
  int n = 0;
  int dof = 0;  // n - 2
};

// Least squares of actual on expected with t-based confidence intervals
// (homoskedastic residual variance, n-2 dof). Requires n >= 3 and
// non-degenerate x; throws std::domain_error otherwise.
RegressionResult ols_regression(const PairedPoints& pts, double level = 0.99);
RegressionResult ols_regression(std::span<const double> x, std::span<const double> y,
                                double level = 0.99);

// Single regression of actual on expected plus a direction-shift dummy,
// pooling both directions with one shared slope. Slope CI uses n-3 dof.
struct DummyRegressionResult {
  double slope = 0.0;
  double intercept = 0.0;       // backward intercept
  double direction_shift = 0.0; // added intercept for forward points
  double slope_lo = 0.0;
  double slope_hi = 0.0;
  double level = 0.0;
  int n = 0;
};
DummyRegressionResult ols_regression_direction_dummy(const PairedPoints& pts,
                                                     double level = 0.99);

// Inverse CDF of Student's t. p is the cumulative probability in (0,1);
// throws std::invalid_argument out of range or for dof < 1. Absolute
// error below 1e-8.
double t_quantile(double p, int dof);

struct GoodnessOfFit {
  double chi2 = 0.0;
  double p_value = 0.0;
  int dof = 0;
};

// Pearson chi-square of 4 observed counts against 4 positive expected
// values. dof = 4 - 1 - 2 = 1 since the expected cells absorb the two mean
// constraints fitted from the same data; the statistic is reported with the
// dof so other conventions can be re-derived. Throws std::domain_error on a
// non-positive expected cell.
GoodnessOfFit goodness_of_fit(const std::array<double, 4>& actual,
                              const std::array<double, 4>& expected);

// One point per (transition, direction) of one game: 16 backward plus 16
// forward when every aggregate exists; cells with missing aggregates are
// skipped and listed in exclusions. Throws std::invalid_argument when the
// expected table was not derived from these counts (total mismatch).
PairedPoints build_paired_points(const TransitionCounts& tc, const ExpectedTable& et,
                                 std::string_view game_label);

// Concatenation in the given order (the fixture order g1..g11 for pooled runs).
PairedPoints pool_points(std::span<const PairedPoints> sets);

PairedPoints filter_direction(const PairedPoints& pts, Direction dir);

// Numeric building blocks (exposed for oracle tests).
double regularized_incomplete_beta(double a, double b, double x);
double regularized_gamma_q(double a, double x);  // upper tail
double chi_square_survival(double chi2, int dof);

}  // namespace strans
