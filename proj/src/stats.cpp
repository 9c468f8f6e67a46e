#include "strans/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace strans {
namespace {

// Continued fraction for the regularized incomplete beta (modified Lentz).
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 3e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

// Series for the lower regularized gamma P(a, x), x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for the upper regularized gamma Q(a, x), x >= a + 1.
double gamma_q_cf(double a, double x) {
  constexpr double kTiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double student_t_cdf(double t, int dof) {
  const double nu = static_cast<double>(dof);
  const double x = nu / (nu + t * t);
  const double half_tail = 0.5 * regularized_incomplete_beta(nu / 2.0, 0.5, x);
  return t >= 0.0 ? 1.0 - half_tail : half_tail;
}

RegressionResult ols_core(std::span<const double> x, std::span<const double> y,
                          double level) {
  const int n = static_cast<int>(x.size());
  if (n < 3) throw std::domain_error("ols_regression: need at least 3 points");
  if (!(level > 0.0 && level < 1.0)) {
    throw std::invalid_argument("ols_regression: level must be in (0,1)");
  }
  double xm = 0.0, ym = 0.0;
  for (int k = 0; k < n; ++k) {
    xm += x[static_cast<size_t>(k)];
    ym += y[static_cast<size_t>(k)];
  }
  xm /= n;
  ym /= n;
  double sxx = 0.0, sxy = 0.0;
  for (int k = 0; k < n; ++k) {
    const double dx = x[static_cast<size_t>(k)] - xm;
    sxx += dx * dx;
    sxy += dx * (y[static_cast<size_t>(k)] - ym);
  }
  if (sxx <= 0.0) {
    throw std::domain_error("ols_regression: regressor has zero variance");
  }
  RegressionResult r;
  r.n = n;
  r.dof = n - 2;
  r.level = level;
  r.slope = sxy / sxx;
  r.intercept = ym - r.slope * xm;
  double sse = 0.0;
  for (int k = 0; k < n; ++k) {
    const double resid =
        y[static_cast<size_t>(k)] - (r.intercept + r.slope * x[static_cast<size_t>(k)]);
    sse += resid * resid;
  }
  const double s2 = sse / r.dof;
  const double se_slope = std::sqrt(s2 / sxx);
  const double se_intercept = std::sqrt(s2 * (1.0 / n + xm * xm / sxx));
  const double tq = t_quantile(1.0 - (1.0 - level) / 2.0, r.dof);
  r.slope_lo = r.slope - tq * se_slope;
  r.slope_hi = r.slope + tq * se_slope;
  r.intercept_lo = r.intercept - tq * se_intercept;
  r.intercept_hi = r.intercept + tq * se_intercept;
  return r;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0 && b > 0.0)) {
    throw std::invalid_argument("regularized_incomplete_beta: a, b must be positive");
  }
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double front =
      std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
               a * std::log(x) + b * std::log1p(-x));
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_cf(a, b, x) / a;
  }
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0) {
    throw std::invalid_argument("regularized_gamma_q: need a > 0, x >= 0");
  }
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi_square_survival(double chi2, int dof) {
  if (dof < 1) throw std::invalid_argument("chi_square_survival: dof must be >= 1");
  if (chi2 < 0.0) return 1.0;
  return regularized_gamma_q(dof / 2.0, chi2 / 2.0);
}

double t_quantile(double p, int dof) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("t_quantile: p must lie in (0,1)");
  }
  if (dof < 1) throw std::invalid_argument("t_quantile: dof must be >= 1");
  if (p == 0.5) return 0.0;
  if (p < 0.5) return -t_quantile(1.0 - p, dof);

  // Bracket the root of cdf(t) = p, then bisect. The CDF is strictly
  // increasing, so bisection to a 1e-12 bracket is safely below the 1e-8
  // error budget.
  double lo = 0.0;
  double hi = 1.0;
  while (student_t_cdf(hi, dof) < p) {
    hi *= 2.0;
    if (hi > 1e300) return std::numeric_limits<double>::infinity();
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (student_t_cdf(mid, dof) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-12 * std::max(1.0, hi)) break;
  }
  return 0.5 * (lo + hi);
}

RegressionResult ols_regression(std::span<const double> x, std::span<const double> y,
                                double level) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("ols_regression: x and y sizes differ");
  }
  return ols_core(x, y, level);
}

RegressionResult ols_regression(const PairedPoints& pts, double level) {
  std::vector<double> x, y;
  x.reserve(pts.points.size());
  y.reserve(pts.points.size());
  for (const auto& pt : pts.points) {
    x.push_back(pt.expected);
    y.push_back(pt.actual);
  }
  return ols_core(x, y, level);
}

DummyRegressionResult ols_regression_direction_dummy(const PairedPoints& pts,
                                                     double level) {
  const int n = static_cast<int>(pts.points.size());
  if (n < 4) {
    throw std::domain_error("ols_regression_direction_dummy: need at least 4 points");
  }
  // Normal equations for y = intercept + slope*x + shift*1[forward].
  double sx = 0, sd = 0, sxx = 0, sxd = 0, sdd = 0, sy = 0, sxy = 0, sdy = 0;
  for (const auto& pt : pts.points) {
    const double x = pt.expected;
    const double dd = pt.direction == Direction::Forward ? 1.0 : 0.0;
    sx += x; sd += dd; sxx += x * x; sxd += x * dd; sdd += dd * dd;
    sy += pt.actual; sxy += x * pt.actual; sdy += dd * pt.actual;
  }
  const double m[3][3] = {{static_cast<double>(n), sx, sd},
                          {sx, sxx, sxd},
                          {sd, sxd, sdd}};
  const double rhs[3] = {sy, sxy, sdy};
  // Solve the 3x3 system by Cramer's rule.
  auto det3 = [](const double a[3][3]) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  };
  const double det = det3(m);
  if (!(std::abs(det) > 1e-12 * std::max(1.0, n * sxx))) {
    throw std::domain_error("ols_regression_direction_dummy: singular design");
  }
  double coef[3];
  for (int j = 0; j < 3; ++j) {
    double mj[3][3];
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) mj[r][c] = c == j ? rhs[r] : m[r][c];
    coef[j] = det3(mj) / det;
  }
  DummyRegressionResult r;
  r.n = n;
  r.level = level;
  r.intercept = coef[0];
  r.slope = coef[1];
  r.direction_shift = coef[2];

  double sse = 0.0;
  for (const auto& pt : pts.points) {
    const double dd = pt.direction == Direction::Forward ? 1.0 : 0.0;
    const double resid = pt.actual - (r.intercept + r.slope * pt.expected +
                                      r.direction_shift * dd);
    sse += resid * resid;
  }
  const double s2 = sse / (n - 3);
  // Var(slope) = s2 * [ (X'X)^-1 ]_11 via the cofactor of the slope entry.
  const double cof11 = m[0][0] * m[2][2] - m[0][2] * m[2][0];
  const double var_slope = s2 * cof11 / det;
  const double tq = t_quantile(1.0 - (1.0 - level) / 2.0, n - 3);
  r.slope_lo = r.slope - tq * std::sqrt(var_slope);
  r.slope_hi = r.slope + tq * std::sqrt(var_slope);
  return r;
}

GoodnessOfFit goodness_of_fit(const std::array<double, 4>& actual,
                              const std::array<double, 4>& expected) {
  GoodnessOfFit g;
  g.dof = 1;  // 4 cells - 1 - 2 fitted mean constraints
  for (int k = 0; k < 4; ++k) {
    if (!(expected[k] > 0.0)) {
      throw std::domain_error("goodness_of_fit: expected cells must be positive");
    }
    const double diff = actual[k] - expected[k];
    g.chi2 += diff * diff / expected[k];
  }
  g.p_value = chi_square_survival(g.chi2, g.dof);
  return g;
}

PairedPoints build_paired_points(const TransitionCounts& tc, const ExpectedTable& et,
                                 std::string_view game_label) {
  PairedPoints out;
  for (const Direction dir : {Direction::Backward, Direction::Forward}) {
    const char* arrow = dir == Direction::Backward ? "<-" : "->";
    for (const SocialState s : kStates) {
      const auto& pred = et.rows(dir)[s.index()];
      if (!pred.has_value()) {
        out.exclusions.push_back(std::string(game_label) + " " + to_string(dir) + " " +
                                 s.name() + ": aggregate undefined (zero total)");
        continue;
      }
      // The table must have been derived from these counts: same constraint
      // mean point, and a scale that is one of the two supported totals.
      const AggregatedTransition agg = aggregated_transition(tc, s, dir);
      const bool scale_ok =
          pred->scale == tc.total(s, dir) || pred->scale == tc.total_forward(s);
      if (!scale_ok || std::abs(pred->constraint.p - agg.mean_point.p) > 1e-12 ||
          std::abs(pred->constraint.q - agg.mean_point.q) > 1e-12) {
        throw std::invalid_argument(
            "build_paired_points: expected table does not match the counts");
      }
      const auto row = tc.row(s, dir);
      for (int k = 0; k < 4; ++k) {
        PairedPoint pt;
        pt.game = std::string(game_label);
        pt.direction = dir;
        // Label by (state, partner) in the direction's reading order.
        pt.label = "T" + std::to_string(s.i) + std::to_string(s.j) + arrow +
                   std::to_string(k / 2) + std::to_string(k % 2);
        pt.expected = pred->expected_counts[k];
        pt.actual = static_cast<double>(row[k]);
        out.points.push_back(std::move(pt));
      }
    }
  }
  return out;
}

PairedPoints pool_points(std::span<const PairedPoints> sets) {
  PairedPoints out;
  for (const auto& s : sets) {
    out.points.insert(out.points.end(), s.points.begin(), s.points.end());
    out.exclusions.insert(out.exclusions.end(), s.exclusions.begin(), s.exclusions.end());
  }
  return out;
}

PairedPoints filter_direction(const PairedPoints& pts, Direction dir) {
  PairedPoints out;
  for (const auto& pt : pts.points) {
    if (pt.direction == dir) out.points.push_back(pt);
  }
  out.exclusions = pts.exclusions;
  return out;
}

}  // namespace strans
