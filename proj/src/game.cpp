#include "strans/game.hpp"

#include <cmath>
#include <stdexcept>

namespace strans {

std::string SocialState::name() const {
  return "x" + std::to_string(i) + std::to_string(j);
}

double PayoffMatrix::row_payoff(SocialState x) const {
  switch (x.index()) {
    case 0: return a;  // x00 = LU
    case 1: return c;  // x01 = LD
    case 2: return b;  // x10 = RU
    default: return d; // x11 = RD
  }
}

bool PayoffMatrix::finite() const {
  return std::isfinite(a) && std::isfinite(b) && std::isfinite(c) &&
         std::isfinite(d) && std::isfinite(s);
}

GameClass classify_game(const PayoffMatrix& m) {
  if (!m.finite()) {
    throw std::invalid_argument("classify_game: payoffs must be finite");
  }
  const bool cond1 = m.a > m.c && m.b < m.d && m.a > m.b && m.c < m.d;
  const bool cond2 = m.a < m.c && m.b > m.d && m.a < m.b && m.c > m.d;
  if (!cond1 && !cond2) {
    return {GameKind::Other, std::nullopt};
  }
  // Row indifference between U and D fixes p, column indifference fixes q.
  // Under either sign condition both ratios are interior.
  const double p = (m.a - m.c) / ((m.a - m.c) + (m.d - m.b));
  const double q = (m.a - m.b) / ((m.a - m.b) + (m.d - m.c));
  return {GameKind::UniqueMixedNE, MixedEquilibrium{p, q}};
}

MixedEquilibrium msne(const PayoffMatrix& m) {
  const GameClass gc = classify_game(m);
  if (gc.kind != GameKind::UniqueMixedNE) {
    throw std::domain_error("msne: game has no unique mixed-strategy equilibrium");
  }
  return *gc.msne;
}

ExpectedPayoffs expected_payoffs(const PayoffMatrix& m, double p, double q) {
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("expected_payoffs: p and q must lie in [0,1]");
  }
  const double row = (1.0 - p) * (1.0 - q) * m.a + p * (1.0 - q) * m.b +
                     (1.0 - p) * q * m.c + p * q * m.d;
  return {row, m.s - row};
}

}  // namespace strans
