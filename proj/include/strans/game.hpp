#pragma once

#include <array>
#include <optional>
#include <string>

namespace strans {

// Joint pure-strategy profile of one round. i is the column player's
// strategy (0=L, 1=R), j is the row player's strategy (0=U, 1=D).
// As a point in the unit square the state sits at (p, q) = (i, j).
struct SocialState {
  int i = 0;
  int j = 0;

  // Canonical enumeration order: x00, x01, x10, x11.
  constexpr int index() const { return 2 * i + j; }
  static constexpr SocialState from_index(int idx) { return {idx / 2, idx % 2}; }

  constexpr double p() const { return static_cast<double>(i); }
  constexpr double q() const { return static_cast<double>(j); }

  std::string name() const;  // "x00", "x01", "x10", "x11"

  friend constexpr bool operator==(SocialState a, SocialState b) {
    return a.i == b.i && a.j == b.j;
  }
};

inline constexpr std::array<SocialState, 4> kStates{
    SocialState{0, 0}, SocialState{0, 1}, SocialState{1, 0}, SocialState{1, 1}};

// Two-person constant-sum 2x2 game. a,b,c,d are the row player's payoffs
// at x00 (LU), x10 (RU), x01 (LD) and x11 (RD); the column player receives
// s minus the row payoff in every cell.
struct PayoffMatrix {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double s = 0.0;

  double row_payoff(SocialState x) const;
  double col_payoff(SocialState x) const { return s - row_payoff(x); }
  bool finite() const;
};

enum class GameKind { UniqueMixedNE, Other };

struct MixedEquilibrium {
  double p = 0.0;  // equilibrium probability of R (column player)
  double q = 0.0;  // equilibrium probability of D (row player)
};

struct GameClass {
  GameKind kind = GameKind::Other;
  std::optional<MixedEquilibrium> msne;
};

// Classifies by the strict sign conditions
//   (a>c) & (b<d) & (a>b) & (c<d)   or   (a<c) & (b>d) & (a<b) & (c>d),
// under which a unique interior mixed equilibrium exists. Boundary
// equalities classify as Other. Throws std::invalid_argument on
// non-finite payoffs.
GameClass classify_game(const PayoffMatrix& m);

// Interior equilibrium from the two indifference conditions:
//   p* = (a-c) / ((a-c) + (d-b)),  q* = (a-b) / ((a-b) + (d-c)).
// Throws std::domain_error unless classify_game reports UniqueMixedNE.
MixedEquilibrium msne(const PayoffMatrix& m);

struct ExpectedPayoffs {
  double row = 0.0;
  double col = 0.0;
};

// Bilinear expected payoffs when the column player mixes R with
// probability p and the row player mixes D with probability q.
// Throws std::invalid_argument if p or q is outside [0, 1].
ExpectedPayoffs expected_payoffs(const PayoffMatrix& m, double p, double q);

}  // namespace strans
