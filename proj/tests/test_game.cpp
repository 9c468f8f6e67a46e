#include <doctest.h>

#include <cmath>

#include "strans/fixtures.hpp"
#include "strans/game.hpp"

using namespace strans;

namespace {

// Brute-force equilibrium oracle: the two indifference gaps are separable
// (the row gap depends only on p, the column gap only on q), so scan each
// coordinate on a 1e-4 grid for the point where its gap vanishes.
MixedEquilibrium grid_msne(const PayoffMatrix& m) {
  constexpr double kStep = 1e-4;
  auto row_gap = [&m](double p) {
    const double eu_u = (1.0 - p) * m.a + p * m.b;
    const double eu_d = (1.0 - p) * m.c + p * m.d;
    return std::abs(eu_u - eu_d);
  };
  auto col_gap = [&m](double q) {
    const double eu_l = (1.0 - q) * (m.s - m.a) + q * (m.s - m.c);
    const double eu_r = (1.0 - q) * (m.s - m.b) + q * (m.s - m.d);
    return std::abs(eu_l - eu_r);
  };
  MixedEquilibrium best{0.0, 0.0};
  double best_rg = row_gap(0.0), best_cg = col_gap(0.0);
  for (long long k = 1; k <= 10000; ++k) {
    const double v = static_cast<double>(k) * kStep;
    if (const double rg = row_gap(v); rg < best_rg) { best_rg = rg; best.p = v; }
    if (const double cg = col_gap(v); cg < best_cg) { best_cg = cg; best.q = v; }
  }
  return best;
}

}  // namespace

TEST_CASE("social state enumeration") {
  CHECK(SocialState{0, 0}.index() == 0);
  CHECK(SocialState{0, 1}.index() == 1);
  CHECK(SocialState{1, 0}.index() == 2);
  CHECK(SocialState{1, 1}.index() == 3);
  for (int k = 0; k < 4; ++k) CHECK(SocialState::from_index(k).index() == k);
  CHECK(SocialState{1, 0}.name() == "x10");
  CHECK(SocialState{0, 1}.p() == 0.0);
  CHECK(SocialState{0, 1}.q() == 1.0);
}

TEST_CASE("payoff lookup matches the cell layout") {
  const PayoffMatrix g1{77, 35, 8, 48, 100};
  CHECK(g1.row_payoff({0, 0}) == 77);  // LU -> a
  CHECK(g1.row_payoff({1, 0}) == 35);  // RU -> b
  CHECK(g1.row_payoff({0, 1}) == 8);   // LD -> c
  CHECK(g1.row_payoff({1, 1}) == 48);  // RD -> d
  CHECK(g1.col_payoff({0, 0}) == 23);
}

TEST_CASE("classify_game") {
  const PayoffMatrix g1{77, 35, 8, 48, 100};
  CHECK(classify_game(g1).kind == GameKind::UniqueMixedNE);

  const PayoffMatrix g11{5, 0, 0, 5, 5};
  const GameClass gc11 = classify_game(g11);
  CHECK(gc11.kind == GameKind::UniqueMixedNE);
  CHECK(gc11.msne->p == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(gc11.msne->q == doctest::Approx(0.5).epsilon(1e-15));

  // Row strategy U dominates: fails both sign conditions.
  const PayoffMatrix dominance{1, 0, 0, 0, 1};
  const GameClass gcd = classify_game(dominance);
  CHECK(gcd.kind == GameKind::Other);
  CHECK_FALSE(gcd.msne.has_value());

  // Boundary equality a == c classifies as Other (strict inequalities).
  CHECK(classify_game({5, 0, 5, 3, 10}).kind == GameKind::Other);

  CHECK_THROWS_AS(classify_game({std::nan(""), 0, 0, 0, 1}), std::invalid_argument);

  SUBCASE("all 11 embedded games have a unique mixed equilibrium") {
    for (std::string_view id : fixture_ids()) {
      CHECK(classify_game(load_game_fixture(id).payoffs).kind ==
            GameKind::UniqueMixedNE);
    }
  }

  SUBCASE("relabeling the row strategies preserves the classification") {
    for (std::string_view id : fixture_ids()) {
      const PayoffMatrix m = load_game_fixture(id).payoffs;
      const PayoffMatrix swapped{m.c, m.d, m.a, m.b, m.s};  // U <-> D
      CHECK(classify_game(swapped).kind == GameKind::UniqueMixedNE);
    }
  }
}

TEST_CASE("msne matches the grid oracle") {
  const PayoffMatrix g1{77, 35, 8, 48, 100};
  const MixedEquilibrium e1 = msne(g1);
  CHECK(e1.p == doctest::Approx(69.0 / 82.0).epsilon(1e-12));
  CHECK(e1.q == doctest::Approx(42.0 / 82.0).epsilon(1e-12));
  const MixedEquilibrium o1 = grid_msne(g1);
  CHECK(std::abs(e1.p - o1.p) < 1e-4);
  CHECK(std::abs(e1.q - o1.q) < 1e-4);

  const PayoffMatrix g4{55, 75, 73, 60, 100};
  const MixedEquilibrium e4 = msne(g4);
  const MixedEquilibrium o4 = grid_msne(g4);
  CHECK(e4.p == doctest::Approx(6.0 / 11.0).epsilon(1e-12));
  CHECK(e4.q == doctest::Approx(20.0 / 33.0).epsilon(1e-12));
  CHECK(std::abs(e4.p - o4.p) < 1e-4);
  CHECK(std::abs(e4.q - o4.q) < 1e-4);

  CHECK_THROWS_AS(msne({1, 0, 0, 0, 1}), std::domain_error);
}

TEST_CASE("msne indifference for every embedded game") {
  for (std::string_view id : fixture_ids()) {
    const PayoffMatrix m = load_game_fixture(id).payoffs;
    const MixedEquilibrium eq = msne(m);
    CHECK(eq.p > 0.0);
    CHECK(eq.p < 1.0);
    CHECK(eq.q > 0.0);
    CHECK(eq.q < 1.0);
    const double row_u = (1.0 - eq.p) * m.a + eq.p * m.b;
    const double row_d = (1.0 - eq.p) * m.c + eq.p * m.d;
    CHECK(std::abs(row_u - row_d) < 1e-9);
    const double col_l = (1.0 - eq.q) * (m.s - m.a) + eq.q * (m.s - m.c);
    const double col_r = (1.0 - eq.q) * (m.s - m.b) + eq.q * (m.s - m.d);
    CHECK(std::abs(col_l - col_r) < 1e-9);
  }
}

TEST_CASE("expected_payoffs") {
  const PayoffMatrix g1{77, 35, 8, 48, 100};
  const ExpectedPayoffs corner = expected_payoffs(g1, 0.0, 0.0);
  CHECK(corner.row == doctest::Approx(77.0));
  CHECK(corner.col == doctest::Approx(23.0));
  const ExpectedPayoffs rd = expected_payoffs(g1, 1.0, 1.0);
  CHECK(rd.row == doctest::Approx(48.0));
  CHECK(rd.col == doctest::Approx(52.0));

  const PayoffMatrix g11{5, 0, 0, 5, 5};
  const ExpectedPayoffs mid = expected_payoffs(g11, 0.5, 0.5);
  CHECK(mid.row == doctest::Approx(2.5));
  CHECK(mid.col == doctest::Approx(2.5));

  CHECK_THROWS_AS(expected_payoffs(g1, -0.1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(expected_payoffs(g1, 0.5, 1.5), std::invalid_argument);

  SUBCASE("constant-sum identity on a 21x21 grid") {
    for (std::string_view id : fixture_ids()) {
      const PayoffMatrix m = load_game_fixture(id).payoffs;
      for (int a = 0; a <= 20; ++a) {
        for (int b = 0; b <= 20; ++b) {
          const ExpectedPayoffs ep = expected_payoffs(m, a / 20.0, b / 20.0);
          CHECK(std::abs(ep.row + ep.col - m.s) < 1e-12);
        }
      }
    }
  }
}
