#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

#include "halfstreet/verify.hpp"
#include "halfstreet/vn_analytic.hpp"

namespace halfstreet {
namespace {

std::shared_ptr<const EquityTables> flop_tables() {
  static const auto t = std::make_shared<const EquityTables>(build_equity_tables(EquityParams{}));
  return t;
}

Strategy random_strategy(Role role, int m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Strategy s{role, {}};
  for (int k = 0; k < m; ++k) s.probs.push_back(unit(rng));
  return s;
}

Strategy pure_from_bits(Role role, int m, unsigned bits) {
  Strategy s{role, std::vector<double>(static_cast<std::size_t>(m))};
  for (int k = 0; k < m; ++k) s.probs[static_cast<std::size_t>(k)] = (bits >> k) & 1u;
  return s;
}

TEST(GameValue, ZeroSumExactly) {
  const VonNeumannGame vn(GameSpec{1, 2}, 100);
  const FlopGame flop(GameSpec{1, 4}, flop_tables());
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    for (const HalfStreetGame* g : {static_cast<const HalfStreetGame*>(&vn), static_cast<const HalfStreetGame*>(&flop)}) {
      const GameValue v = game_value(*g, random_strategy(Role::player, g->num_hands(), rng),
                                     random_strategy(Role::dealer, g->num_hands(), rng));
      ASSERT_EQ(v.player + v.dealer, 0.0);
    }
  }
}

TEST(GameValue, Examples) {
  const VonNeumannGame g(GameSpec{1, 2}, 100);
  EXPECT_NEAR(game_value(g, Strategy::constant(Role::player, 100, 0.0), Strategy::constant(Role::dealer, 100, 0.7)).player,
              0.0, 1e-15);
  const auto [p, q] = discretize(solve(GameSpec{1, 2}), 100);
  EXPECT_NEAR(game_value(g, p, q).player, 4.0 / 36, 0.01);
  EXPECT_THROW((void)game_value(g, Strategy::constant(Role::player, 99, 0.0), q), std::invalid_argument);
}

TEST(IndifferenceVn, MatchesGenericBetMinusCheck) {
  const GameSpec spec{1, 2};
  const VonNeumannGame g(spec, 50);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const Strategy q = random_strategy(Role::dealer, 50, rng);
    const Strategy p = random_strategy(Role::player, 50, rng);
    const auto e1 = e1_vn(q, spec);
    const auto e2 = e2_vn(p, spec);
    const auto ep = e_player(g, q);
    const auto ed = e_dealer(g, p);
    for (std::size_t k = 0; k < 50; ++k) {
      ASSERT_NEAR(e1[k], ep[k], 1e-12);
      ASSERT_NEAR(e2[k], ed[k], 1e-12);
    }
  }
}

TEST(IndifferenceVn, E1Examples) {
  const GameSpec spec{1, 2};
  const int m = 100;
  const double P = spec.pot(), B = spec.bet;
  const VnSolution s = solve(spec);
  const auto [p, q] = discretize(s, m);
  const auto e1 = e1_vn(q, spec);
  // Grid hands closest to the thresholds: 11/12 around x1 and 78/79 around x2.
  for (int hand : {11, 12, 78, 79}) EXPECT_LE(std::abs(e1[static_cast<std::size_t>(hand - 1)]), (P + B) / m) << hand;

  const auto never = e1_vn(Strategy::constant(Role::dealer, m, 0.0), spec);
  for (int k = 0; k < m; ++k) {
    EXPECT_NEAR(never[static_cast<std::size_t>(k)], P * (1 - (k + 0.5) / m), 1e-12);
    EXPECT_GT(never[static_cast<std::size_t>(k)], 0.0);
  }
  const auto always = e1_vn(Strategy::constant(Role::dealer, m, 1.0), spec);
  EXPECT_NEAR(always.back(), B, (P + B) / m);
  EXPECT_NEAR(e1_continuous(1.0, StepProfile({}, {1.0}), spec), B, 1e-12);
}

TEST(IndifferenceVn, E2Examples) {
  const GameSpec spec{1, 2};
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Strategy p = random_strategy(Role::player, 40, rng);
    const auto e2 = e2_vn(p, spec);
    EXPECT_LT(e2.front(), 0.0);
    EXPECT_GT(e2.back(), 0.0);
    for (std::size_t k = 1; k < e2.size(); ++k) EXPECT_GE(e2[k], e2[k - 1]);
  }
  const auto lin = e2_vn(Strategy::constant(Role::player, 40, 1.0), spec);
  for (std::size_t k = 2; k < lin.size(); ++k) EXPECT_NEAR(lin[k] - lin[k - 1], lin[1] - lin[0], 1e-12);
}

TEST(IndifferenceFlop, LiteralFormulaMatchesGeneric) {
  std::mt19937_64 rng(4);
  for (const GameSpec spec : {GameSpec{1, 2}, GameSpec{1, 4}, GameSpec{8, 1}}) {
    const FlopGame g(spec, flop_tables());
    const Strategy q = random_strategy(Role::dealer, kNumClasses, rng);
    const Strategy p = random_strategy(Role::player, kNumClasses, rng);
    const auto lit_p = e_player_flop(q, *flop_tables(), spec);
    const auto lit_d = e_dealer_flop(p, *flop_tables(), spec);
    const auto gen_p = e_player(g, q);
    const auto gen_d = e_dealer(g, p);
    for (std::size_t i = 0; i < kNumClasses; ++i) {
      ASSERT_NEAR(lit_p[i], gen_p[i], 1e-12);
      ASSERT_NEAR(lit_d[i], gen_d[i], 1e-12);
    }
  }
}

TEST(IndifferenceFlop, SubstitutionExamples) {
  const GameSpec spec{1, 2};
  const EquityTables& t = *flop_tables();
  const double P = spec.pot();
  const auto never = e_player_flop(Strategy::constant(Role::dealer, kNumClasses, 0.0), t, spec);
  for (int i = 0; i < kNumClasses; ++i) {
    EXPECT_NEAR(never[static_cast<std::size_t>(i)], P * (1 - t.total_win(i) - t.total_draw(i) / 2), 1e-12);
    EXPECT_GT(never[static_cast<std::size_t>(i)], 0.0);
  }
  // Always called: independent summation of the bracket terms.
  const auto always = e_player_flop(Strategy::constant(Role::dealer, kNumClasses, 1.0), t, spec);
  const auto& cond = ConditionalTable::instance();
  for (int i = 0; i < kNumClasses; ++i) {
    double s = 0.0;
    for (int j = 0; j < kNumClasses; ++j) {
      s += cond.probability(i, j) * ((P + spec.bet) * t.win(i, j) - spec.bet * t.win(j, i) + P / 2 * t.draw(i, j));
    }
    EXPECT_NEAR(always[static_cast<std::size_t>(i)], s - P * (t.total_win(i) + t.total_draw(i) / 2), 1e-12);
  }
  const auto quiet = e_dealer_flop(Strategy::constant(Role::player, kNumClasses, 0.0), t, spec);
  for (double e : quiet) EXPECT_EQ(e, 0.0);
  const int only = parse_class_label("T9s").value;
  Strategy single = Strategy::constant(Role::player, kNumClasses, 0.0);
  single.probs[static_cast<std::size_t>(only)] = 1.0;
  const auto ed = e_dealer_flop(single, t, spec);
  for (int j = 0; j < kNumClasses; ++j) {
    const double bracket = (P + spec.bet) * t.win(j, only) - spec.bet * t.win(only, j) + P / 2 * t.draw(j, only);
    EXPECT_NEAR(ed[static_cast<std::size_t>(j)], cond.probability(j, only) * bracket, 1e-15);
  }
  EXPECT_THROW((void)e_player_flop(Strategy::constant(Role::dealer, 100, 0.0), t, spec), std::invalid_argument);
  EXPECT_THROW((void)e_dealer_flop(Strategy::constant(Role::player, 168, 0.0), t, spec), std::invalid_argument);
}

TEST(BestResponse, StealsWhenDealerNeverCalls) {
  const VonNeumannGame g(GameSpec{1, 2}, 30);
  const BestResponse br = best_response(g, Strategy::constant(Role::dealer, 30, 0.0), Role::player);
  for (double p : br.strategy.probs) EXPECT_EQ(p, 1.0);
  EXPECT_DOUBLE_EQ(br.value, 1.0);
}

TEST(BestResponse, MatchesExhaustiveSearchOnFiveHands) {
  for (const GameSpec spec : {GameSpec{1, 2}, GameSpec{1, 4}, GameSpec{8, 1}}) {
    const VonNeumannGame g(spec, 5);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const Strategy q = random_strategy(Role::dealer, 5, rng);
      const Strategy p = random_strategy(Role::player, 5, rng);
      double best_p = -1e9, best_d = -1e9;
      for (unsigned bits = 0; bits < 32; ++bits) {
        best_p = std::max(best_p, game_value(g, pure_from_bits(Role::player, 5, bits), q).player);
        best_d = std::max(best_d, game_value(g, p, pure_from_bits(Role::dealer, 5, bits)).dealer);
      }
      const BestResponse brp = best_response(g, q, Role::player);
      const BestResponse brd = best_response(g, p, Role::dealer);
      EXPECT_NEAR(brp.value, best_p, 1e-12);
      EXPECT_NEAR(brd.value, best_d, 1e-12);
      EXPECT_NEAR(game_value(g, brp.strategy, q).player, brp.value, 1e-12);
      EXPECT_NEAR(game_value(g, p, brd.strategy).dealer, brd.value, 1e-12);
      for (double x : brp.strategy.probs) EXPECT_TRUE(x == 0.0 || x == 1.0);
      for (double x : brd.strategy.probs) EXPECT_TRUE(x == 0.0 || x == 1.0);
    }
  }
}

TEST(BestResponse, TiesTakeThePassiveAction) {
  // Against a player who never bets, calling and folding are worth the same.
  const VonNeumannGame g(GameSpec{1, 2}, 10);
  const BestResponse br = best_response(g, Strategy::constant(Role::player, 10, 0.0), Role::dealer);
  for (double q : br.strategy.probs) EXPECT_EQ(q, 0.0);
}

TEST(Exploitability, AnalyticUniformAndNonnegative) {
  const VonNeumannGame g(GameSpec{1, 2}, 100);
  const VnSolution s = solve(GameSpec{1, 2});
  const auto [p, q] = discretize(s, 100);
  EXPECT_LE(exploitability(g, p, q), 0.01);
  EXPECT_NEAR(best_response(g, q, Role::player).value, s.value, 0.01);
  EXPECT_GT(exploitability(g, Strategy::constant(Role::player, 100, 0.5), Strategy::constant(Role::dealer, 100, 0.5)),
            0.05);
  std::mt19937_64 rng(6);
  const FlopGame flop(GameSpec{1, 2}, flop_tables());
  for (int trial = 0; trial < 10; ++trial) {
    EXPECT_GE(exploitability(g, random_strategy(Role::player, 100, rng), random_strategy(Role::dealer, 100, rng)), 0.0);
    EXPECT_GE(exploitability(flop, random_strategy(Role::player, kNumClasses, rng),
                             random_strategy(Role::dealer, kNumClasses, rng)),
              0.0);
  }
}

TEST(DealerCallMass, Examples) {
  const VnSolution s = solve(GameSpec{1, 2});
  const auto [p, q] = discretize(s, 100);
  EXPECT_NEAR(dealer_call_mass(q, s), 8.0 / 36, 0.01);
  EXPECT_EQ(dealer_call_mass(Strategy::constant(Role::dealer, 100, 0.0), s), 0.0);
  EXPECT_NEAR(dealer_call_mass(Strategy::constant(Role::dealer, 100, 1.0), s), 0.67, 1e-12);
}

TEST(Properties, FollowingTheSignOfEPlayerNeverHurts) {
  std::mt19937_64 rng(7);
  const VonNeumannGame vn(GameSpec{1, 2}, 100);
  const FlopGame flop(GameSpec{1, 2}, flop_tables());
  for (int trial = 0; trial < 100; ++trial) {
    const HalfStreetGame& g = trial % 2 == 0 ? static_cast<const HalfStreetGame&>(vn) : flop;
    const Strategy q = random_strategy(Role::dealer, g.num_hands(), rng);
    const Strategy p = random_strategy(Role::player, g.num_hands(), rng);
    const auto e = e_player(g, q);
    Strategy improved = p;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) improved.probs[i] = 1.0;
      if (e[i] < 0) improved.probs[i] = 0.0;
    }
    EXPECT_GE(game_value(g, improved, q).player, game_value(g, p, q).player - 1e-12);
  }
}

TEST(Properties, InteriorCallPlacementKeepsTheValue) {
  const GameSpec spec{1, 2};
  const int m = 100;
  const VonNeumannGame g(spec, m);
  const VnSolution s = solve(spec);
  const auto [p, admissible] = discretize(s, m);
  std::vector<int> interior;
  for (int k = 0; k < m; ++k) {
    const double x = grid_point(k, m);
    if (x > s.x1 && x < s.x2) interior.push_back(k);
  }
  const auto calls = static_cast<std::size_t>(std::lround(s.c * m));
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(interior.begin(), interior.end(), rng);
    Strategy q = Strategy::constant(Role::dealer, m, 0.0);
    for (int k = 0; k < m; ++k) {
      if (grid_point(k, m) > s.x2) q.probs[static_cast<std::size_t>(k)] = 1.0;
    }
    for (std::size_t n = 0; n < calls; ++n) q.probs[static_cast<std::size_t>(interior[n])] = 1.0;
    EXPECT_NEAR(dealer_call_mass(q, s), s.c, 1.0 / m);
    EXPECT_NEAR(game_value(g, p, q).player, s.value, 2.0 / m);
  }
}

TEST(Diagnostics, SignCheckAndExports) {
  const Strategy p{Role::player, {1.0, 0.0, 0.6, 0.4, 0.0}};
  const std::vector<double> e = {0.3, 0.3, -0.2, 0.01, -0.5};
  const SignCheck c = sign_check(p, e, 0.05);
  EXPECT_EQ(c.considered, 4);
  EXPECT_EQ(c.violations, 2);
  EXPECT_DOUBLE_EQ(c.consistency(), 0.5);

  const GameSpec spec{1, 2};
  const VonNeumannGame g(spec, 10);
  const VnSolution s = solve(spec);
  const auto [pp, qq] = discretize(s, 10);
  const Diagnostics d = diagnose(g, pp, qq, s);
  ASSERT_TRUE(d.dealer_call_mass.has_value());
  EXPECT_EQ(d.value.player + d.value.dealer, 0.0);
  EXPECT_FALSE(diagnose(g, pp, qq).dealer_call_mass.has_value());
  const std::string csv = diagnostics_csv(g, pp, qq, d);
  EXPECT_EQ(csv.rfind("index,label,player_probability,e_player,dealer_probability,e_dealer\n0,1,", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 11);
  const auto summary = diagnostics_summary(d);
  for (const char* key : {"value_player", "value_dealer", "exploitability", "dealer_call_mass",
                          "player_sign_violations", "dealer_sign_violations"}) {
    EXPECT_TRUE(summary.contains(key)) << key;
  }
}

}  // namespace
}  // namespace halfstreet
