#include <gtest/gtest.h>

#include <memory>
#include <random>

#include "halfstreet/cfr.hpp"
#include "halfstreet/verify.hpp"

namespace halfstreet {
namespace {

TEST(RegretMatch, Examples) {
  EXPECT_DOUBLE_EQ(regret_match(0.0, 0.0), 0.5);
  EXPECT_DOUBLE_EQ(regret_match(3.0, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(regret_match(0.0, 2.0), 0.0);
  EXPECT_DOUBLE_EQ(regret_match(1.0, 3.0), 0.25);
}

TEST(CfrRound, StrongerPlayerFreshState) {
  const VonNeumannGame g(GameSpec{1, 2}, 10);
  RegretState p(Role::player, 10), d(Role::dealer, 10);
  cfr_round(p, d, g, 7, 3);
  EXPECT_DOUBLE_EQ(p.regret_act[7], 0.5);
  EXPECT_DOUBLE_EQ(p.regret_pass[7], 0.0);
  EXPECT_DOUBLE_EQ(p.current[7], 1.0);
  EXPECT_DOUBLE_EQ(d.regret_act[3], 0.0);
  EXPECT_DOUBLE_EQ(d.regret_pass[3], 0.5);
  EXPECT_DOUBLE_EQ(d.current[3], 0.0);
  EXPECT_DOUBLE_EQ(p.sum_act[7], 1.0);
  EXPECT_DOUBLE_EQ(d.sum_pass[3], 1.0);
  // Untouched hands keep the initial mix.
  EXPECT_DOUBLE_EQ(p.current[2], 0.5);
  EXPECT_DOUBLE_EQ(p.sum_act[2], 0.0);
}

TEST(CfrRound, DrawFreshState) {
  const VonNeumannGame g(GameSpec{1, 2}, 10);
  RegretState p(Role::player, 10), d(Role::dealer, 10);
  cfr_round(p, d, g, 4, 4);
  EXPECT_DOUBLE_EQ(p.regret_act[4], 0.25);
  EXPECT_DOUBLE_EQ(p.regret_pass[4], 0.0);
  EXPECT_DOUBLE_EQ(d.regret_act[4], 0.25);
  EXPECT_DOUBLE_EQ(d.regret_pass[4], 0.0);
  EXPECT_DOUBLE_EQ(d.current[4], 1.0);
}

TEST(CfrRound, DealerRegretScaledByBetProbability) {
  const VonNeumannGame g(GameSpec{1, 2}, 10);
  RegretState p(Role::player, 10), d(Role::dealer, 10);
  p.current[5] = 0.0;
  cfr_round(p, d, g, 5, 1);
  EXPECT_EQ(d.regret_act[1], 0.0);
  EXPECT_EQ(d.regret_pass[1], 0.0);
  EXPECT_DOUBLE_EQ(d.current[1], 0.5);
}

void check_invariants(const HalfStreetGame& g, int rounds, std::uint64_t seed) {
  const int m = g.num_hands();
  RegretState p(Role::player, m), d(Role::dealer, m);
  Rng rng(seed);
  for (int t = 0; t < rounds; ++t) {
    const Deal deal = g.deal(rng);
    const auto pi = static_cast<std::size_t>(deal.player_hand);
    const auto di = static_cast<std::size_t>(deal.dealer_hand);
    const double sp = p.sum_act[pi] + p.sum_pass[pi];
    const double sd = d.sum_act[di] + d.sum_pass[di];
    const double spa = p.sum_act[pi], sda = d.sum_act[di];
    cfr_round(p, d, g, deal.player_hand, deal.dealer_hand);
    for (const RegretState* s : {&p, &d}) {
      const auto k = s == &p ? pi : di;
      ASSERT_GE(s->regret_act[k], 0.0);
      ASSERT_GE(s->regret_pass[k], 0.0);
      ASSERT_DOUBLE_EQ(s->current[k], regret_match(s->regret_act[k], s->regret_pass[k]));
      ASSERT_GE(s->current[k], 0.0);
      ASSERT_LE(s->current[k], 1.0);
    }
    if (pi != di || &p != &d) {
      ASSERT_NEAR(p.sum_act[pi] + p.sum_pass[pi], sp + 1.0, 1e-9);
      ASSERT_NEAR(d.sum_act[di] + d.sum_pass[di], sd + 1.0, 1e-9);
      ASSERT_GE(p.sum_act[pi], spa);
      ASSERT_GE(d.sum_act[di], sda);
    }
  }
}

TEST(CfrRound, InvariantsHoldVonNeumann) { check_invariants(VonNeumannGame(GameSpec{1, 2}, 100), 100'000, 11); }

TEST(CfrRound, InvariantsHoldFlop) {
  const auto tables = std::make_shared<const EquityTables>(build_equity_tables(EquityParams{}));
  check_invariants(FlopGame(GameSpec{1, 4}, tables), 100'000, 12);
}

TEST(RegretStateTest, FreshAverageIsEven) {
  const RegretState s(Role::dealer, 7);
  const Strategy avg = s.average();
  EXPECT_EQ(avg.role, Role::dealer);
  for (double v : avg.probs) EXPECT_EQ(v, 0.5);
  EXPECT_THROW(RegretState(Role::player, 0), std::invalid_argument);
}

TEST(Train, DeterministicBySeed) {
  const VonNeumannGame g(GameSpec{1, 2}, 50);
  CfrConfig cfg;
  cfg.iterations = 50'000;
  cfg.seed = 9;
  const TrainReport a = train(g, cfg);
  const TrainReport b = train(g, cfg);
  EXPECT_EQ(a.player.probs, b.player.probs);
  EXPECT_EQ(a.dealer.probs, b.dealer.probs);
  cfg.seed = 10;
  EXPECT_NE(train(g, cfg).player.probs, a.player.probs);
}

TEST(Train, CheckpointCadence) {
  const VonNeumannGame g(GameSpec{1, 2}, 20);
  CfrConfig cfg;
  cfg.iterations = 1000;
  const TrainReport def = train(g, cfg);
  ASSERT_EQ(def.checkpoints.size(), 20u);
  EXPECT_EQ(def.checkpoints.front().iteration, 50u);
  EXPECT_EQ(def.checkpoints.back().iteration, 1000u);
  cfg.checkpoint_every = 300;
  const TrainReport odd = train(g, cfg);
  ASSERT_EQ(odd.checkpoints.size(), 4u);
  EXPECT_EQ(odd.checkpoints[2].iteration, 900u);
  EXPECT_EQ(odd.checkpoints[3].iteration, 1000u);
  cfg.iterations = 0;
  EXPECT_THROW((void)train(g, cfg), std::invalid_argument);
}

TEST(Train, ExploitabilityFallsAndValueApproachesAnalytic) {
  const GameSpec spec{1, 2};
  const VonNeumannGame g(spec, 100);
  CfrConfig cfg;
  cfg.iterations = 1'000'000;
  cfg.seed = 1;
  const TrainReport r = train(g, cfg);
  ASSERT_FALSE(r.checkpoints.empty());
  EXPECT_LE(r.checkpoints.back().exploitability, r.checkpoints.front().exploitability / 5);
  const GameValue v = game_value(g, r.player, r.dealer);
  EXPECT_EQ(v.player + v.dealer, 0.0);
  EXPECT_NEAR(v.player, solve(spec).value, 0.02);
}

}  // namespace
}  // namespace halfstreet
