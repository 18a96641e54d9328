#pragma once

#include <cstdint>
#include <vector>

#include "halfstreet/game.hpp"

namespace halfstreet {

/// Share of the first action under regret matching; 0.5 when both regrets are zero.
double regret_match(double r_action, double r_other);

/// Cumulative regrets and strategy weights of one role. "Act" is bet for the
/// player and call for the dealer; "pass" is check or fold.
struct RegretState {
  RegretState(Role role, int hands);

  Role role;
  std::vector<double> regret_act;
  std::vector<double> regret_pass;
  std::vector<double> sum_act;
  std::vector<double> sum_pass;
  std::vector<double> current;  // V: probability of acting

  [[nodiscard]] int size() const { return static_cast<int>(current.size()); }
  [[nodiscard]] Strategy current_strategy() const { return Strategy{role, current}; }
  /// W = S_act / (S_act + S_pass), 0.5 where both are zero.
  [[nodiscard]] Strategy average() const;
};

/// One self-play update at the deal (player_hand, dealer_hand). Counterfactual
/// values use the game's expected showdown, so flop rounds average over boards.
void cfr_round(RegretState& player, RegretState& dealer, const HalfStreetGame& game, int player_hand, int dealer_hand);

struct CfrConfig {
  std::uint64_t iterations = 10'000'000;
  std::uint64_t seed = 1;
  std::uint64_t checkpoint_every = 0;  // 0: every iterations / 20

  /// Throws std::invalid_argument for zero iterations.
  void validate() const;
  [[nodiscard]] std::uint64_t checkpoint_interval() const;
};

struct Checkpoint {
  std::uint64_t iteration = 0;
  double exploitability = 0.0;
  double value_player = 0.0;
};

struct TrainReport {
  std::uint64_t iterations = 0;
  Strategy player;
  Strategy dealer;
  std::vector<Checkpoint> checkpoints;
};

TrainReport train(const HalfStreetGame& game, const CfrConfig& config);

}  // namespace halfstreet
