#include "halfstreet/cfr.hpp"

#include <algorithm>
#include <stdexcept>

#include "halfstreet/verify.hpp"

namespace halfstreet {

double regret_match(double r_action, double r_other) {
  const double total = r_action + r_other;
  return total > 0.0 ? r_action / total : 0.5;
}

RegretState::RegretState(Role role, int hands)
    : role(role),
      regret_act(static_cast<std::size_t>(hands), 0.0),
      regret_pass(static_cast<std::size_t>(hands), 0.0),
      sum_act(static_cast<std::size_t>(hands), 0.0),
      sum_pass(static_cast<std::size_t>(hands), 0.0),
      current(static_cast<std::size_t>(hands), 0.5) {
  if (hands < 1) throw std::invalid_argument("regret state needs at least one hand");
}

Strategy RegretState::average() const {
  Strategy s{role, std::vector<double>(current.size())};
  for (std::size_t k = 0; k < current.size(); ++k) s.probs[k] = regret_match(sum_act[k], sum_pass[k]);
  return s;
}

namespace {

void accumulate(RegretState& state, int hand, double delta_act, double delta_pass) {
  const auto k = static_cast<std::size_t>(hand);
  state.regret_act[k] = std::max(state.regret_act[k] + delta_act, 0.0);
  state.regret_pass[k] = std::max(state.regret_pass[k] + delta_pass, 0.0);
  const double v = regret_match(state.regret_act[k], state.regret_pass[k]);
  state.current[k] = v;
  state.sum_act[k] += v;
  state.sum_pass[k] += 1.0 - v;
}

}  // namespace

void cfr_round(RegretState& player, RegretState& dealer, const HalfStreetGame& game, int player_hand, int dealer_hand) {
  const double vp = player.current[static_cast<std::size_t>(player_hand)];
  const double vd = dealer.current[static_cast<std::size_t>(dealer_hand)];
  const ActionValues v = action_values(game.spec(), game.showdown(player_hand, dealer_hand), vd);

  const double e_player = vp * v.bet + (1.0 - vp) * v.check;
  const double e_dealer = vd * v.call + (1.0 - vd) * v.fold;

  // The dealer only reaches its decision when the player bets.
  accumulate(player, player_hand, v.bet - e_player, v.check - e_player);
  accumulate(dealer, dealer_hand, vp * (v.call - e_dealer), vp * (v.fold - e_dealer));
}

void CfrConfig::validate() const {
  if (iterations == 0) throw std::invalid_argument("cfr iterations must be positive");
}

std::uint64_t CfrConfig::checkpoint_interval() const {
  if (checkpoint_every > 0) return checkpoint_every;
  return std::max<std::uint64_t>(iterations / 20, 1);
}

TrainReport train(const HalfStreetGame& game, const CfrConfig& config) {
  config.validate();
  const int m = game.num_hands();
  RegretState player(Role::player, m);
  RegretState dealer(Role::dealer, m);
  Rng rng(config.seed);
  TrainReport report;
  report.iterations = config.iterations;

  const std::uint64_t every = config.checkpoint_interval();
  auto checkpoint = [&](std::uint64_t t) {
    const Strategy p = player.average();
    const Strategy q = dealer.average();
    report.checkpoints.push_back({t, exploitability(game, p, q), game_value(game, p, q).player});
  };

  for (std::uint64_t t = 1; t <= config.iterations; ++t) {
    const Deal d = game.deal(rng);
    cfr_round(player, dealer, game, d.player_hand, d.dealer_hand);
    if (t % every == 0) checkpoint(t);
  }
  if (report.checkpoints.empty() || report.checkpoints.back().iteration != config.iterations) {
    checkpoint(config.iterations);
  }
  report.player = player.average();
  report.dealer = dealer.average();
  return report;
}

}  // namespace halfstreet
