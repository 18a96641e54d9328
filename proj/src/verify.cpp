#include "halfstreet/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "halfstreet/strategy_io.hpp"

namespace halfstreet {

namespace {

std::size_t at(int k) { return static_cast<std::size_t>(k); }

void require_size(const Strategy& s, int hands, const char* what) {
  if (s.size() != hands) {
    throw std::invalid_argument(std::string(what) + ": strategy has " + std::to_string(s.size()) + " entries, expected " +
                                std::to_string(hands));
  }
}

}  // namespace

GameValue game_value(const HalfStreetGame& game, const Strategy& p, const Strategy& q) {
  const int m = game.num_hands();
  require_size(p, m, "game_value");
  require_size(q, m, "game_value");
  GameValue v;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const double weight = game.deal_weight(i, j);
      if (weight == 0.0) continue;
      const Payoffs e = expected_payoffs(game, i, j, p[i], q[j]);
      v.player += weight * e.player;
      v.dealer += weight * e.dealer;
    }
  }
  return v;
}

std::vector<double> e_player(const HalfStreetGame& game, const Strategy& q) {
  const int m = game.num_hands();
  require_size(q, m, "e_player");
  std::vector<double> e(at(m), 0.0);
  for (int i = 0; i < m; ++i) {
    double sum = 0.0;
    for (int j = 0; j < m; ++j) {
      const double h = game.conditional(j, i);
      if (h == 0.0) continue;
      const ActionValues v = action_values(game.spec(), game.showdown(i, j), q[j]);
      sum += h * (v.bet - v.check);
    }
    e[at(i)] = sum;
  }
  return e;
}

std::vector<double> e_dealer(const HalfStreetGame& game, const Strategy& p) {
  const int m = game.num_hands();
  require_size(p, m, "e_dealer");
  std::vector<double> e(at(m), 0.0);
  for (int j = 0; j < m; ++j) {
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
      const double h = game.conditional(i, j);
      if (h == 0.0) continue;
      const ActionValues v = action_values(game.spec(), game.showdown(i, j), 1.0);
      sum += h * p[i] * (v.call - v.fold);
    }
    e[at(j)] = sum;
  }
  return e;
}

std::vector<double> e1_vn(const Strategy& q, const GameSpec& spec) {
  spec.validate();
  const int m = q.size();
  const double P = spec.pot();
  const double B = spec.bet;
  double total = 0.0;
  for (double v : q.probs) total += v;
  std::vector<double> e(at(m));
  double below = 0.0;
  for (int k = 0; k < m; ++k) {
    const double left = below + 0.5 * q[k];
    const double right = (total - below - q[k]) + 0.5 * q[k];
    e[at(k)] = P * (1.0 - (k + 0.5) / m) + (B * left - (P + B) * right) / m;
    below += q[k];
  }
  return e;
}

std::vector<double> e2_vn(const Strategy& p, const GameSpec& spec) {
  spec.validate();
  const int m = p.size();
  const double P = spec.pot();
  const double B = spec.bet;
  double total = 0.0;
  for (double v : p.probs) total += v;
  std::vector<double> e(at(m));
  double below = 0.0;
  for (int k = 0; k < m; ++k) {
    const double left = below + 0.5 * p[k];
    const double right = (total - below - p[k]) + 0.5 * p[k];
    e[at(k)] = ((P + B) * left - B * right) / m;
    below += p[k];
  }
  return e;
}

double e1_continuous(double x, const StepProfile& q, const GameSpec& spec) {
  const double P = spec.pot();
  const double B = spec.bet;
  return P * (1.0 - x) + B * q.integral(0.0, x) - (P + B) * q.integral(x, 1.0);
}

double e2_continuous(double y, const StepProfile& p, const GameSpec& spec) {
  const double P = spec.pot();
  const double B = spec.bet;
  return (P + B) * p.integral(0.0, y) - B * p.integral(y, 1.0);
}

std::vector<double> e_player_flop(const Strategy& q, const EquityTables& tables, const GameSpec& spec) {
  require_size(q, kNumClasses, "e_player_flop");
  const auto& cond = ConditionalTable::instance();
  const double P = spec.pot();
  const double B = spec.bet;
  std::vector<double> e(at(kNumClasses));
  for (int i = 0; i < kNumClasses; ++i) {
    double sum = 0.0;
    for (int j = 0; j < kNumClasses; ++j) {
      const double bracket =
          (P + B) * tables.win(i, j) - B * tables.win(j, i) - P + 0.5 * P * tables.draw(i, j);
      sum += cond.probability(i, j) * bracket * q[j];
    }
    e[at(i)] = sum + P * (1.0 - tables.total_win(i) - 0.5 * tables.total_draw(i));
  }
  return e;
}

std::vector<double> e_dealer_flop(const Strategy& p, const EquityTables& tables, const GameSpec& spec) {
  require_size(p, kNumClasses, "e_dealer_flop");
  const auto& cond = ConditionalTable::instance();
  const double P = spec.pot();
  const double B = spec.bet;
  std::vector<double> e(at(kNumClasses));
  for (int j = 0; j < kNumClasses; ++j) {
    double sum = 0.0;
    for (int i = 0; i < kNumClasses; ++i) {
      const double bracket = (P + B) * tables.win(j, i) - B * tables.win(i, j) + 0.5 * P * tables.draw(j, i);
      sum += cond.probability(j, i) * bracket * p[i];
    }
    e[at(j)] = sum;
  }
  return e;
}

BestResponse best_response(const HalfStreetGame& game, const Strategy& opponent, Role responder) {
  const int m = game.num_hands();
  require_size(opponent, m, "best_response");
  BestResponse br{Strategy{responder, std::vector<double>(at(m), 0.0)}, 0.0};
  for (int k = 0; k < m; ++k) {
    double aggressive = 0.0;
    double passive = 0.0;
    double fixed = 0.0;
    for (int o = 0; o < m; ++o) {
      const double h = game.conditional(o, k);
      if (h == 0.0) continue;
      if (responder == Role::player) {
        const ActionValues v = action_values(game.spec(), game.showdown(k, o), opponent[o]);
        aggressive += h * v.bet;
        passive += h * v.check;
      } else {
        const ActionValues v = action_values(game.spec(), game.showdown(o, k), 1.0);
        const double p = opponent[o];
        aggressive += h * p * v.call;
        passive += h * p * v.fold;
        fixed += h * (1.0 - p) * -v.check;
      }
    }
    const bool act = aggressive > passive;
    br.strategy.probs[at(k)] = act ? 1.0 : 0.0;
    br.value += game.prior(k) * (fixed + (act ? aggressive : passive));
  }
  return br;
}

double exploitability(const HalfStreetGame& game, const Strategy& p, const Strategy& q) {
  const GameValue v = game_value(game, p, q);
  const double gain_p = best_response(game, q, Role::player).value - v.player;
  const double gain_d = best_response(game, p, Role::dealer).value - v.dealer;
  // Each gain is nonnegative in exact arithmetic; only rounding can push it below.
  return std::max(gain_p, 0.0) + std::max(gain_d, 0.0);
}

double dealer_call_mass(const Strategy& q, const VnSolution& sol) {
  const int m = q.size();
  double mass = 0.0;
  for (int k = 0; k < m; ++k) {
    const double x = grid_point(k, m);
    if (x > sol.x1 && x < sol.x2) mass += q[k];
  }
  return mass / m;
}

SignCheck sign_check(const Strategy& strategy, const std::vector<double>& e, double threshold) {
  if (e.size() != strategy.probs.size()) throw std::invalid_argument("sign_check: size mismatch");
  SignCheck out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (std::abs(e[k]) <= threshold) continue;
    ++out.considered;
    const bool acts = strategy.probs[k] >= 0.5;
    if ((e[k] > 0.0) != acts) ++out.violations;
  }
  return out;
}

Diagnostics diagnose(const HalfStreetGame& game, const Strategy& p, const Strategy& q,
                     const std::optional<VnSolution>& sol, double threshold) {
  Diagnostics d;
  d.e_player = e_player(game, q);
  d.e_dealer = e_dealer(game, p);
  d.value = game_value(game, p, q);
  d.exploitability = exploitability(game, p, q);
  if (sol) d.dealer_call_mass = dealer_call_mass(q, *sol);
  d.sign_threshold = threshold;
  d.player_signs = sign_check(p, d.e_player, threshold);
  d.dealer_signs = sign_check(q, d.e_dealer, threshold);
  return d;
}

std::string diagnostics_csv(const HalfStreetGame& game, const Strategy& p, const Strategy& q, const Diagnostics& diag) {
  std::string out = "index,label,player_probability,e_player,dealer_probability,e_dealer\n";
  for (int k = 0; k < game.num_hands(); ++k) {
    out += std::to_string(k) + ',' + game.hand_label(k) + ',' + format_number(p[k]) + ',' +
           format_number(diag.e_player[at(k)]) + ',' + format_number(q[k]) + ',' + format_number(diag.e_dealer[at(k)]) +
           '\n';
  }
  return out;
}

nlohmann::ordered_json diagnostics_summary(const Diagnostics& diag) {
  nlohmann::ordered_json j;
  j["value_player"] = diag.value.player;
  j["value_dealer"] = diag.value.dealer;
  j["exploitability"] = diag.exploitability;
  if (diag.dealer_call_mass) j["dealer_call_mass"] = *diag.dealer_call_mass;
  j["sign_threshold"] = diag.sign_threshold;
  j["player_sign_considered"] = diag.player_signs.considered;
  j["player_sign_violations"] = diag.player_signs.violations;
  j["dealer_sign_considered"] = diag.dealer_signs.considered;
  j["dealer_sign_violations"] = diag.dealer_signs.violations;
  return j;
}

}  // namespace halfstreet
