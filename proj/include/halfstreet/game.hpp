#pragma once

#include <array>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "halfstreet/cards.hpp"
#include "halfstreet/equity.hpp"

namespace halfstreet {

using Rng = std::mt19937_64;

/// Ante and bet sizes; the pot before betting is P = 2 * ante.
struct GameSpec {
  double ante = 1.0;
  double bet = 2.0;

  [[nodiscard]] double pot() const { return 2.0 * ante; }
  /// Throws std::invalid_argument unless ante > 0 and bet > 0.
  void validate() const;
};

enum class Role { player, dealer };

std::string_view role_name(Role role);

/// Per-hand probability of the aggressive action: bet for the player, call for the dealer.
struct Strategy {
  Role role = Role::player;
  std::vector<double> probs;

  [[nodiscard]] int size() const { return static_cast<int>(probs.size()); }
  [[nodiscard]] double operator[](int hand) const { return probs[static_cast<std::size_t>(hand)]; }

  static Strategy constant(Role role, int hands, double prob);
  /// Throws std::invalid_argument on entries outside [0, 1] or a size mismatch.
  void validate(int hands) const;
};

/// Showdown probabilities from the player's point of view.
struct ShowdownOdds {
  double win = 0.0;
  double lose = 0.0;
  double draw = 0.0;
};

struct Deal {
  int player_hand = 0;
  int dealer_hand = 0;
  // Player's two cards then dealer's two; only filled by games with real cards.
  std::array<Card, 4> cards{};
};

struct Payoffs {
  double player = 0.0;
  double dealer = 0.0;
};

/// A one-bet game: both players ante, the player bets or checks, a bet is
/// called or folded, and unresolved hands go to showdown.
class HalfStreetGame {
 public:
  virtual ~HalfStreetGame() = default;

  [[nodiscard]] const GameSpec& spec() const { return spec_; }

  [[nodiscard]] virtual int num_hands() const = 0;
  [[nodiscard]] virtual std::string hand_label(int hand) const = 0;
  /// Marginal probability of being dealt `hand`.
  [[nodiscard]] virtual double prior(int hand) const = 0;
  /// Probability the opponent holds `hand` given one's own `given`.
  [[nodiscard]] virtual double conditional(int hand, int given) const = 0;
  [[nodiscard]] virtual ShowdownOdds showdown(int player_hand, int dealer_hand) const = 0;
  [[nodiscard]] virtual Deal deal(Rng& rng) const = 0;
  /// Realised showdown for the player: +1 win, -1 loss, 0 split.
  [[nodiscard]] virtual int resolve_showdown(const Deal& deal, Rng& rng) const = 0;

  [[nodiscard]] double deal_weight(int player_hand, int dealer_hand) const {
    return prior(player_hand) * conditional(dealer_hand, player_hand);
  }

 protected:
  explicit HalfStreetGame(GameSpec spec);

 private:
  GameSpec spec_;
};

/// Discrete von Neumann poker: each player draws one of M numbers uniformly and
/// independently; the higher number wins. Hand index 0 is the weakest.
class VonNeumannGame final : public HalfStreetGame {
 public:
  VonNeumannGame(GameSpec spec, int hands);

  [[nodiscard]] int num_hands() const override { return hands_; }
  [[nodiscard]] std::string hand_label(int hand) const override { return std::to_string(hand + 1); }
  [[nodiscard]] double prior(int) const override { return 1.0 / hands_; }
  [[nodiscard]] double conditional(int, int) const override { return 1.0 / hands_; }
  [[nodiscard]] ShowdownOdds showdown(int player_hand, int dealer_hand) const override;
  [[nodiscard]] Deal deal(Rng& rng) const override;
  [[nodiscard]] int resolve_showdown(const Deal& deal, Rng& rng) const override;

 private:
  int hands_;
};

/// How flop showdowns are realised in simulated play.
enum class FlopShowdown {
  board,   // deal three community cards and evaluate
  tables,  // sample from the win/draw tables
};

/// Flop poker: two hole cards each from one deck, a three-card board, hands
/// abstracted to the 169 starting-hand classes.
class FlopGame final : public HalfStreetGame {
 public:
  FlopGame(GameSpec spec, std::shared_ptr<const EquityTables> tables, FlopShowdown mode = FlopShowdown::board);

  [[nodiscard]] int num_hands() const override { return kNumClasses; }
  [[nodiscard]] std::string hand_label(int hand) const override { return class_label(ClassIndex{hand}); }
  [[nodiscard]] double prior(int hand) const override { return class_prior(ClassIndex{hand}); }
  [[nodiscard]] double conditional(int hand, int given) const override;
  [[nodiscard]] ShowdownOdds showdown(int player_hand, int dealer_hand) const override;
  [[nodiscard]] Deal deal(Rng& rng) const override;
  [[nodiscard]] int resolve_showdown(const Deal& deal, Rng& rng) const override;

  [[nodiscard]] const EquityTables& tables() const { return *tables_; }

 private:
  std::shared_ptr<const EquityTables> tables_;
  FlopShowdown mode_;
};

/// Values of each pure action at a fixed deal, in net chips. Dealer values are
/// conditional on facing a bet.
struct ActionValues {
  double bet = 0.0;
  double check = 0.0;
  double call = 0.0;
  double fold = 0.0;
};

ActionValues action_values(const GameSpec& spec, const ShowdownOdds& odds, double q_call);

/// Net zero-sum expectation of one deal under mixed actions.
Payoffs expected_payoffs(const HalfStreetGame& game, int player_hand, int dealer_hand, double p_bet, double q_call);

/// Plays one deal with the given pure actions.
Payoffs play_round(const HalfStreetGame& game, const Deal& deal, bool player_bets, bool dealer_calls, Rng& rng);

}  // namespace halfstreet
