#include "halfstreet/game.hpp"

#include <stdexcept>

namespace halfstreet {

void GameSpec::validate() const {
  if (!(ante > 0.0)) throw std::invalid_argument("ante must be positive");
  if (!(bet > 0.0)) throw std::invalid_argument("bet must be positive");
}

std::string_view role_name(Role role) { return role == Role::player ? "player" : "dealer"; }

Strategy Strategy::constant(Role role, int hands, double prob) {
  return Strategy{role, std::vector<double>(static_cast<std::size_t>(hands), prob)};
}

void Strategy::validate(int hands) const {
  if (size() != hands) {
    throw std::invalid_argument("strategy has " + std::to_string(size()) + " entries, game has " +
                                std::to_string(hands) + " hands");
  }
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("strategy entry outside [0,1]");
  }
}

HalfStreetGame::HalfStreetGame(GameSpec spec) : spec_(spec) { spec_.validate(); }

VonNeumannGame::VonNeumannGame(GameSpec spec, int hands) : HalfStreetGame(spec), hands_(hands) {
  if (hands < 2) throw std::invalid_argument("von Neumann game needs at least 2 hands");
}

ShowdownOdds VonNeumannGame::showdown(int player_hand, int dealer_hand) const {
  if (player_hand > dealer_hand) return {1.0, 0.0, 0.0};
  if (player_hand < dealer_hand) return {0.0, 1.0, 0.0};
  return {0.0, 0.0, 1.0};
}

Deal VonNeumannGame::deal(Rng& rng) const {
  std::uniform_int_distribution<int> pick(0, hands_ - 1);
  Deal d;
  d.player_hand = pick(rng);
  d.dealer_hand = pick(rng);
  return d;
}

int VonNeumannGame::resolve_showdown(const Deal& deal, Rng&) const {
  return (deal.player_hand > deal.dealer_hand) - (deal.player_hand < deal.dealer_hand);
}

FlopGame::FlopGame(GameSpec spec, std::shared_ptr<const EquityTables> tables, FlopShowdown mode)
    : HalfStreetGame(spec), tables_(std::move(tables)), mode_(mode) {
  if (!tables_) throw std::invalid_argument("flop game needs equity tables");
  if (tables_->board_size != 3) throw std::invalid_argument("flop game needs board-3 equity tables");
}

double FlopGame::conditional(int hand, int given) const {
  return ConditionalTable::instance().probability(given, hand);
}

ShowdownOdds FlopGame::showdown(int player_hand, int dealer_hand) const {
  return {tables_->win(player_hand, dealer_hand), tables_->win(dealer_hand, player_hand),
          tables_->draw(player_hand, dealer_hand)};
}

Deal FlopGame::deal(Rng& rng) const {
  std::uniform_int_distribution<int> pick(0, kDeckSize - 1);
  const auto& deck = full_deck();
  std::uint64_t used = 0;
  Deal d;
  for (auto& card : d.cards) {
    int c = 0;
    do {
      c = pick(rng);
    } while ((used >> c & 1u) != 0);
    used |= std::uint64_t{1} << c;
    card = deck[static_cast<std::size_t>(c)];
  }
  d.player_hand = classify(d.cards[0], d.cards[1]).value;
  d.dealer_hand = classify(d.cards[2], d.cards[3]).value;
  return d;
}

int FlopGame::resolve_showdown(const Deal& deal, Rng& rng) const {
  if (mode_ == FlopShowdown::tables) {
    const ShowdownOdds odds = showdown(deal.player_hand, deal.dealer_hand);
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    if (u < odds.win) return 1;
    if (u < odds.win + odds.lose) return -1;
    return 0;
  }
  std::uniform_int_distribution<int> pick(0, kDeckSize - 1);
  const auto& deck = full_deck();
  std::uint64_t used = 0;
  for (const Card& c : deal.cards) used |= std::uint64_t{1} << c.index();
  std::array<Card, 5> mine = {deal.cards[0], deal.cards[1]};
  std::array<Card, 5> theirs = {deal.cards[2], deal.cards[3]};
  for (std::size_t k = 2; k < 5; ++k) {
    int c = 0;
    do {
      c = pick(rng);
    } while ((used >> c & 1u) != 0);
    used |= std::uint64_t{1} << c;
    mine[k] = theirs[k] = deck[static_cast<std::size_t>(c)];
  }
  const int a = eval5_unchecked(mine).value;
  const int b = eval5_unchecked(theirs).value;
  return (a < b) - (a > b);
}

ActionValues action_values(const GameSpec& spec, const ShowdownOdds& odds, double q_call) {
  const double a = spec.ante;
  const double edge = odds.win - odds.lose;
  ActionValues v;
  v.bet = q_call * ((a + spec.bet) * edge) + (1.0 - q_call) * a;
  v.check = a * edge;
  v.call = -((a + spec.bet) * edge);
  v.fold = -a;
  return v;
}

Payoffs expected_payoffs(const HalfStreetGame& game, int player_hand, int dealer_hand, double p_bet, double q_call) {
  const ActionValues v = action_values(game.spec(), game.showdown(player_hand, dealer_hand), q_call);
  Payoffs out;
  out.player = p_bet * v.bet + (1.0 - p_bet) * v.check;
  out.dealer = p_bet * (q_call * v.call + (1.0 - q_call) * v.fold) + (1.0 - p_bet) * -v.check;
  return out;
}

Payoffs play_round(const HalfStreetGame& game, const Deal& deal, bool player_bets, bool dealer_calls, Rng& rng) {
  const GameSpec& spec = game.spec();
  double player = 0.0;
  if (!player_bets) {
    player = spec.ante * game.resolve_showdown(deal, rng);
  } else if (!dealer_calls) {
    player = spec.ante;
  } else {
    player = (spec.ante + spec.bet) * game.resolve_showdown(deal, rng);
  }
  return {player, -player};
}

}  // namespace halfstreet
