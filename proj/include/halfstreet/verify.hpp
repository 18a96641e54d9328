#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "halfstreet/equity.hpp"
#include "halfstreet/game.hpp"
#include "halfstreet/vn_analytic.hpp"

namespace halfstreet {

/// Expected net chips per deal for each role; the two always sum to zero.
struct GameValue {
  double player = 0.0;
  double dealer = 0.0;
};

GameValue game_value(const HalfStreetGame& game, const Strategy& p, const Strategy& q);

/// Per player hand: expected gain of betting over checking against q,
/// conditional on holding the hand.
std::vector<double> e_player(const HalfStreetGame& game, const Strategy& q);

/// Per dealer hand: expected gain of calling over folding against p,
/// conditional on holding the hand (including the chance of facing no bet).
std::vector<double> e_dealer(const HalfStreetGame& game, const Strategy& p);

/// Player indifference function of discrete von Neumann poker on the cell-centre
/// grid. The integrals are exact for the step strategy; the tie cell counts half.
std::vector<double> e1_vn(const Strategy& q, const GameSpec& spec);
/// Dealer counterpart of e1_vn.
std::vector<double> e2_vn(const Strategy& p, const GameSpec& spec);

/// Continuous indifference functions evaluated exactly for step strategies.
double e1_continuous(double x, const StepProfile& q, const GameSpec& spec);
double e2_continuous(double y, const StepProfile& p, const GameSpec& spec);

/// Flop indifference functions written term by term from the win/draw tables.
/// Throw std::invalid_argument on a strategy that is not 169 long.
std::vector<double> e_player_flop(const Strategy& q, const EquityTables& tables, const GameSpec& spec);
std::vector<double> e_dealer_flop(const Strategy& p, const EquityTables& tables, const GameSpec& spec);

struct BestResponse {
  Strategy strategy;
  double value = 0.0;  // responder's net expectation
};

/// Pure best response for `responder` against `opponent`; ties take the
/// passive action (check or fold).
BestResponse best_response(const HalfStreetGame& game, const Strategy& opponent, Role responder);

double exploitability(const HalfStreetGame& game, const Strategy& p, const Strategy& q);

/// (1/M) times the dealer's call probabilities over hands strictly inside (x1, x2).
double dealer_call_mass(const Strategy& q, const VnSolution& sol);

/// Hands with |e| > threshold whose rounded probability disagrees with the
/// sign of e (probabilities of 1/2 and above round to 1).
struct SignCheck {
  int considered = 0;
  int violations = 0;

  [[nodiscard]] double consistency() const {
    return considered == 0 ? 1.0 : 1.0 - static_cast<double>(violations) / considered;
  }
};

SignCheck sign_check(const Strategy& strategy, const std::vector<double>& e, double threshold);

struct Diagnostics {
  std::vector<double> e_player;
  std::vector<double> e_dealer;
  GameValue value;
  double exploitability = 0.0;
  std::optional<double> dealer_call_mass;  // von Neumann games only
  double sign_threshold = 0.0;
  SignCheck player_signs;
  SignCheck dealer_signs;
};

inline constexpr double kSignThreshold = 0.05;

Diagnostics diagnose(const HalfStreetGame& game, const Strategy& p, const Strategy& q,
                     const std::optional<VnSolution>& sol = std::nullopt, double threshold = kSignThreshold);

/// CSV with columns index,label,player_probability,e_player,dealer_probability,e_dealer.
std::string diagnostics_csv(const HalfStreetGame& game, const Strategy& p, const Strategy& q, const Diagnostics& diag);

/// Summary document: values, exploitability, call mass and sign counts.
nlohmann::ordered_json diagnostics_summary(const Diagnostics& diag);

}  // namespace halfstreet
