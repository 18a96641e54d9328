#pragma once

#include <utility>
#include <vector>

#include "halfstreet/game.hpp"

namespace halfstreet {

/// Closed-form equilibrium of continuous von Neumann poker. Hands are uniform
/// on [0, 1], higher wins.
struct VnSolution {
  double x1 = 0.0;     // player bluffs on [0, x1]
  double x2 = 0.0;     // player value-bets on (x2, 1]
  double c = 0.0;      // dealer call mass inside (x1, x2)
  double y0 = 0.0;     // admissible dealer calls above y0
  double value = 0.0;  // player net expectation per deal
};

/// Throws std::invalid_argument for a nonpositive ante or bet.
VnSolution solve(const GameSpec& spec);

/// Equilibrium bet probability at hand strength x: 1 on [0, x1] and (x2, 1].
double player_equilibrium(double x, const VnSolution& sol);

/// Admissible dealer call probability at y: 0 on [0, y0], 1 above.
double dealer_admissible(double y, const VnSolution& sol);

/// Position on [0, 1] of 0-based hand `hand` in an M-hand game: the centre of
/// its cell, (hand + 1/2) / M.
double grid_point(int hand, int hands);

/// Equilibrium strategies sampled at the grid points.
std::pair<Strategy, Strategy> discretize(const VnSolution& sol, int hands);

/// A strategy on [0, 1] that is constant on consecutive intervals.
class StepProfile {
 public:
  /// `breaks` are the interior breakpoints in increasing order; `levels` has
  /// one more entry than `breaks`.
  StepProfile(std::vector<double> breaks, std::vector<double> levels);

  /// The profile of an M-hand strategy: level probs[k] on cell [k/M, (k+1)/M).
  static StepProfile from_strategy(const Strategy& strategy);

  [[nodiscard]] double operator()(double x) const;
  /// Exact integral over [lo, hi].
  [[nodiscard]] double integral(double lo, double hi) const;

 private:
  std::vector<double> breaks_;
  std::vector<double> levels_;
};

StepProfile player_profile(const VnSolution& sol);
StepProfile admissible_dealer_profile(const VnSolution& sol);

}  // namespace halfstreet
