#include "halfstreet/vn_analytic.hpp"

#include <algorithm>
#include <stdexcept>

namespace halfstreet {

VnSolution solve(const GameSpec& spec) {
  spec.validate();
  const double P = spec.pot();
  const double B = spec.bet;
  const double D = P * B + 2.0 * (P + B) * (P + B);
  VnSolution s;
  s.x1 = P * B / D;
  s.x2 = (2.0 * (P + B) * (P + B) - P * P) / D;
  s.c = P * (P + B) / D;
  s.y0 = B * (3.0 * P + 2.0 * B) / D;
  s.value = 0.5 * P * (P * B / D);
  return s;
}

double player_equilibrium(double x, const VnSolution& sol) { return (x <= sol.x1 || x > sol.x2) ? 1.0 : 0.0; }

double dealer_admissible(double y, const VnSolution& sol) { return y > sol.y0 ? 1.0 : 0.0; }

double grid_point(int hand, int hands) { return (hand + 0.5) / hands; }

std::pair<Strategy, Strategy> discretize(const VnSolution& sol, int hands) {
  if (hands < 2) throw std::invalid_argument("discretize needs at least 2 hands");
  Strategy p{Role::player, std::vector<double>(static_cast<std::size_t>(hands))};
  Strategy q{Role::dealer, std::vector<double>(static_cast<std::size_t>(hands))};
  for (int k = 0; k < hands; ++k) {
    const double x = grid_point(k, hands);
    p.probs[static_cast<std::size_t>(k)] = player_equilibrium(x, sol);
    q.probs[static_cast<std::size_t>(k)] = dealer_admissible(x, sol);
  }
  return {std::move(p), std::move(q)};
}

StepProfile::StepProfile(std::vector<double> breaks, std::vector<double> levels)
    : breaks_(std::move(breaks)), levels_(std::move(levels)) {
  if (levels_.size() != breaks_.size() + 1) throw std::invalid_argument("step profile needs one more level than breaks");
  if (!std::is_sorted(breaks_.begin(), breaks_.end())) throw std::invalid_argument("step profile breaks must increase");
}

StepProfile StepProfile::from_strategy(const Strategy& strategy) {
  const int m = strategy.size();
  std::vector<double> breaks;
  for (int k = 1; k < m; ++k) breaks.push_back(static_cast<double>(k) / m);
  return StepProfile(std::move(breaks), strategy.probs);
}

double StepProfile::operator()(double x) const {
  const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  return levels_[static_cast<std::size_t>(it - breaks_.begin())];
}

double StepProfile::integral(double lo, double hi) const {
  double total = 0.0;
  double left = 0.0;
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    const double right = k < breaks_.size() ? breaks_[k] : 1.0;
    const double a = std::max(left, lo);
    const double b = std::min(right, hi);
    if (b > a) total += levels_[k] * (b - a);
    left = right;
  }
  return total;
}

StepProfile player_profile(const VnSolution& sol) { return StepProfile({sol.x1, sol.x2}, {1.0, 0.0, 1.0}); }

StepProfile admissible_dealer_profile(const VnSolution& sol) { return StepProfile({sol.y0}, {0.0, 1.0}); }

}  // namespace halfstreet
