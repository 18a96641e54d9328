#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "halfstreet/cards.hpp"

namespace halfstreet {

inline constexpr int kNumClasses = 169;
inline constexpr int kNumHoldings = 1326;        // C(52,2)
inline constexpr int kOpponentHoldings = 1225;   // C(50,2)

/// Cell of the 13x13 starting-hand grid. Rows and columns run A..2; the
/// diagonal holds pairs, the upper triangle suited hands and the lower
/// triangle offsuit hands. value = 13 * row + col.
struct ClassIndex {
  int value = 0;

  [[nodiscard]] constexpr int row() const { return value / 13; }
  [[nodiscard]] constexpr int col() const { return value % 13; }
  [[nodiscard]] constexpr bool is_pair() const { return row() == col(); }
  [[nodiscard]] constexpr bool is_suited() const { return row() < col(); }

  constexpr auto operator<=>(const ClassIndex&) const = default;
};

using HoleCards = std::array<Card, 2>;

ClassIndex classify(Card a, Card b);

std::string class_label(ClassIndex i);
ClassIndex parse_class_label(std::string_view label);

/// 6 for pairs, 4 for suited, 12 for offsuit.
int class_degeneracy(ClassIndex i);

/// h(i) = degeneracy / 1326.
double class_prior(ClassIndex i);

/// Every concrete two-card holding in class i.
std::vector<HoleCards> concrete_holdings(ClassIndex i);

/// The fixed concrete holding used to define class-level conditionals.
HoleCards representative(ClassIndex i);

/// Opponent class counts (out of 1225) given that `held` is out of the deck.
std::array<int, kNumClasses> opponent_class_counts(const HoleCards& held);

/// h(j|i) for all j, computed from the representative of i.
std::vector<double> conditional_dist(ClassIndex i);

/// 169x169 row-major table with entry (i, j) = count of h(j|i) * 1225.
class ConditionalTable {
 public:
  ConditionalTable();

  [[nodiscard]] int count(int given, int j) const { return counts_[static_cast<std::size_t>(given * kNumClasses + j)]; }
  [[nodiscard]] double probability(int given, int j) const {
    return static_cast<double>(count(given, j)) / kOpponentHoldings;
  }

  static const ConditionalTable& instance();

 private:
  std::vector<int> counts_;
};

}  // namespace halfstreet
