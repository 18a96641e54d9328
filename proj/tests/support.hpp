#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <tuple>
#include <vector>

#include "halfstreet/cards.hpp"

namespace halfstreet::testing {

/// `n` distinct cards drawn uniformly from the deck.
template <std::size_t N>
std::array<Card, N> draw_cards(std::mt19937_64& rng) {
  std::array<int, kDeckSize> idx{};
  for (int k = 0; k < kDeckSize; ++k) idx[static_cast<std::size_t>(k)] = k;
  std::array<Card, N> out{};
  for (std::size_t k = 0; k < N; ++k) {
    std::uniform_int_distribution<std::size_t> pick(k, kDeckSize - 1);
    std::swap(idx[k], idx[pick(rng)]);
    out[k] = full_deck()[static_cast<std::size_t>(idx[k])];
  }
  return out;
}

/// Textbook hand comparison, written without any lookup tables: category
/// (8 = straight flush ... 0 = high card) followed by the ranks that break ties.
inline std::pair<int, std::vector<int>> reference_strength(const std::array<Card, 5>& hand) {
  std::map<int, int> counts;
  for (const Card& c : hand) ++counts[c.rank()];
  bool flush = true;
  for (const Card& c : hand) flush = flush && c.suit() == hand[0].suit();
  std::vector<std::pair<int, int>> groups;  // (count, rank)
  for (const auto& [rank, count] : counts) groups.emplace_back(count, rank);
  std::sort(groups.rbegin(), groups.rend());
  std::vector<int> ranks;
  for (const auto& g : groups) ranks.push_back(g.second);

  int straight_top = 0;
  if (groups.size() == 5) {
    if (ranks.front() - ranks.back() == 4) straight_top = ranks.front();
    if (ranks == std::vector<int>{14, 5, 4, 3, 2}) straight_top = 5;
  }
  if (straight_top != 0 && flush) return {8, {straight_top}};
  if (groups[0].first == 4) return {7, ranks};
  if (groups[0].first == 3 && groups[1].first == 2) return {6, ranks};
  if (flush) return {5, ranks};
  if (straight_top != 0) return {4, {straight_top}};
  if (groups[0].first == 3) return {3, ranks};
  if (groups[0].first == 2 && groups[1].first == 2) return {2, ranks};
  if (groups[0].first == 2) return {1, ranks};
  return {0, ranks};
}

inline RankIndex best_of_subsets(const std::array<Card, 7>& cards) {
  RankIndex best{kNumRankIndices + 1};
  for (int a = 0; a < 7; ++a) {
    for (int b = a + 1; b < 7; ++b) {
      std::array<Card, 5> hand{};
      std::size_t n = 0;
      for (int k = 0; k < 7; ++k) {
        if (k != a && k != b) hand[n++] = cards[static_cast<std::size_t>(k)];
      }
      best = std::min(best, eval5(hand));
    }
  }
  return best;
}

}  // namespace halfstreet::testing
