#include "halfstreet/abstraction.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace halfstreet {

namespace {

constexpr std::string_view kGridRanks = "AKQJT98765432";

// Grid position 0 is the ace.
int grid_pos(int rank) { return 14 - rank; }
int rank_at(int pos) { return 14 - pos; }

}  // namespace

ClassIndex classify(Card a, Card b) {
  if (a == b) throw std::invalid_argument("classify: identical cards " + a.to_string());
  const int ha = grid_pos(std::max(a.rank(), b.rank()));
  const int lo = grid_pos(std::min(a.rank(), b.rank()));
  if (ha == lo) return ClassIndex{13 * ha + ha};
  if (a.suit() == b.suit()) return ClassIndex{13 * ha + lo};
  return ClassIndex{13 * lo + ha};
}

std::string class_label(ClassIndex i) {
  if (i.value < 0 || i.value >= kNumClasses) throw std::invalid_argument("class index out of range");
  const int hi = std::min(i.row(), i.col());
  const int lo = std::max(i.row(), i.col());
  std::string label{kGridRanks[static_cast<std::size_t>(hi)], kGridRanks[static_cast<std::size_t>(lo)]};
  if (!i.is_pair()) label += i.is_suited() ? 's' : 'o';
  return label;
}

ClassIndex parse_class_label(std::string_view label) {
  auto bad = [&] { return std::invalid_argument("bad hand class label '" + std::string(label) + "'"); };
  if (label.size() != 2 && label.size() != 3) throw bad();
  const auto a = kGridRanks.find(static_cast<char>(std::toupper(static_cast<unsigned char>(label[0]))));
  const auto b = kGridRanks.find(static_cast<char>(std::toupper(static_cast<unsigned char>(label[1]))));
  if (a == std::string_view::npos || b == std::string_view::npos) throw bad();
  const int hi = static_cast<int>(std::min(a, b));
  const int lo = static_cast<int>(std::max(a, b));
  if (hi == lo) {
    if (label.size() != 2) throw bad();
    return ClassIndex{13 * hi + hi};
  }
  if (label.size() != 3) throw bad();
  const char kind = static_cast<char>(std::tolower(static_cast<unsigned char>(label[2])));
  if (kind == 's') return ClassIndex{13 * hi + lo};
  if (kind == 'o') return ClassIndex{13 * lo + hi};
  throw bad();
}

int class_degeneracy(ClassIndex i) {
  if (i.is_pair()) return 6;
  return i.is_suited() ? 4 : 12;
}

double class_prior(ClassIndex i) { return static_cast<double>(class_degeneracy(i)) / kNumHoldings; }

std::vector<HoleCards> concrete_holdings(ClassIndex i) {
  const int hi = rank_at(std::min(i.row(), i.col()));
  const int lo = rank_at(std::max(i.row(), i.col()));
  std::vector<HoleCards> out;
  for (int s1 = 0; s1 < kNumSuits; ++s1) {
    for (int s2 = 0; s2 < kNumSuits; ++s2) {
      if (i.is_pair()) {
        if (s2 > s1) out.push_back({Card::make(hi, s1), Card::make(lo, s2)});
      } else if (i.is_suited() ? s1 == s2 : s1 != s2) {
        out.push_back({Card::make(hi, s1), Card::make(lo, s2)});
      }
    }
  }
  return out;
}

HoleCards representative(ClassIndex i) { return concrete_holdings(i).front(); }

std::array<int, kNumClasses> opponent_class_counts(const HoleCards& held) {
  std::array<int, kNumClasses> counts{};
  const auto& deck = full_deck();
  for (int a = 0; a < kDeckSize; ++a) {
    if (deck[a] == held[0] || deck[a] == held[1]) continue;
    for (int b = a + 1; b < kDeckSize; ++b) {
      if (deck[b] == held[0] || deck[b] == held[1]) continue;
      ++counts[static_cast<std::size_t>(classify(deck[a], deck[b]).value)];
    }
  }
  return counts;
}

std::vector<double> conditional_dist(ClassIndex i) {
  const auto& table = ConditionalTable::instance();
  std::vector<double> out(kNumClasses);
  for (int j = 0; j < kNumClasses; ++j) out[static_cast<std::size_t>(j)] = table.probability(i.value, j);
  return out;
}

ConditionalTable::ConditionalTable() : counts_(static_cast<std::size_t>(kNumClasses * kNumClasses)) {
  for (int i = 0; i < kNumClasses; ++i) {
    const auto row = opponent_class_counts(representative(ClassIndex{i}));
    std::copy(row.begin(), row.end(), counts_.begin() + static_cast<std::ptrdiff_t>(i * kNumClasses));
  }
}

const ConditionalTable& ConditionalTable::instance() {
  static const ConditionalTable table;
  return table;
}

}  // namespace halfstreet
