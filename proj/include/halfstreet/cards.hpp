#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace halfstreet {

// Rank primes for deuce..ace.
inline constexpr std::array<std::uint32_t, 13> kRankPrimes = {2,  3,  5,  7,  11, 13, 17,
                                                             19, 23, 29, 31, 37, 41};

// Suit bits in the order spades, hearts, clubs, diamonds.
inline constexpr std::array<std::uint32_t, 4> kSuitBits = {256, 512, 1024, 2048};

inline constexpr int kNumRanks = 13;
inline constexpr int kNumSuits = 4;
inline constexpr int kDeckSize = 52;
inline constexpr int kNumRankIndices = 7462;

/// A playing card encoded as `suit_bit + rank_prime`.
///
/// The rank prime lives in the low 8 bits and the one-hot suit in bits 8..11,
/// so `code & 0xFF` recovers the prime and `code >> 8` the suit mask.
class Card {
 public:
  constexpr Card() = default;

  /// rank in 2..14 (ace = 14), suit in 0..3 (spades, hearts, clubs, diamonds).
  static Card make(int rank, int suit);
  static Card from_code(std::uint32_t code);
  /// Parses "As", "Td", "2c" ...
  static Card parse(std::string_view text);

  [[nodiscard]] constexpr std::uint32_t code() const { return code_; }
  [[nodiscard]] constexpr std::uint32_t prime() const { return code_ & 0xFFu; }
  [[nodiscard]] constexpr std::uint32_t suit_mask() const { return code_ >> 8; }
  [[nodiscard]] int rank() const;  // 2..14
  [[nodiscard]] int suit() const;  // 0..3
  /// Dense index 0..51 (suit * 13 + rank - 2).
  [[nodiscard]] int index() const { return suit() * kNumRanks + rank() - 2; }
  [[nodiscard]] std::string to_string() const;

  constexpr auto operator<=>(const Card&) const = default;

 private:
  constexpr explicit Card(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

Card make_card(int rank, int suit);

/// All 52 cards ordered by `Card::index()`.
const std::array<Card, kDeckSize>& full_deck();

/// Hand strength class: 1 (royal flush) .. 7462 (7-5-4-3-2 offsuit). Lower is stronger.
struct RankIndex {
  int value = 0;
  constexpr auto operator<=>(const RankIndex&) const = default;
};

enum class HandCategory {
  straight_flush,
  four_of_a_kind,
  full_house,
  flush,
  straight,
  three_of_a_kind,
  two_pair,
  pair,
  high_card,
};

inline constexpr int kNumCategories = 9;

struct RankSpan {
  int first;
  int last;
};

RankSpan category_span(HandCategory category);
HandCategory category_of(RankIndex rank);
std::string_view category_name(HandCategory category);

struct RankEntry {
  std::uint32_t product;
  std::uint16_t rank;
};

/// Prime-product keyed lookup tables; flush_table holds straight flushes and
/// flushes, nonflush_table everything else. Both are sorted by product.
class RankTables {
 public:
  RankTables(std::vector<RankEntry> flush, std::vector<RankEntry> nonflush);

  [[nodiscard]] const std::vector<RankEntry>& flush_table() const { return flush_; }
  [[nodiscard]] const std::vector<RankEntry>& nonflush_table() const { return nonflush_; }

  [[nodiscard]] RankIndex lookup_flush(std::uint32_t product) const;
  [[nodiscard]] RankIndex lookup_nonflush(std::uint32_t product) const;

  /// Shared immutable instance built on first use.
  static const RankTables& instance();

 private:
  std::vector<RankEntry> flush_;
  std::vector<RankEntry> nonflush_;
};

RankTables build_tables();

/// CSV dump of `prime_product,rank_index,is_flush` rows with a version header.
std::string rank_tables_csv(const RankTables& tables);
void save_rank_tables(const RankTables& tables, const std::filesystem::path& path);

bool is_flush(std::span<const Card, 5> hand);
RankIndex eval5(std::span<const Card, 5> hand);
RankIndex eval7(std::span<const Card, 7> cards);

// Variants without the distinct-card check, for inner loops whose callers
// already guarantee distinct cards.
RankIndex eval5_unchecked(std::span<const Card, 5> hand);
RankIndex eval7_unchecked(std::span<const Card, 7> cards);

}  // namespace halfstreet
