#include "halfstreet/cards.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace halfstreet {

namespace {

constexpr std::string_view kRankChars = "23456789TJQKA";
constexpr std::string_view kSuitChars = "shcd";

// prime -> rank offset (0 = deuce), -1 for non-primes.
constexpr std::array<int, 42> kPrimeToOffset = [] {
  std::array<int, 42> table{};
  table.fill(-1);
  for (int r = 0; r < kNumRanks; ++r) table[kRankPrimes[r]] = r;
  return table;
}();

constexpr std::array<RankSpan, kNumCategories> kSpans = {{
    {1, 10},
    {11, 166},
    {167, 322},
    {323, 1599},
    {1600, 1609},
    {1610, 2467},
    {2468, 3325},
    {3326, 6185},
    {6186, 7462},
}};

void require_distinct(std::span<const Card> cards) {
  for (std::size_t a = 0; a < cards.size(); ++a) {
    if (cards[a].prime() >= kPrimeToOffset.size() || kPrimeToOffset[cards[a].prime()] < 0 || std::popcount(cards[a].suit_mask()) != 1) {
      throw std::invalid_argument("invalid card code " + std::to_string(cards[a].code()));
    }
    for (std::size_t b = a + 1; b < cards.size(); ++b) {
      if (cards[a] == cards[b]) throw std::invalid_argument("duplicate card " + cards[a].to_string());
    }
  }
}

std::uint32_t product_of(std::initializer_list<int> offsets) {
  std::uint32_t p = 1;
  for (int r : offsets) p *= kRankPrimes[r];
  return p;
}

RankIndex lookup(const std::vector<RankEntry>& table, std::uint32_t product) {
  auto it = std::lower_bound(table.begin(), table.end(), product,
                             [](const RankEntry& e, std::uint32_t p) { return e.product < p; });
  if (it == table.end() || it->product != product) {
    throw std::invalid_argument("prime product " + std::to_string(product) + " not in table");
  }
  return RankIndex{it->rank};
}

}  // namespace

Card Card::make(int rank, int suit) {
  if (rank < 2 || rank > 14) throw std::invalid_argument("card rank out of range: " + std::to_string(rank));
  if (suit < 0 || suit > 3) throw std::invalid_argument("card suit out of range: " + std::to_string(suit));
  return Card(kSuitBits[suit] + kRankPrimes[rank - 2]);
}

Card Card::from_code(std::uint32_t code) {
  const std::uint32_t prime = code & 0xFFu;
  const std::uint32_t suits = code >> 8;
  if (prime >= kPrimeToOffset.size() || kPrimeToOffset[prime] < 0 || suits == 0 || suits > 8 ||
      std::popcount(suits) != 1) {
    throw std::invalid_argument("invalid card code " + std::to_string(code));
  }
  return Card(code);
}

Card Card::parse(std::string_view text) {
  if (text.size() != 2) throw std::invalid_argument("bad card text '" + std::string(text) + "'");
  const auto r = kRankChars.find(static_cast<char>(std::toupper(static_cast<unsigned char>(text[0]))));
  const auto s = kSuitChars.find(static_cast<char>(std::tolower(static_cast<unsigned char>(text[1]))));
  if (r == std::string_view::npos || s == std::string_view::npos) {
    throw std::invalid_argument("bad card text '" + std::string(text) + "'");
  }
  return make(static_cast<int>(r) + 2, static_cast<int>(s));
}

int Card::rank() const { return kPrimeToOffset[prime()] + 2; }

int Card::suit() const { return std::countr_zero(suit_mask()); }

std::string Card::to_string() const {
  return {kRankChars[static_cast<std::size_t>(rank() - 2)], kSuitChars[static_cast<std::size_t>(suit())]};
}

Card make_card(int rank, int suit) { return Card::make(rank, suit); }

const std::array<Card, kDeckSize>& full_deck() {
  static const std::array<Card, kDeckSize> deck = [] {
    std::array<Card, kDeckSize> d{};
    for (int s = 0; s < kNumSuits; ++s) {
      for (int r = 2; r <= 14; ++r) d[static_cast<std::size_t>(s * kNumRanks + r - 2)] = Card::make(r, s);
    }
    return d;
  }();
  return deck;
}

RankSpan category_span(HandCategory category) { return kSpans[static_cast<std::size_t>(category)]; }

HandCategory category_of(RankIndex rank) {
  if (rank.value < 1 || rank.value > kNumRankIndices) {
    throw std::invalid_argument("rank index out of range: " + std::to_string(rank.value));
  }
  for (std::size_t c = 0; c < kSpans.size(); ++c) {
    if (rank.value <= kSpans[c].last) return static_cast<HandCategory>(c);
  }
  return HandCategory::high_card;
}

std::string_view category_name(HandCategory category) {
  static constexpr std::array<std::string_view, kNumCategories> names = {
      "Straight Flush", "Four of a Kind", "Full House", "Flush",    "Straight",
      "Three of a Kind", "Two Pair",      "Pair",       "High Card"};
  return names[static_cast<std::size_t>(category)];
}

RankTables::RankTables(std::vector<RankEntry> flush, std::vector<RankEntry> nonflush)
    : flush_(std::move(flush)), nonflush_(std::move(nonflush)) {
  auto by_product = [](const RankEntry& a, const RankEntry& b) { return a.product < b.product; };
  std::sort(flush_.begin(), flush_.end(), by_product);
  std::sort(nonflush_.begin(), nonflush_.end(), by_product);
}

RankIndex RankTables::lookup_flush(std::uint32_t product) const { return lookup(flush_, product); }

RankIndex RankTables::lookup_nonflush(std::uint32_t product) const { return lookup(nonflush_, product); }

const RankTables& RankTables::instance() {
  static const RankTables tables = build_tables();
  return tables;
}

RankTables build_tables() {
  // Rank offsets run 0 (deuce) .. 12 (ace). Every loop below emits hands of a
  // category from strongest to weakest, so ranks are assigned by a counter.
  std::vector<RankEntry> flush;
  std::vector<RankEntry> nonflush;
  int next = 1;
  auto emit = [&next](std::vector<RankEntry>& table, std::uint32_t product) {
    table.push_back({product, static_cast<std::uint16_t>(next++)});
  };

  std::vector<std::uint32_t> straights;
  for (int top = 12; top >= 4; --top) straights.push_back(product_of({top, top - 1, top - 2, top - 3, top - 4}));
  straights.push_back(product_of({12, 3, 2, 1, 0}));  // wheel

  // Five distinct ranks, descending lexicographic, excluding straights.
  std::vector<std::uint32_t> distinct_no_straight;
  for (int a = 12; a >= 4; --a)
    for (int b = a - 1; b >= 3; --b)
      for (int c = b - 1; c >= 2; --c)
        for (int d = c - 1; d >= 1; --d)
          for (int e = d - 1; e >= 0; --e) {
            const std::uint32_t p = product_of({a, b, c, d, e});
            if (std::find(straights.begin(), straights.end(), p) == straights.end()) {
              distinct_no_straight.push_back(p);
            }
          }

  for (std::uint32_t p : straights) emit(flush, p);

  for (int quad = 12; quad >= 0; --quad)
    for (int kick = 12; kick >= 0; --kick)
      if (kick != quad) emit(nonflush, product_of({quad, quad, quad, quad, kick}));

  for (int trips = 12; trips >= 0; --trips)
    for (int pair = 12; pair >= 0; --pair)
      if (pair != trips) emit(nonflush, product_of({trips, trips, trips, pair, pair}));

  for (std::uint32_t p : distinct_no_straight) emit(flush, p);

  for (std::uint32_t p : straights) emit(nonflush, p);

  for (int trips = 12; trips >= 0; --trips)
    for (int k1 = 12; k1 >= 0; --k1)
      for (int k2 = k1 - 1; k2 >= 0; --k2)
        if (k1 != trips && k2 != trips) emit(nonflush, product_of({trips, trips, trips, k1, k2}));

  for (int hi = 12; hi >= 0; --hi)
    for (int lo = hi - 1; lo >= 0; --lo)
      for (int kick = 12; kick >= 0; --kick)
        if (kick != hi && kick != lo) emit(nonflush, product_of({hi, hi, lo, lo, kick}));

  for (int pair = 12; pair >= 0; --pair)
    for (int k1 = 12; k1 >= 0; --k1)
      for (int k2 = k1 - 1; k2 >= 0; --k2)
        for (int k3 = k2 - 1; k3 >= 0; --k3)
          if (k1 != pair && k2 != pair && k3 != pair) emit(nonflush, product_of({pair, pair, k1, k2, k3}));

  for (std::uint32_t p : distinct_no_straight) emit(nonflush, p);

  return RankTables(std::move(flush), std::move(nonflush));
}

std::string rank_tables_csv(const RankTables& tables) {
  std::vector<std::pair<RankEntry, bool>> rows;
  for (const auto& e : tables.flush_table()) rows.emplace_back(e, true);
  for (const auto& e : tables.nonflush_table()) rows.emplace_back(e, false);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first.rank < b.first.rank; });
  std::ostringstream out;
  out << "# rank-tables/1\nprime_product,rank_index,is_flush\n";
  for (const auto& [e, flush] : rows) out << e.product << ',' << e.rank << ',' << (flush ? 1 : 0) << '\n';
  return out.str();
}

void save_rank_tables(const RankTables& tables, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << rank_tables_csv(tables);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

bool is_flush(std::span<const Card, 5> hand) {
  require_distinct(hand);
  return (hand[0].suit_mask() & hand[1].suit_mask() & hand[2].suit_mask() & hand[3].suit_mask() &
          hand[4].suit_mask()) != 0;
}

RankIndex eval5_unchecked(std::span<const Card, 5> hand) {
  const auto& tables = RankTables::instance();
  const std::uint32_t suits = hand[0].code() & hand[1].code() & hand[2].code() & hand[3].code() & hand[4].code();
  const std::uint32_t product = hand[0].prime() * hand[1].prime() * hand[2].prime() * hand[3].prime() * hand[4].prime();
  return (suits >> 8) != 0 ? tables.lookup_flush(product) : tables.lookup_nonflush(product);
}

RankIndex eval5(std::span<const Card, 5> hand) {
  require_distinct(hand);
  return eval5_unchecked(hand);
}

// Highest straight in a rank-offset bitmask as its top offset, or -1. The wheel
// reports 3 (five high).
int best_straight(std::uint32_t mask) {
  for (int top = 12; top >= 4; --top) {
    const std::uint32_t run = 0x1Fu << (top - 4);
    if ((mask & run) == run) return top;
  }
  constexpr std::uint32_t wheel = (1u << 12) | 0xFu;
  return (mask & wheel) == wheel ? 3 : -1;
}

std::uint32_t straight_product(int top) {
  if (top == 3) return product_of({12, 3, 2, 1, 0});
  return product_of({top, top - 1, top - 2, top - 3, top - 4});
}

// Product of the `count` highest offsets in mask.
std::uint32_t top_ranks_product(std::uint32_t mask, int count, std::uint32_t product = 1) {
  for (int r = 12; r >= 0 && count > 0; --r) {
    if ((mask >> r & 1u) != 0) {
      product *= kRankPrimes[static_cast<std::size_t>(r)];
      --count;
    }
  }
  return product;
}

RankIndex eval7_unchecked(std::span<const Card, 7> cards) {
  // Finds the best five directly from rank and suit histograms; agrees with
  // the minimum over all 21 five-card subsets.
  const auto& tables = RankTables::instance();
  std::array<int, 13> rank_count{};
  std::array<std::uint32_t, 4> suit_ranks{};
  std::array<int, 4> suit_count{};
  std::uint32_t present = 0;
  for (const Card& c : cards) {
    const int r = kPrimeToOffset[c.prime()];
    const int s = c.suit();
    ++rank_count[static_cast<std::size_t>(r)];
    ++suit_count[static_cast<std::size_t>(s)];
    suit_ranks[static_cast<std::size_t>(s)] |= 1u << r;
    present |= 1u << r;
  }

  // Five or more cards of one suit rule out quads and full houses.
  for (int s = 0; s < kNumSuits; ++s) {
    if (suit_count[static_cast<std::size_t>(s)] < 5) continue;
    const std::uint32_t mask = suit_ranks[static_cast<std::size_t>(s)];
    const int top = best_straight(mask);
    return tables.lookup_flush(top >= 0 ? straight_product(top) : top_ranks_product(mask, 5));
  }

  int quad = -1;
  std::array<int, 3> trips{};
  std::array<int, 3> pairs{};
  int n_trips = 0;
  int n_pairs = 0;
  for (int r = 12; r >= 0; --r) {
    switch (rank_count[static_cast<std::size_t>(r)]) {
      case 4: quad = r; break;
      case 3: trips[static_cast<std::size_t>(n_trips++)] = r; break;
      case 2: pairs[static_cast<std::size_t>(n_pairs++)] = r; break;
      default: break;
    }
  }
  auto prime = [](int r) { return kRankPrimes[static_cast<std::size_t>(r)]; };

  if (quad >= 0) {
    const std::uint32_t p = prime(quad);
    return tables.lookup_nonflush(top_ranks_product(present & ~(1u << quad), 1, p * p * p * p));
  }
  if (n_trips > 0 && (n_trips > 1 || n_pairs > 0)) {
    const int t = trips[0];
    const int pr = n_trips > 1 ? std::max(trips[1], n_pairs > 0 ? pairs[0] : -1) : pairs[0];
    return tables.lookup_nonflush(prime(t) * prime(t) * prime(t) * prime(pr) * prime(pr));
  }
  if (const int top = best_straight(present); top >= 0) return tables.lookup_nonflush(straight_product(top));
  if (n_trips > 0) {
    const int t = trips[0];
    return tables.lookup_nonflush(top_ranks_product(present & ~(1u << t), 2, prime(t) * prime(t) * prime(t)));
  }
  if (n_pairs >= 2) {
    const int hi = pairs[0];
    const int lo = pairs[1];
    const std::uint32_t base = prime(hi) * prime(hi) * prime(lo) * prime(lo);
    return tables.lookup_nonflush(top_ranks_product(present & ~(1u << hi) & ~(1u << lo), 1, base));
  }
  if (n_pairs == 1) {
    const int pr = pairs[0];
    return tables.lookup_nonflush(top_ranks_product(present & ~(1u << pr), 3, prime(pr) * prime(pr)));
  }
  return tables.lookup_nonflush(top_ranks_product(present, 5));
}

RankIndex eval7(std::span<const Card, 7> cards) {
  require_distinct(cards);
  return eval7_unchecked(cards);
}

}  // namespace halfstreet
