#include "halfstreet/equity.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

namespace halfstreet {

namespace {

using SuitPerm = std::array<int, 4>;

const std::vector<SuitPerm>& suit_permutations() {
  static const std::vector<SuitPerm> perms = [] {
    std::vector<SuitPerm> out;
    SuitPerm p = {0, 1, 2, 3};
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

int permute_index(int card_index, const SuitPerm& perm) {
  return perm[static_cast<std::size_t>(card_index / kNumRanks)] * kNumRanks + card_index % kNumRanks;
}

// Packs sorted 6-bit card indices, lowest first.
std::uint64_t pack_sorted(std::span<int> idx) {
  std::sort(idx.begin(), idx.end());
  std::uint64_t key = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) key |= static_cast<std::uint64_t>(idx[k]) << (6 * k);
  return key;
}

std::vector<int> unpack(std::uint64_t key, int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = static_cast<int>((key >> (6 * k)) & 63u);
  return out;
}

std::uint64_t canonical_board(std::span<const int> board) {
  std::uint64_t best = ~std::uint64_t{0};
  std::array<int, 5> tmp{};
  for (const auto& perm : suit_permutations()) {
    for (std::size_t k = 0; k < board.size(); ++k) tmp[k] = permute_index(board[k], perm);
    best = std::min(best, pack_sorted(std::span<int>(tmp.data(), board.size())));
  }
  return best;
}

std::uint64_t canonical_holdings(const HoleCards& a, const HoleCards& b) {
  std::uint64_t best = ~std::uint64_t{0};
  for (const auto& perm : suit_permutations()) {
    std::array<int, 2> x = {permute_index(a[0].index(), perm), permute_index(a[1].index(), perm)};
    std::array<int, 2> y = {permute_index(b[0].index(), perm), permute_index(b[1].index(), perm)};
    best = std::min(best, pack_sorted(x) | (pack_sorted(y) << 12));
  }
  return best;
}

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(std::span<const int>(idx));
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) return;
    ++idx[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < k; ++q) idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
  }
}

std::uint64_t mask_of(std::span<const int> indices) {
  std::uint64_t m = 0;
  for (int x : indices) m |= std::uint64_t{1} << x;
  return m;
}

std::uint64_t mask_of(const HoleCards& h) {
  return (std::uint64_t{1} << h[0].index()) | (std::uint64_t{1} << h[1].index());
}

void require_board_size(int board_size) {
  if (board_size != 3 && board_size != 5) {
    throw std::invalid_argument("board size must be 3 or 5, got " + std::to_string(board_size));
  }
}

// Rank of the best hand made from a holding plus board cards (given by deck index).
int showdown_rank(const HoleCards& hole, std::span<const int> board) {
  const auto& deck = full_deck();
  if (board.size() == 3) {
    const std::array<Card, 5> cards = {hole[0], hole[1], deck[static_cast<std::size_t>(board[0])],
                                       deck[static_cast<std::size_t>(board[1])],
                                       deck[static_cast<std::size_t>(board[2])]};
    return eval5_unchecked(cards).value;
  }
  std::array<Card, 7> cards = {hole[0], hole[1]};
  for (std::size_t k = 0; k < 5; ++k) cards[k + 2] = deck[static_cast<std::size_t>(board[k])];
  return eval7_unchecked(cards).value;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << v;
  return out.str();
}

nlohmann::json matrix_json(const std::vector<double>& flat) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < kNumClasses; ++i) {
    rows.push_back(std::vector<double>(flat.begin() + i * kNumClasses, flat.begin() + (i + 1) * kNumClasses));
  }
  return rows;
}

std::vector<double> matrix_from_json(const nlohmann::json& rows, const char* name) {
  if (!rows.is_array() || rows.size() != kNumClasses) {
    throw EquityFileError(EquityFileErrc::parse_error, std::string("field '") + name + "' is not a 169x169 array");
  }
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(kNumClasses * kNumClasses));
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != kNumClasses) {
      throw EquityFileError(EquityFileErrc::parse_error, std::string("field '") + name + "' is not a 169x169 array");
    }
    for (const auto& v : row) flat.push_back(v.get<double>());
  }
  return flat;
}

}  // namespace

std::string_view equity_mode_name(EquityMode mode) { return mode == EquityMode::exact ? "exact" : "monte_carlo"; }

EquityMode parse_equity_mode(std::string_view text) {
  if (text == "exact") return EquityMode::exact;
  if (text == "mc" || text == "monte_carlo") return EquityMode::monte_carlo;
  throw std::invalid_argument("unknown equity mode '" + std::string(text) + "'");
}

void EquityParams::validate() const {
  require_board_size(board_size);
  if (mode == EquityMode::monte_carlo && samples == 0) {
    throw std::invalid_argument("Monte Carlo mode needs a positive sample count");
  }
}

MatchupCounts enumerate_matchup(ClassIndex i, ClassIndex j, int board_size) {
  require_board_size(board_size);
  std::map<std::uint64_t, std::uint64_t> reps;
  for (const auto& a : concrete_holdings(i)) {
    for (const auto& b : concrete_holdings(j)) {
      if ((mask_of(a) & mask_of(b)) != 0) continue;
      ++reps[canonical_holdings(a, b)];
    }
  }

  const auto& deck = full_deck();
  MatchupCounts counts;
  for (const auto& [key, weight] : reps) {
    const auto cards = unpack(key, 4);
    const HoleCards a = {deck[static_cast<std::size_t>(cards[0])], deck[static_cast<std::size_t>(cards[1])]};
    const HoleCards b = {deck[static_cast<std::size_t>(cards[2])], deck[static_cast<std::size_t>(cards[3])]};
    const std::uint64_t dead = mask_of(a) | mask_of(b);
    std::vector<int> live;
    for (int c = 0; c < kDeckSize; ++c) {
      if ((dead >> c & 1u) == 0) live.push_back(c);
    }
    MatchupCounts local;
    std::array<int, 5> board{};
    for_each_combination(static_cast<int>(live.size()), board_size, [&](std::span<const int> pick) {
      for (std::size_t k = 0; k < pick.size(); ++k) board[k] = live[static_cast<std::size_t>(pick[k])];
      const std::span<const int> view(board.data(), pick.size());
      const int ra = showdown_rank(a, view);
      const int rb = showdown_rank(b, view);
      if (ra < rb) {
        ++local.wins;
      } else if (ra > rb) {
        ++local.losses;
      } else {
        ++local.draws;
      }
    });
    counts.wins += weight * local.wins;
    counts.losses += weight * local.losses;
    counts.draws += weight * local.draws;
  }
  return counts;
}

Matchup compute_matchup(ClassIndex i, ClassIndex j, const EquityParams& params) {
  params.validate();
  if (params.mode == EquityMode::exact) {
    const MatchupCounts c = enumerate_matchup(i, j, params.board_size);
    const auto total = static_cast<double>(c.total());
    return {static_cast<double>(c.wins) / total, static_cast<double>(c.losses) / total,
            static_cast<double>(c.draws) / total, 0.0};
  }

  std::seed_seq seq{static_cast<std::uint32_t>(params.seed), static_cast<std::uint32_t>(params.seed >> 32),
                    static_cast<std::uint32_t>(i.value), static_cast<std::uint32_t>(j.value)};
  std::mt19937_64 rng(seq);
  const auto hi = concrete_holdings(i);
  const auto hj = concrete_holdings(j);
  std::uniform_int_distribution<std::size_t> pick_i(0, hi.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_j(0, hj.size() - 1);
  std::uniform_int_distribution<int> pick_card(0, kDeckSize - 1);

  MatchupCounts c;
  std::array<int, 5> board{};
  const auto n = static_cast<std::size_t>(params.board_size);
  for (std::uint64_t s = 0; s < params.samples; ++s) {
    const HoleCards* a = nullptr;
    const HoleCards* b = nullptr;
    do {
      a = &hi[pick_i(rng)];
      b = &hj[pick_j(rng)];
    } while ((mask_of(*a) & mask_of(*b)) != 0);
    std::uint64_t used = mask_of(*a) | mask_of(*b);
    for (std::size_t k = 0; k < n; ++k) {
      int card = 0;
      do {
        card = pick_card(rng);
      } while ((used >> card & 1u) != 0);
      used |= std::uint64_t{1} << card;
      board[k] = card;
    }
    const std::span<const int> view(board.data(), n);
    const int ra = showdown_rank(*a, view);
    const int rb = showdown_rank(*b, view);
    if (ra < rb) {
      ++c.wins;
    } else if (ra > rb) {
      ++c.losses;
    } else {
      ++c.draws;
    }
  }
  const auto total = static_cast<double>(c.total());
  Matchup m{static_cast<double>(c.wins) / total, static_cast<double>(c.losses) / total,
            static_cast<double>(c.draws) / total, 0.0};
  m.standard_error = std::sqrt(m.win * (1.0 - m.win) / total);
  return m;
}

MatchupCounts AllMatchupCounts::at(int i, int j) const {
  const auto ij = static_cast<std::size_t>(i * kNumClasses + j);
  const auto ji = static_cast<std::size_t>(j * kNumClasses + i);
  return {wins[ij], wins[ji], draws[ij]};
}

AllMatchupCounts enumerate_all_matchups(int board_size) {
  require_board_size(board_size);
  std::map<std::uint64_t, std::uint64_t> boards;
  for_each_combination(kDeckSize, board_size, [&](std::span<const int> b) { ++boards[canonical_board(b)]; });

  struct Holding {
    HoleCards cards;
    std::uint64_t mask;
    int cls;
  };
  const auto& deck = full_deck();
  std::vector<Holding> holdings;
  holdings.reserve(kNumHoldings);
  for (int a = 0; a < kDeckSize; ++a) {
    for (int b = a + 1; b < kDeckSize; ++b) {
      const HoleCards h = {deck[static_cast<std::size_t>(a)], deck[static_cast<std::size_t>(b)]};
      holdings.push_back({h, mask_of(h), classify(h[0], h[1]).value});
    }
  }

  const auto cells = static_cast<std::size_t>(kNumClasses * kNumClasses);
  AllMatchupCounts out{std::vector<std::uint64_t>(cells), std::vector<std::uint64_t>(cells),
                       std::vector<std::uint64_t>(cells)};

  std::vector<std::uint64_t> live_mask;
  std::vector<int> live_rank;
  std::vector<int> live_cls;
  for (const auto& [key, weight] : boards) {
    const auto board = unpack(key, board_size);
    const std::uint64_t dead = mask_of(board);
    live_mask.clear();
    live_rank.clear();
    live_cls.clear();
    for (const auto& h : holdings) {
      if ((h.mask & dead) != 0) continue;
      live_mask.push_back(h.mask);
      live_rank.push_back(showdown_rank(h.cards, board));
      live_cls.push_back(h.cls);
    }
    const std::size_t n = live_mask.size();
    for (std::size_t x = 0; x < n; ++x) {
      const std::uint64_t mx = live_mask[x];
      const int rx = live_rank[x];
      const auto cx = static_cast<std::size_t>(live_cls[x]);
      for (std::size_t y = x + 1; y < n; ++y) {
        if ((mx & live_mask[y]) != 0) continue;
        const auto cy = static_cast<std::size_t>(live_cls[y]);
        const std::size_t xy = cx * kNumClasses + cy;
        const std::size_t yx = cy * kNumClasses + cx;
        const int ry = live_rank[y];
        out.totals[xy] += weight;
        out.totals[yx] += weight;
        if (rx < ry) {
          out.wins[xy] += weight;
        } else if (ry < rx) {
          out.wins[yx] += weight;
        } else {
          out.draws[xy] += weight;
          out.draws[yx] += weight;
        }
      }
    }
  }
  return out;
}

EquityTables::EquityTables(int board_size_, EquityMode mode_, std::vector<double> w, std::vector<double> d)
    : board_size(board_size_), mode(mode_), w_(std::move(w)), d_(std::move(d)) {
  const auto cells = static_cast<std::size_t>(kNumClasses * kNumClasses);
  if (w_.size() != cells || d_.size() != cells) throw std::invalid_argument("equity tables must be 169x169");
}

double EquityTables::total_win(int i) const {
  const auto& cond = ConditionalTable::instance();
  double sum = 0.0;
  for (int j = 0; j < kNumClasses; ++j) sum += cond.probability(i, j) * win(i, j);
  return sum;
}

double EquityTables::total_draw(int i) const {
  const auto& cond = ConditionalTable::instance();
  double sum = 0.0;
  for (int j = 0; j < kNumClasses; ++j) sum += cond.probability(i, j) * draw(i, j);
  return sum;
}

EquityTables build_equity_tables(const EquityParams& params) {
  params.validate();
  const auto cells = static_cast<std::size_t>(kNumClasses * kNumClasses);
  std::vector<double> w(cells);
  std::vector<double> d(cells);

  if (params.mode == EquityMode::exact) {
    const AllMatchupCounts counts = enumerate_all_matchups(params.board_size);
    for (std::size_t k = 0; k < cells; ++k) {
      const auto total = static_cast<double>(counts.totals[k]);
      w[k] = static_cast<double>(counts.wins[k]) / total;
      d[k] = static_cast<double>(counts.draws[k]) / total;
    }
    return EquityTables(params.board_size, params.mode, std::move(w), std::move(d));
  }

  double worst_error = 0.0;
  for (int i = 0; i < kNumClasses; ++i) {
    for (int j = i; j < kNumClasses; ++j) {
      const Matchup m = compute_matchup(ClassIndex{i}, ClassIndex{j}, params);
      const auto ij = static_cast<std::size_t>(i * kNumClasses + j);
      const auto ji = static_cast<std::size_t>(j * kNumClasses + i);
      if (i == j) {
        w[ij] = 0.5 * (m.win + m.lose);
      } else {
        w[ij] = m.win;
        w[ji] = m.lose;
      }
      d[ij] = m.draw;
      d[ji] = m.draw;
      worst_error = std::max(worst_error, m.standard_error);
    }
  }
  EquityTables tables(params.board_size, params.mode, std::move(w), std::move(d));
  tables.seed = params.seed;
  tables.samples = params.samples;
  tables.standard_error = worst_error;
  return tables;
}

void save_tables(const EquityTables& tables, const std::filesystem::path& path) {
  nlohmann::json doc;
  doc["format_version"] = kEquityFormatVersion;
  doc["board_size"] = tables.board_size;
  doc["mode"] = equity_mode_name(tables.mode);
  doc["seed"] = tables.seed;
  doc["samples"] = tables.samples;
  doc["standard_error"] = tables.standard_error;
  std::vector<double> h(kNumClasses);
  std::vector<double> hcond(static_cast<std::size_t>(kNumClasses * kNumClasses));
  const auto& cond = ConditionalTable::instance();
  for (int i = 0; i < kNumClasses; ++i) {
    h[static_cast<std::size_t>(i)] = class_prior(ClassIndex{i});
    for (int j = 0; j < kNumClasses; ++j) hcond[static_cast<std::size_t>(i * kNumClasses + j)] = cond.probability(i, j);
  }
  doc["h"] = h;
  doc["hcond"] = matrix_json(hcond);
  doc["w"] = matrix_json(tables.w());
  doc["d"] = matrix_json(tables.d());
  doc["checksum"] = hex64(fnv1a64(doc.dump()));

  std::ofstream out(path, std::ios::binary);
  if (!out) throw EquityFileError(EquityFileErrc::io_error, "cannot open " + path.string() + " for writing");
  out << doc.dump(1) << '\n';
  if (!out) throw EquityFileError(EquityFileErrc::io_error, "failed writing " + path.string());
}

EquityTables load_tables(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw EquityFileError(EquityFileErrc::missing_file, "equity file not found: " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw EquityFileError(EquityFileErrc::parse_error, "malformed equity file " + path.string() + ": " + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("format_version")) {
      throw EquityFileError(EquityFileErrc::parse_error, "equity file has no format_version");
    }
    const auto version = doc.at("format_version").get<std::string>();
    if (version != kEquityFormatVersion) {
      throw EquityFileError(EquityFileErrc::version_mismatch,
                            "unsupported equity format '" + version + "', expected " + std::string(kEquityFormatVersion));
    }
    const auto stored = doc.at("checksum").get<std::string>();
    doc.erase("checksum");
    if (hex64(fnv1a64(doc.dump())) != stored) {
      throw EquityFileError(EquityFileErrc::checksum_mismatch, "checksum mismatch in " + path.string());
    }
    EquityTables tables(doc.at("board_size").get<int>(), parse_equity_mode(doc.at("mode").get<std::string>()),
                        matrix_from_json(doc.at("w"), "w"), matrix_from_json(doc.at("d"), "d"));
    tables.seed = doc.at("seed").get<std::uint64_t>();
    tables.samples = doc.at("samples").get<std::uint64_t>();
    tables.standard_error = doc.at("standard_error").get<double>();
    return tables;
  } catch (const nlohmann::json::exception& e) {
    throw EquityFileError(EquityFileErrc::parse_error, "malformed equity file " + path.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw EquityFileError(EquityFileErrc::parse_error, "malformed equity file " + path.string() + ": " + e.what());
  }
}

}  // namespace halfstreet
