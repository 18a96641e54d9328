#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "halfstreet/abstraction.hpp"

namespace halfstreet {

enum class EquityMode { exact, monte_carlo };

std::string_view equity_mode_name(EquityMode mode);
EquityMode parse_equity_mode(std::string_view text);

struct EquityParams {
  int board_size = 3;
  EquityMode mode = EquityMode::exact;
  std::uint64_t samples = 1'000'000;  // per unordered class pair, Monte Carlo only
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument for a board size other than 3/5 or zero samples.
  void validate() const;
};

/// Outcome counts over ordered (holder of i, holder of j) deals.
struct MatchupCounts {
  std::uint64_t wins = 0;
  std::uint64_t losses = 0;
  std::uint64_t draws = 0;

  [[nodiscard]] std::uint64_t total() const { return wins + losses + draws; }
  bool operator==(const MatchupCounts&) const = default;
};

/// Showdown probabilities for the holder of class i against class j.
struct Matchup {
  double win = 0.0;   // w(i|j)
  double lose = 0.0;  // w(j|i)
  double draw = 0.0;  // d(i|j)
  double standard_error = 0.0;
};

/// Exhaustive count over every non-conflicting concrete holding pair of the two
/// classes and every board, with holding pairs reduced by suit symmetry.
MatchupCounts enumerate_matchup(ClassIndex i, ClassIndex j, int board_size);

Matchup compute_matchup(ClassIndex i, ClassIndex j, const EquityParams& params);

/// Ordered-pair outcome counts for every class pair, accumulated board by board
/// over suit-canonical boards. Entry (i, j) is comparable to enumerate_matchup(i, j).
struct AllMatchupCounts {
  std::vector<std::uint64_t> wins;
  std::vector<std::uint64_t> draws;
  std::vector<std::uint64_t> totals;

  [[nodiscard]] MatchupCounts at(int i, int j) const;
};

AllMatchupCounts enumerate_all_matchups(int board_size);

/// w(i|j) and d(i|j) for all 169x169 class pairs, plus generation metadata.
class EquityTables {
 public:
  EquityTables() = default;
  EquityTables(int board_size, EquityMode mode, std::vector<double> w, std::vector<double> d);

  int board_size = 3;
  EquityMode mode = EquityMode::exact;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  double standard_error = 0.0;

  [[nodiscard]] double win(int i, int j) const { return w_[index(i, j)]; }
  [[nodiscard]] double draw(int i, int j) const { return d_[index(i, j)]; }
  [[nodiscard]] const std::vector<double>& w() const { return w_; }
  [[nodiscard]] const std::vector<double>& d() const { return d_; }

  /// W(i) = sum_j h(j|i) w(i|j)
  [[nodiscard]] double total_win(int i) const;
  /// D(i) = sum_j h(j|i) d(i|j)
  [[nodiscard]] double total_draw(int i) const;

  bool operator==(const EquityTables&) const = default;

 private:
  static std::size_t index(int i, int j) { return static_cast<std::size_t>(i * kNumClasses + j); }
  std::vector<double> w_;
  std::vector<double> d_;
};

EquityTables build_equity_tables(const EquityParams& params);

inline constexpr std::string_view kEquityFormatVersion = "flop-equity/1";

enum class EquityFileErrc { missing_file = 1, parse_error, version_mismatch, checksum_mismatch, io_error };

class EquityFileError : public std::runtime_error {
 public:
  EquityFileError(EquityFileErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  [[nodiscard]] EquityFileErrc code() const { return code_; }

 private:
  EquityFileErrc code_;
};

void save_tables(const EquityTables& tables, const std::filesystem::path& path);
EquityTables load_tables(const std::filesystem::path& path);

}  // namespace halfstreet
