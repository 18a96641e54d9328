#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "halfstreet/equity.hpp"

namespace halfstreet {
namespace {

namespace fs = std::filesystem;

ClassIndex cls(const char* label) { return parse_class_label(label); }

const EquityTables& exact_flop() {
  static const EquityTables t = build_equity_tables(EquityParams{});
  return t;
}

/// Every concrete holding pair of the two classes against every 3-card board, no symmetry reduction.
MatchupCounts brute_force_flop(ClassIndex i, ClassIndex j) {
  MatchupCounts c;
  const auto& deck = full_deck();
  for (const auto& hi : concrete_holdings(i)) {
    for (const auto& hj : concrete_holdings(j)) {
      if (hi[0] == hj[0] || hi[0] == hj[1] || hi[1] == hj[0] || hi[1] == hj[1]) continue;
      auto used = [&](const Card& x) { return x == hi[0] || x == hi[1] || x == hj[0] || x == hj[1]; };
      for (int a = 0; a < kDeckSize; ++a) {
        if (used(deck[a])) continue;
        for (int b = a + 1; b < kDeckSize; ++b) {
          if (used(deck[b])) continue;
          for (int d = b + 1; d < kDeckSize; ++d) {
            if (used(deck[d])) continue;
            const std::array<Card, 5> mine = {hi[0], hi[1], deck[a], deck[b], deck[d]};
            const std::array<Card, 5> theirs = {hj[0], hj[1], deck[a], deck[b], deck[d]};
            const int x = eval5(mine).value;
            const int y = eval5(theirs).value;
            if (x < y) {
              ++c.wins;
            } else if (x > y) {
              ++c.losses;
            } else {
              ++c.draws;
            }
          }
        }
      }
    }
  }
  return c;
}

std::string read_all(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_all(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

fs::path temp_path(const std::string& name) { return fs::temp_directory_path() / ("halfstreet_equity_" + name); }

TEST(EquityParams, Validation) {
  EquityParams p;
  EXPECT_NO_THROW(p.validate());
  p.board_size = 4;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p.board_size = 5;
  p.mode = EquityMode::monte_carlo;
  p.samples = 0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  EXPECT_EQ(parse_equity_mode("mc"), EquityMode::monte_carlo);
  EXPECT_EQ(parse_equity_mode("exact"), EquityMode::exact);
  EXPECT_THROW((void)parse_equity_mode("fast"), std::invalid_argument);
}

TEST(ExactMatchup, AcesVersusKingsMatchesBruteForce) {
  const MatchupCounts oracle = brute_force_flop(cls("AA"), cls("KK"));
  EXPECT_EQ(oracle.total(), 36u * 17296u);
  EXPECT_EQ(enumerate_matchup(cls("AA"), cls("KK"), 3), oracle);
}

TEST(ExactMatchup, SuitedAgainstOffsuitMatchesBruteForce) {
  for (const auto& [a, b] : {std::pair{"AKs", "QJo"}, std::pair{"T9s", "T9o"}, std::pair{"72o", "22"}}) {
    EXPECT_EQ(enumerate_matchup(cls(a), cls(b), 3), brute_force_flop(cls(a), cls(b))) << a << " vs " << b;
  }
}

TEST(ExactMatchup, IdenticalClassesAreSymmetric) {
  const Matchup m = compute_matchup(cls("AA"), cls("AA"), EquityParams{});
  EXPECT_DOUBLE_EQ(m.win, m.lose);
  EXPECT_NEAR(m.win + m.lose + m.draw, 1.0, 1e-15);
}

TEST(ExactTables, BoardAndPairRoutesAgree) {
  const AllMatchupCounts all = enumerate_all_matchups(3);
  for (const auto& [a, b] : {std::pair{"AA", "KK"}, std::pair{"AKo", "JTs"}, std::pair{"22", "AKo"},
                             std::pair{"54s", "54s"}, std::pair{"Q8o", "93s"}}) {
    EXPECT_EQ(all.at(cls(a).value, cls(b).value), enumerate_matchup(cls(a), cls(b), 3)) << a << " vs " << b;
  }
}

TEST(ExactTables, PartitionAndSymmetry) {
  const EquityTables& t = exact_flop();
  EXPECT_EQ(t.board_size, 3);
  EXPECT_EQ(t.mode, EquityMode::exact);
  for (int i = 0; i < kNumClasses; ++i) {
    for (int j = 0; j < kNumClasses; ++j) {
      ASSERT_NEAR(t.win(i, j) + t.win(j, i) + t.draw(i, j), 1.0, 1e-12);
      ASSERT_EQ(t.draw(i, j), t.draw(j, i));
      ASSERT_GE(t.win(i, j), 0.0);
      ASSERT_LE(t.win(i, j), 1.0);
      ASSERT_GE(t.draw(i, j), 0.0);
    }
  }
  const auto& cond = ConditionalTable::instance();
  for (int i = 0; i < kNumClasses; ++i) {
    double losing = 0.0;
    for (int j = 0; j < kNumClasses; ++j) losing += cond.probability(i, j) * t.win(j, i);
    EXPECT_NEAR(t.total_win(i) + losing + t.total_draw(i), 1.0, 1e-12);
  }
}

TEST(MonteCarlo, WithinThreeStandardErrorsOfExact) {
  const EquityTables& exact = exact_flop();
  EquityParams p;
  p.mode = EquityMode::monte_carlo;
  p.samples = 1'000'000;
  p.seed = 2024;
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(0, kNumClasses - 1);
  for (int k = 0; k < 50; ++k) {
    const int i = pick(rng);
    const int j = pick(rng);
    const Matchup m = compute_matchup(ClassIndex{i}, ClassIndex{j}, p);
    EXPECT_GT(m.standard_error, 0.0);
    EXPECT_LE(std::abs(m.win - exact.win(i, j)), 3.0 * m.standard_error)
        << class_label(ClassIndex{i}) << " vs " << class_label(ClassIndex{j});
  }
}

TEST(MonteCarlo, DeterministicPerSeed) {
  EquityParams p;
  p.mode = EquityMode::monte_carlo;
  p.samples = 20000;
  p.seed = 42;
  const Matchup a = compute_matchup(cls("AKo"), cls("JTs"), p);
  const Matchup b = compute_matchup(cls("AKo"), cls("JTs"), p);
  EXPECT_EQ(a.win, b.win);
  EXPECT_EQ(a.draw, b.draw);
  p.seed = 43;
  const Matchup c = compute_matchup(cls("AKo"), cls("JTs"), p);
  EXPECT_NE(a.win, c.win);
}

TEST(MonteCarlo, FullTablePartition) {
  EquityParams p;
  p.mode = EquityMode::monte_carlo;
  p.samples = 200;
  p.seed = 9;
  const EquityTables t = build_equity_tables(p);
  EXPECT_EQ(t.samples, 200u);
  EXPECT_EQ(t.seed, 9u);
  EXPECT_GT(t.standard_error, 0.0);
  for (int i = 0; i < kNumClasses; ++i) {
    for (int j = 0; j < kNumClasses; ++j) {
      ASSERT_NEAR(t.win(i, j) + t.win(j, i) + t.draw(i, j), 1.0, 1e-12);
      ASSERT_EQ(t.draw(i, j), t.draw(j, i));
    }
  }
  EXPECT_EQ(build_equity_tables(p), t);
}

TEST(EquityFile, RoundTripIsExact) {
  const fs::path path = temp_path("roundtrip.json");
  save_tables(exact_flop(), path);
  EXPECT_EQ(load_tables(path), exact_flop());
  const std::string text = read_all(path);
  EXPECT_NE(text.find("\"format_version\": \"flop-equity/1\""), std::string::npos);
  EXPECT_NE(text.find("\"checksum\""), std::string::npos);
  save_tables(load_tables(path), temp_path("roundtrip2.json"));
  EXPECT_EQ(read_all(temp_path("roundtrip2.json")), text);
}

TEST(EquityFile, DistinctErrors) {
  auto code_of = [](const fs::path& p) {
    try {
      (void)load_tables(p);
    } catch (const EquityFileError& e) {
      return e.code();
    }
    return EquityFileErrc{};
  };
  const fs::path good = temp_path("errors.json");
  save_tables(exact_flop(), good);
  const std::string text = read_all(good);

  EXPECT_EQ(code_of(temp_path("does_not_exist.json")), EquityFileErrc::missing_file);

  std::string corrupt = text;
  const auto pos = corrupt.find("\"w\"");
  const auto digit = corrupt.find_first_of("123456789", pos + 8);
  corrupt[digit] = corrupt[digit] == '1' ? '2' : '1';
  write_all(temp_path("corrupt.json"), corrupt);
  EXPECT_EQ(code_of(temp_path("corrupt.json")), EquityFileErrc::checksum_mismatch);

  std::string version = text;
  version.replace(version.find("flop-equity/1"), 13, "flop-equity/9");
  write_all(temp_path("version.json"), version);
  EXPECT_EQ(code_of(temp_path("version.json")), EquityFileErrc::version_mismatch);

  write_all(temp_path("garbage.json"), text.substr(0, text.size() / 2));
  EXPECT_EQ(code_of(temp_path("garbage.json")), EquityFileErrc::parse_error);
}

}  // namespace
}  // namespace halfstreet
