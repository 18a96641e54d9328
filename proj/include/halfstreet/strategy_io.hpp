#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "halfstreet/game.hpp"

namespace halfstreet {

/// Shortest-round-trip text form used for every number written to CSV.
std::string format_number(double value);

class StrategyParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// CSV with header `index,label,probability`, one row per hand, 0-based index.
std::string strategy_csv(const HalfStreetGame& game, const Strategy& strategy);

/// Parses strategy CSV text for `game`; rows must cover every hand exactly once
/// and carry the game's labels. Throws StrategyParseError.
Strategy parse_strategy_csv(std::string_view text, const HalfStreetGame& game, Role role);

/// Reads a strategy file; a missing or unreadable file throws std::runtime_error.
Strategy load_strategy_csv(const std::filesystem::path& path, const HalfStreetGame& game, Role role);

}  // namespace halfstreet
