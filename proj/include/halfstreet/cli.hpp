#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "halfstreet/cfr.hpp"
#include "halfstreet/equity.hpp"
#include "halfstreet/ga.hpp"
#include "halfstreet/game.hpp"

namespace halfstreet::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kIoError = 3,
  kMissingArtifact = 4,
  kParseError = 5,
};

/// An error that maps to a process exit code.
class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  [[nodiscard]] int code() const { return code_; }

 private:
  int code_;
};

enum class GameKind { vn, flop };

/// Every setting of a run, with defaults resolved. Serialises to the config
/// document echoed into each output directory.
struct RunConfig {
  GameKind game = GameKind::vn;
  GameSpec spec;
  int hands = 100;  // 169 for flop
  FlopShowdown showdown = FlopShowdown::board;

  CfrConfig cfr;

  std::string ga_preset = "full";  // "full" or "desk"
  GaConfig ga = GaConfig::vn_defaults();

  EquityParams equity;
  std::string equity_path = "flop_equity.json";

  std::string output = "out";
};

/// Builds a RunConfig from a (possibly partial) config document. Unknown
/// sections or keys and ill-typed values throw CliError(kUsage).
RunConfig config_from_json(const nlohmann::json& doc);
nlohmann::ordered_json config_to_json(const RunConfig& config);

/// Parses a positive count such as "10000000", "1e7" or "2.5e6".
std::uint64_t parse_count(std::string_view text);

/// Runs one command; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace halfstreet::cli
