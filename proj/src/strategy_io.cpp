#include "halfstreet/strategy_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace halfstreet {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string strategy_csv(const HalfStreetGame& game, const Strategy& strategy) {
  strategy.validate(game.num_hands());
  std::string out = "index,label,probability\n";
  for (int k = 0; k < game.num_hands(); ++k) {
    out += std::to_string(k) + ',' + game.hand_label(k) + ',' + format_number(strategy[k]) + '\n';
  }
  return out;
}

Strategy parse_strategy_csv(std::string_view text, const HalfStreetGame& game, Role role) {
  const int hands = game.num_hands();
  Strategy s{role, std::vector<double>(static_cast<std::size_t>(hands))};
  std::vector<bool> seen(static_cast<std::size_t>(hands), false);
  int line_no = 0;
  int rows = 0;
  bool header = false;
  for (std::string_view rest = text; !rest.empty();) {
    const auto nl = rest.find('\n');
    const std::string_view line = trim(rest.substr(0, nl));
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    const auto where = "line " + std::to_string(line_no) + ": ";
    if (!header) {
      if (line != "index,label,probability") throw StrategyParseError(where + "expected header index,label,probability");
      header = true;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 3) throw StrategyParseError(where + "expected 3 fields");
    int index = -1;
    const auto idx = trim(fields[0]);
    if (auto r = std::from_chars(idx.data(), idx.data() + idx.size(), index); r.ec != std::errc{} ||
                                                                             r.ptr != idx.data() + idx.size()) {
      throw StrategyParseError(where + "bad index");
    }
    if (index < 0 || index >= hands) throw StrategyParseError(where + "index out of range");
    if (seen[static_cast<std::size_t>(index)]) throw StrategyParseError(where + "duplicate index");
    if (trim(fields[1]) != game.hand_label(index)) throw StrategyParseError(where + "label does not match index");
    double prob = 0.0;
    const auto pv = trim(fields[2]);
    if (auto r = std::from_chars(pv.data(), pv.data() + pv.size(), prob); r.ec != std::errc{} ||
                                                                         r.ptr != pv.data() + pv.size()) {
      throw StrategyParseError(where + "bad probability");
    }
    if (!(prob >= 0.0 && prob <= 1.0)) throw StrategyParseError(where + "probability outside [0,1]");
    seen[static_cast<std::size_t>(index)] = true;
    s.probs[static_cast<std::size_t>(index)] = prob;
    ++rows;
  }
  if (!header) throw StrategyParseError("missing header");
  if (rows != hands) {
    throw StrategyParseError("expected " + std::to_string(hands) + " rows, found " + std::to_string(rows));
  }
  return s;
}

Strategy load_strategy_csv(const std::filesystem::path& path, const HalfStreetGame& game, Role role) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read strategy file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_strategy_csv(buf.str(), game, role);
}

}  // namespace halfstreet
