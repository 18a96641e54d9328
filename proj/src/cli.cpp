#include "halfstreet/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <memory>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "halfstreet/strategy_io.hpp"
#include "halfstreet/verify.hpp"
#include "halfstreet/vn_analytic.hpp"

namespace halfstreet::cli {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"game", {"type", "ante", "bet", "M", "showdown"}},
      {"cfr", {"iterations", "seed", "checkpoint_every"}},
      {"ga", {"preset", "population", "generations", "games", "alpha", "mutation", "bankroll", "fitness", "seed"}},
      {"equity", {"mode", "board_size", "samples", "seed", "path"}},
      {"output", {"directory"}},
  };
  return s;
}

[[noreturn]] void bad_config(const std::string& what) { throw CliError(kUsage, "config: " + what); }

double number_at(const json& section, const std::string& name, const std::string& key) {
  const json& v = section.at(key);
  if (!v.is_number()) bad_config(name + "." + key + " must be a number");
  return v.get<double>();
}

std::uint64_t count_at(const json& section, const std::string& name, const std::string& key, bool allow_zero) {
  const json& v = section.at(key);
  std::uint64_t n = 0;
  if (v.is_number_unsigned()) {
    n = v.get<std::uint64_t>();
  } else if (v.is_number()) {
    const double d = v.get<double>();
    if (!(d >= 0.0) || d != std::floor(d) || d >= 18446744073709551616.0) {
      bad_config(name + "." + key + " must be a nonnegative integer");
    }
    n = static_cast<std::uint64_t>(d);
  } else if (v.is_string()) {
    try {
      n = parse_count(v.get<std::string>());
    } catch (const CliError&) {
      bad_config(name + "." + key + " must be a nonnegative integer");
    }
  } else {
    bad_config(name + "." + key + " must be a nonnegative integer");
  }
  if (n == 0 && !allow_zero) bad_config(name + "." + key + " must be positive");
  return n;
}

int int_at(const json& section, const std::string& name, const std::string& key) {
  const std::uint64_t n = count_at(section, name, key, true);
  if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) bad_config(name + "." + key + " is too large");
  return static_cast<int>(n);
}

std::string string_at(const json& section, const std::string& name, const std::string& key) {
  const json& v = section.at(key);
  if (!v.is_string()) bad_config(name + "." + key + " must be a string");
  return v.get<std::string>();
}

GaConfig ga_preset(GameKind game, const std::string& preset) {
  if (preset == "full") return game == GameKind::vn ? GaConfig::vn_defaults() : GaConfig::flop_defaults();
  if (preset == "desk") return game == GameKind::vn ? GaConfig::vn_desk() : GaConfig::flop_desk();
  bad_config("ga.preset must be \"full\" or \"desk\"");
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError(kIoError, "cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw CliError(kIoError, "failed writing " + path.string());
}

fs::path prepare_directory(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw CliError(kIoError, "cannot create output directory " + dir);
  return fs::path(dir);
}

std::string read_file(const fs::path& path, int missing_code) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(missing_code, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string game_name(GameKind g) { return g == GameKind::vn ? "vn" : "flop"; }

std::shared_ptr<const EquityTables> load_equity(const RunConfig& cfg) {
  if (!fs::exists(cfg.equity_path)) {
    throw CliError(kMissingArtifact,
                   "equity file " + cfg.equity_path + " not found; build it with `halfstreet equity --out PATH`");
  }
  try {
    return std::make_shared<const EquityTables>(load_tables(cfg.equity_path));
  } catch (const EquityFileError& e) {
    switch (e.code()) {
      case EquityFileErrc::missing_file:
        throw CliError(kMissingArtifact, e.what());
      case EquityFileErrc::io_error:
        throw CliError(kIoError, e.what());
      default:
        throw CliError(kParseError, e.what());
    }
  }
}

std::unique_ptr<HalfStreetGame> make_game(const RunConfig& cfg) {
  if (cfg.game == GameKind::vn) return std::make_unique<VonNeumannGame>(cfg.spec, cfg.hands);
  return std::make_unique<FlopGame>(cfg.spec, load_equity(cfg), cfg.showdown);
}

std::optional<VnSolution> vn_solution(const RunConfig& cfg) {
  if (cfg.game != GameKind::vn) return std::nullopt;
  return solve(cfg.spec);
}

std::string dump(const ordered_json& j) { return j.dump(2) + '\n'; }

/// Flags shared by the subcommands; only those given on the command line
/// override the config document.
struct Flags {
  std::optional<std::string> config;
  std::optional<std::string> game;
  std::optional<double> ante;
  std::optional<double> bet;
  std::optional<int> hands;
  std::optional<std::string> showdown;
  std::optional<std::string> out;
  std::optional<std::string> equity;

  std::optional<std::string> iters;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> checkpoint_every;

  std::optional<std::string> preset;
  std::optional<int> population;
  std::optional<int> generations;
  std::optional<std::string> games;
  std::optional<double> alpha;
  std::optional<double> mutation;
  std::optional<double> bankroll;
  std::optional<std::string> fitness;

  std::optional<int> board;
  std::optional<std::string> mode;
  std::optional<std::string> samples;
};

void add_game_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "Run config document (JSON)");
  sub->add_option("--game", f.game, "vn or flop");
  sub->add_option("--ante", f.ante, "Ante a");
  sub->add_option("--bet", f.bet, "Bet B");
  sub->add_option("-M,--hands", f.hands, "Number of hands (von Neumann)");
  sub->add_option("--showdown", f.showdown, "Flop showdown in simulated play: board or tables");
  sub->add_option("--equity", f.equity, "Equity file (flop)");
  sub->add_option("--out", f.out, "Output directory");
}

template <typename T>
void patch(json& doc, const char* section, const char* key, const std::optional<T>& value) {
  if (value) doc[section][key] = *value;
}

json load_config_doc(const Flags& f) {
  if (!f.config) return json::object();
  const std::string text = read_file(*f.config, kIoError);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CliError(kParseError, "config " + *f.config + ": " + e.what());
  }
  if (!doc.is_object()) throw CliError(kParseError, "config " + *f.config + ": expected an object");
  return doc;
}

RunConfig resolve(const Flags& f, const std::optional<std::string>& fixed_game = std::nullopt) {
  json doc = load_config_doc(f);
  patch(doc, "game", "type", f.game);
  patch(doc, "game", "ante", f.ante);
  patch(doc, "game", "bet", f.bet);
  patch(doc, "game", "M", f.hands);
  patch(doc, "game", "showdown", f.showdown);
  patch(doc, "output", "directory", f.out);
  patch(doc, "equity", "path", f.equity);
  patch(doc, "cfr", "iterations", f.iters);
  patch(doc, "cfr", "checkpoint_every", f.checkpoint_every);
  patch(doc, "ga", "preset", f.preset);
  patch(doc, "ga", "population", f.population);
  patch(doc, "ga", "generations", f.generations);
  patch(doc, "ga", "games", f.games);
  patch(doc, "ga", "alpha", f.alpha);
  patch(doc, "ga", "mutation", f.mutation);
  patch(doc, "ga", "bankroll", f.bankroll);
  patch(doc, "ga", "fitness", f.fitness);
  patch(doc, "equity", "board_size", f.board);
  patch(doc, "equity", "mode", f.mode);
  patch(doc, "equity", "samples", f.samples);
  if (fixed_game) {
    if (doc.contains("game") && doc["game"].contains("type") && doc["game"]["type"] != *fixed_game) {
      throw CliError(kUsage, "this command only supports --game " + *fixed_game);
    }
    doc["game"]["type"] = *fixed_game;
  }
  return config_from_json(doc);
}

int cmd_solve_vn(const Flags& f, std::ostream& out) {
  const RunConfig cfg = resolve(f, "vn");
  const VnSolution sol = solve(cfg.spec);
  const auto [p, q] = discretize(sol, cfg.hands);
  const VonNeumannGame game(cfg.spec, cfg.hands);
  ordered_json summary;
  summary["ante"] = cfg.spec.ante;
  summary["bet"] = cfg.spec.bet;
  summary["M"] = cfg.hands;
  summary["x1"] = sol.x1;
  summary["x2"] = sol.x2;
  summary["c"] = sol.c;
  summary["y0"] = sol.y0;
  summary["value"] = sol.value;
  summary["discrete_value"] = game_value(game, p, q).player;
  summary["discrete_exploitability"] = exploitability(game, p, q);
  out << dump(summary);
  if (f.out || f.config) {
    const fs::path dir = prepare_directory(cfg.output);
    write_file(dir / "config.json", dump(config_to_json(cfg)));
    write_file(dir / "solution.json", dump(summary));
    write_file(dir / "player_strategy.csv", strategy_csv(game, p));
    write_file(dir / "dealer_strategy.csv", strategy_csv(game, q));
  }
  return kOk;
}

int cmd_equity(const Flags& f, const std::vector<std::string>& matchup, std::ostream& out) {
  RunConfig cfg = resolve(f);
  if (f.seed) cfg.equity.seed = *f.seed;
  cfg.equity.validate();
  if (!matchup.empty()) {
    const ClassIndex i = parse_class_label(matchup.at(0));
    const ClassIndex j = parse_class_label(matchup.at(1));
    const Matchup m = compute_matchup(i, j, cfg.equity);
    ordered_json j_out;
    j_out["hand"] = class_label(i);
    j_out["opponent"] = class_label(j);
    j_out["board_size"] = cfg.equity.board_size;
    j_out["mode"] = equity_mode_name(cfg.equity.mode);
    j_out["win"] = m.win;
    j_out["lose"] = m.lose;
    j_out["draw"] = m.draw;
    j_out["standard_error"] = m.standard_error;
    out << dump(j_out);
    return kOk;
  }
  const EquityTables tables = build_equity_tables(cfg.equity);
  try {
    save_tables(tables, cfg.equity_path);
  } catch (const EquityFileError& e) {
    throw CliError(kIoError, e.what());
  }
  ordered_json summary;
  summary["path"] = cfg.equity_path;
  summary["format_version"] = kEquityFormatVersion;
  summary["board_size"] = tables.board_size;
  summary["mode"] = equity_mode_name(tables.mode);
  summary["seed"] = tables.seed;
  summary["samples"] = tables.samples;
  summary["standard_error"] = tables.standard_error;
  out << dump(summary);
  return kOk;
}

void write_strategy_outputs(const fs::path& dir, const HalfStreetGame& game, const Strategy& p, const Strategy& q,
                            const Diagnostics& diag, ordered_json summary, std::ostream& out) {
  write_file(dir / "player_strategy.csv", strategy_csv(game, p));
  write_file(dir / "dealer_strategy.csv", strategy_csv(game, q));
  write_file(dir / "diagnostics.csv", diagnostics_csv(game, p, q, diag));
  const ordered_json extra = diagnostics_summary(diag);
  for (const auto& [key, value] : extra.items()) summary[key] = value;
  write_file(dir / "diagnostics.json", dump(summary));
  out << dump(summary);
}

int cmd_train(const Flags& f, const std::string& algorithm, std::ostream& out) {
  RunConfig cfg = resolve(f);
  if (f.seed) {
    if (algorithm == "cfr") {
      cfg.cfr.seed = *f.seed;
    } else {
      cfg.ga.seed = *f.seed;
    }
  }
  const auto game = make_game(cfg);
  const fs::path dir = prepare_directory(cfg.output);
  write_file(dir / "config.json", dump(config_to_json(cfg)));

  ordered_json summary;
  summary["algorithm"] = algorithm;
  summary["game"] = game_name(cfg.game);
  summary["ante"] = cfg.spec.ante;
  summary["bet"] = cfg.spec.bet;
  summary["M"] = cfg.hands;
  Strategy p;
  Strategy q;
  if (algorithm == "cfr") {
    const TrainReport report = train(*game, cfg.cfr);
    p = report.player;
    q = report.dealer;
    std::string csv = "iteration,exploitability,value_player\n";
    for (const auto& c : report.checkpoints) {
      csv += std::to_string(c.iteration) + ',' + format_number(c.exploitability) + ',' + format_number(c.value_player) +
             '\n';
    }
    write_file(dir / "checkpoints.csv", csv);
    summary["iterations"] = report.iterations;
  } else {
    const EvolveResult result = evolve(cfg.ga, *game);
    p = result.player;
    q = result.dealer;
    write_file(dir / "fitness.csv", fitness_series_csv(result.series));
    summary["generations"] = cfg.ga.generations;
  }
  const Diagnostics diag = diagnose(*game, p, q, vn_solution(cfg));
  write_strategy_outputs(dir, *game, p, q, diag, std::move(summary), out);
  return kOk;
}

int cmd_verify(const Flags& f, const std::string& player_file, const std::string& dealer_file, std::ostream& out) {
  const RunConfig cfg = resolve(f);
  const auto game = make_game(cfg);
  auto load = [&](const std::string& path, Role role) {
    if (!fs::exists(path)) throw CliError(kMissingArtifact, "strategy file " + path + " not found");
    try {
      return load_strategy_csv(path, *game, role);
    } catch (const StrategyParseError& e) {
      throw CliError(kParseError, path + ": " + e.what());
    } catch (const std::runtime_error& e) {
      throw CliError(kIoError, e.what());
    }
  };
  const Strategy p = load(player_file, Role::player);
  const Strategy q = load(dealer_file, Role::dealer);
  const Diagnostics diag = diagnose(*game, p, q, vn_solution(cfg));
  ordered_json summary;
  summary["game"] = game_name(cfg.game);
  summary["ante"] = cfg.spec.ante;
  summary["bet"] = cfg.spec.bet;
  summary["M"] = cfg.hands;
  if (f.out || f.config) {
    const fs::path dir = prepare_directory(cfg.output);
    write_file(dir / "config.json", dump(config_to_json(cfg)));
    write_strategy_outputs(dir, *game, p, q, diag, std::move(summary), out);
  } else {
    const ordered_json extra = diagnostics_summary(diag);
    for (const auto& [key, value] : extra.items()) summary[key] = value;
    out << dump(summary);
  }
  return kOk;
}

}  // namespace

std::uint64_t parse_count(std::string_view text) {
  const std::string s(text);
  auto bad = [&] { return CliError(kUsage, "expected a nonnegative integer count, got '" + s + "'"); };
  if (s.empty()) throw bad();
  if (s.find_first_not_of("0123456789") == std::string::npos) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw bad();
    }
  }
  std::size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(s, &used);
  } catch (const std::exception&) {
    throw bad();
  }
  if (used != s.size() || !(d >= 0.0) || d != std::floor(d) || d >= 18446744073709551616.0) throw bad();
  return static_cast<std::uint64_t>(d);
}

RunConfig config_from_json(const json& doc) {
  if (!doc.is_object()) bad_config("document must be an object");
  for (const auto& [name, section] : doc.items()) {
    const auto it = schema().find(name);
    if (it == schema().end()) bad_config("unknown section '" + name + "'");
    if (!section.is_object()) bad_config("section '" + name + "' must be an object");
    for (const auto& [key, value] : section.items()) {
      if (it->second.count(key) == 0) bad_config("unknown key '" + name + "." + key + "'");
    }
  }
  const json empty = json::object();
  auto section = [&](const char* name) -> const json& { return doc.contains(name) ? doc.at(name) : empty; };

  RunConfig cfg;
  const json& game = section("game");
  if (game.contains("type")) {
    const std::string type = string_at(game, "game", "type");
    if (type == "vn") {
      cfg.game = GameKind::vn;
    } else if (type == "flop") {
      cfg.game = GameKind::flop;
    } else {
      bad_config("game.type must be \"vn\" or \"flop\"");
    }
  }
  if (game.contains("ante")) cfg.spec.ante = number_at(game, "game", "ante");
  if (game.contains("bet")) cfg.spec.bet = number_at(game, "game", "bet");
  if (cfg.game == GameKind::flop) {
    cfg.hands = kNumClasses;
    if (game.contains("M") && int_at(game, "game", "M") != kNumClasses) bad_config("game.M must be 169 for flop");
  } else if (game.contains("M")) {
    cfg.hands = int_at(game, "game", "M");
  }
  if (game.contains("showdown")) {
    const std::string sd = string_at(game, "game", "showdown");
    if (sd == "board") {
      cfg.showdown = FlopShowdown::board;
    } else if (sd == "tables") {
      cfg.showdown = FlopShowdown::tables;
    } else {
      bad_config("game.showdown must be \"board\" or \"tables\"");
    }
  }

  const json& cfr = section("cfr");
  if (cfr.contains("iterations")) cfg.cfr.iterations = count_at(cfr, "cfr", "iterations", false);
  if (cfr.contains("seed")) cfg.cfr.seed = count_at(cfr, "cfr", "seed", true);
  if (cfr.contains("checkpoint_every")) cfg.cfr.checkpoint_every = count_at(cfr, "cfr", "checkpoint_every", true);

  const json& ga = section("ga");
  if (ga.contains("preset")) cfg.ga_preset = string_at(ga, "ga", "preset");
  cfg.ga = ga_preset(cfg.game, cfg.ga_preset);
  if (ga.contains("population")) cfg.ga.population = int_at(ga, "ga", "population");
  if (ga.contains("generations")) cfg.ga.generations = int_at(ga, "ga", "generations");
  if (ga.contains("games")) cfg.ga.games = int_at(ga, "ga", "games");
  if (ga.contains("alpha")) cfg.ga.alpha = number_at(ga, "ga", "alpha");
  if (ga.contains("mutation")) cfg.ga.mutation = number_at(ga, "ga", "mutation");
  if (ga.contains("bankroll")) cfg.ga.bankroll = number_at(ga, "ga", "bankroll");
  if (ga.contains("fitness")) {
    try {
      cfg.ga.fitness = parse_fitness_mode(string_at(ga, "ga", "fitness"));
    } catch (const std::invalid_argument& e) {
      bad_config(e.what());
    }
  }
  if (ga.contains("seed")) cfg.ga.seed = count_at(ga, "ga", "seed", true);

  const json& eq = section("equity");
  if (eq.contains("mode")) {
    try {
      cfg.equity.mode = parse_equity_mode(string_at(eq, "equity", "mode"));
    } catch (const std::invalid_argument& e) {
      bad_config(e.what());
    }
  }
  if (eq.contains("board_size")) cfg.equity.board_size = int_at(eq, "equity", "board_size");
  if (eq.contains("samples")) cfg.equity.samples = count_at(eq, "equity", "samples", false);
  if (eq.contains("seed")) cfg.equity.seed = count_at(eq, "equity", "seed", true);
  if (eq.contains("path")) cfg.equity_path = string_at(eq, "equity", "path");

  const json& output = section("output");
  if (output.contains("directory")) cfg.output = string_at(output, "output", "directory");

  try {
    cfg.spec.validate();
    if (cfg.hands < 2) throw std::invalid_argument("game.M must be at least 2");
    cfg.cfr.validate();
    cfg.ga.validate();
    cfg.equity.validate();
  } catch (const std::invalid_argument& e) {
    bad_config(e.what());
  }
  return cfg;
}

ordered_json config_to_json(const RunConfig& cfg) {
  ordered_json j;
  j["game"]["type"] = game_name(cfg.game);
  j["game"]["ante"] = cfg.spec.ante;
  j["game"]["bet"] = cfg.spec.bet;
  j["game"]["M"] = cfg.hands;
  j["game"]["showdown"] = cfg.showdown == FlopShowdown::board ? "board" : "tables";
  j["cfr"]["iterations"] = cfg.cfr.iterations;
  j["cfr"]["seed"] = cfg.cfr.seed;
  j["cfr"]["checkpoint_every"] = cfg.cfr.checkpoint_every;
  j["ga"]["preset"] = cfg.ga_preset;
  j["ga"]["population"] = cfg.ga.population;
  j["ga"]["generations"] = cfg.ga.generations;
  j["ga"]["games"] = cfg.ga.games;
  j["ga"]["alpha"] = cfg.ga.alpha;
  j["ga"]["mutation"] = cfg.ga.mutation;
  j["ga"]["bankroll"] = cfg.ga.bankroll;
  j["ga"]["fitness"] = fitness_mode_name(cfg.ga.fitness);
  j["ga"]["seed"] = cfg.ga.seed;
  j["equity"]["mode"] = equity_mode_name(cfg.equity.mode);
  j["equity"]["board_size"] = cfg.equity.board_size;
  j["equity"]["samples"] = cfg.equity.samples;
  j["equity"]["seed"] = cfg.equity.seed;
  j["equity"]["path"] = cfg.equity_path;
  j["output"]["directory"] = cfg.output;
  return j;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solver workbench for half-street poker: von Neumann and flop poker", "halfstreet"};
  app.require_subcommand(1);
  Flags f;

  auto* solve_vn = app.add_subcommand("solve-vn", "Closed-form von Neumann equilibrium and its discretisation");
  add_game_flags(solve_vn, f);

  auto* equity = app.add_subcommand("equity", "Build a flop equity file, or print one class matchup");
  std::vector<std::string> matchup;
  equity->add_option("--config", f.config, "Run config document (JSON)");
  equity->add_option("--board", f.board, "Board size: 3 or 5");
  equity->add_option("--mode", f.mode, "exact or mc");
  equity->add_option("--samples", f.samples, "Monte Carlo samples per class pair");
  equity->add_option("--seed", f.seed, "Monte Carlo seed");
  equity->add_option("--out", f.equity, "Equity file to write");
  equity->add_option("--matchup", matchup, "Print one matchup instead, e.g. --matchup AKo JTs")->expected(2);

  auto* train_cmd = app.add_subcommand("train", "Train strategies with CFR or the genetic algorithm");
  std::string algorithm;
  train_cmd->add_option("algorithm", algorithm, "cfr or ga")->required()->check(CLI::IsMember({"cfr", "ga"}));
  add_game_flags(train_cmd, f);
  train_cmd->add_option("--iters,--iterations", f.iters, "CFR rounds (scientific notation accepted)");
  train_cmd->add_option("--seed", f.seed, "Seed of the chosen algorithm");
  train_cmd->add_option("--checkpoint-every", f.checkpoint_every, "CFR checkpoint interval (0: T/20)");
  train_cmd->add_option("--preset", f.preset, "GA hyperparameter preset: full or desk");
  train_cmd->add_option("--population", f.population, "GA population size N");
  train_cmd->add_option("--generations", f.generations, "GA generations T");
  train_cmd->add_option("--games", f.games, "GA rounds of pairings per generation R");
  train_cmd->add_option("--alpha", f.alpha, "GA surviving fraction");
  train_cmd->add_option("--mutation", f.mutation, "GA mutation probability");
  train_cmd->add_option("--bankroll", f.bankroll, "GA starting bankroll B0");
  train_cmd->add_option("--fitness", f.fitness, "GA fitness: bankroll or negative_squared_loss");

  auto* verify_cmd = app.add_subcommand("verify", "Equilibrium diagnostics for a pair of strategy files");
  std::string player_file;
  std::string dealer_file;
  add_game_flags(verify_cmd, f);
  verify_cmd->add_option("--player", player_file, "Player strategy CSV")->required();
  verify_cmd->add_option("--dealer", dealer_file, "Dealer strategy CSV")->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (solve_vn->parsed()) return cmd_solve_vn(f, out);
    if (equity->parsed()) return cmd_equity(f, matchup, out);
    if (train_cmd->parsed()) return cmd_train(f, algorithm, out);
    if (verify_cmd->parsed()) return cmd_verify(f, player_file, dealer_file, out);
  } catch (const CliError& e) {
    err << "error: " << e.what() << "\n";
    return e.code();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kUsage;
}

}  // namespace halfstreet::cli
