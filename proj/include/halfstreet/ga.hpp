#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "halfstreet/game.hpp"

namespace halfstreet {

enum class FitnessMode {
  bankroll,               // separate Player/Dealer populations, fitness = final bankroll / B0
  negative_squared_loss,  // one population of two-role participants, fitness = -(chips lost)^2
};

std::string_view fitness_mode_name(FitnessMode mode);
FitnessMode parse_fitness_mode(std::string_view text);

struct GaConfig {
  int population = 5000;     // N
  int generations = 1000;    // T
  int games = 10000;         // R: rounds of random pairings per generation
  double alpha = 0.1;        // surviving fraction
  double mutation = 1e-6;    // pi: flip probability for genes both parents share
  double bankroll = 1e4;     // B0
  FitnessMode fitness = FitnessMode::bankroll;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument unless N is even and positive, T, R >= 1,
  /// 0 < alpha <= 1, 0 <= pi <= 1 and B0 > 0.
  void validate() const;
  /// ceil(alpha * N)
  [[nodiscard]] int elite_count() const;

  static GaConfig vn_defaults();
  static GaConfig flop_defaults();
  static GaConfig vn_desk();
  static GaConfig flop_desk();
};

struct Chromosome {
  Role role = Role::player;
  std::vector<std::uint8_t> genes;  // 1 = bet (player) or call (dealer)
};

struct Agent {
  Chromosome chromosome;
  double bankroll = 0.0;
  double fitness = 0.0;
};

struct Participant {
  Chromosome player;
  Chromosome dealer;
  double player_loss = 0.0;
  double dealer_loss = 0.0;
  double fitness = 0.0;
};

/// Bankroll mode fills `players` and `dealers`; loss mode fills `participants`.
struct Populations {
  FitnessMode mode = FitnessMode::bankroll;
  std::vector<Agent> players;
  std::vector<Agent> dealers;
  std::vector<Participant> participants;
};

Populations init_population(const GaConfig& config, int hands, Rng& rng);

/// Resets bankrolls and losses, plays `config.games` rounds of random pairings
/// and stores each member's fitness.
void play_generation(Populations& pops, const HalfStreetGame& game, const GaConfig& config, Rng& rng);

/// Keeps the ceil(alpha N) fittest members and refills to N with offspring.
Populations select_and_breed(const Populations& pops, const GaConfig& config, Rng& rng);

/// Gene-wise mean over the ceil(alpha N) fittest members.
Strategy population_strategy(const std::vector<Agent>& agents, double alpha);
Strategy population_strategy(const std::vector<Participant>& participants, Role role, double alpha);

/// Mean fitness of the top ceil(alpha N) members of each role. In loss mode a
/// role's fitness is -(chips lost in that role)^2.
struct FitnessPoint {
  int generation = 0;
  double player = 0.0;
  double dealer = 0.0;
};

FitnessPoint top_fitness(const Populations& pops, double alpha, int generation);

struct EvolveResult {
  Strategy player;
  Strategy dealer;
  std::vector<FitnessPoint> series;
};

EvolveResult evolve(const GaConfig& config, const HalfStreetGame& game);

/// CSV: generation,mean_top_alpha_fitness_player,mean_top_alpha_fitness_dealer
std::string fitness_series_csv(const std::vector<FitnessPoint>& series);

}  // namespace halfstreet
