#include "halfstreet/ga.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "halfstreet/strategy_io.hpp"

namespace halfstreet {

std::string_view fitness_mode_name(FitnessMode mode) {
  return mode == FitnessMode::bankroll ? "bankroll" : "negative_squared_loss";
}

FitnessMode parse_fitness_mode(std::string_view text) {
  if (text == "bankroll") return FitnessMode::bankroll;
  if (text == "negative_squared_loss") return FitnessMode::negative_squared_loss;
  throw std::invalid_argument("unknown fitness mode '" + std::string(text) + "'");
}

namespace {

int elite_size(double alpha, std::size_t n) {
  // The small offset keeps products such as 0.3 * 2000 from rounding up a whole member.
  const auto k = static_cast<int>(std::ceil(alpha * static_cast<double>(n) - 1e-9));
  return std::clamp(k, 1, static_cast<int>(n));
}

/// Member indices by fitness, best first; equal fitness keeps population order.
template <typename Member>
std::vector<std::size_t> ranking(const std::vector<Member>& members) {
  std::vector<std::size_t> order(members.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return members[a].fitness > members[b].fitness; });
  return order;
}

Chromosome random_chromosome(Role role, int hands, Rng& rng) {
  Chromosome c{role, std::vector<std::uint8_t>(static_cast<std::size_t>(hands))};
  std::bernoulli_distribution coin(0.5);
  for (auto& g : c.genes) g = coin(rng) ? 1 : 0;
  return c;
}

Chromosome crossover(const Chromosome& a, const Chromosome& b, double weight_a, double mutation, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Chromosome child{a.role, std::vector<std::uint8_t>(a.genes.size())};
  for (std::size_t g = 0; g < a.genes.size(); ++g) {
    const double u = unit(rng);
    if (a.genes[g] == b.genes[g]) {
      child.genes[g] = u < mutation ? static_cast<std::uint8_t>((1 + a.genes[g]) % 2) : a.genes[g];
    } else {
      child.genes[g] = u < weight_a ? a.genes[g] : b.genes[g];
    }
  }
  return child;
}

/// Draws two parents; distinct whenever at least two candidates can be drawn.
template <typename Pick>
std::pair<std::size_t, std::size_t> pick_parents(std::size_t candidates, Pick&& pick) {
  const std::size_t first = pick();
  std::size_t second = pick();
  while (candidates > 1 && second == first) second = pick();
  return {first, second};
}

std::vector<Agent> breed_agents(const std::vector<Agent>& agents, const GaConfig& config, Rng& rng) {
  const auto order = ranking(agents);
  const auto elite = static_cast<std::size_t>(config.elite_count());
  std::vector<Agent> next;
  next.reserve(agents.size());
  std::vector<double> weights;
  for (std::size_t r = 0; r < elite; ++r) {
    next.push_back(agents[order[r]]);
    weights.push_back(std::max(agents[order[r]].fitness, 0.0));
  }
  if (std::accumulate(weights.begin(), weights.end(), 0.0) <= 0.0) std::fill(weights.begin(), weights.end(), 1.0);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  const auto candidates =
      static_cast<std::size_t>(std::count_if(weights.begin(), weights.end(), [](double w) { return w > 0.0; }));
  while (next.size() < agents.size()) {
    const auto [a, b] = pick_parents(candidates, [&] { return pick(rng); });
    const double wa = weights[a] / (weights[a] + weights[b]);
    next.push_back(Agent{crossover(next[a].chromosome, next[b].chromosome, wa, config.mutation, rng), 0.0, 0.0});
  }
  return next;
}

std::vector<Participant> breed_participants(const std::vector<Participant>& members, const GaConfig& config,
                                            Rng& rng) {
  const auto order = ranking(members);
  const auto elite = static_cast<std::size_t>(config.elite_count());
  std::vector<Participant> next;
  next.reserve(members.size());
  for (std::size_t r = 0; r < elite; ++r) next.push_back(members[order[r]]);
  std::uniform_int_distribution<std::size_t> pick(0, elite - 1);
  while (next.size() < members.size()) {
    const auto [a, b] = pick_parents(elite, [&] { return pick(rng); });
    Participant child;
    child.player = crossover(next[a].player, next[b].player, 0.5, config.mutation, rng);
    child.dealer = crossover(next[a].dealer, next[b].dealer, 0.5, config.mutation, rng);
    next.push_back(std::move(child));
  }
  return next;
}

Strategy gene_mean(Role role, const std::vector<const Chromosome*>& chromosomes) {
  const std::size_t m = chromosomes.front()->genes.size();
  Strategy s{role, std::vector<double>(m, 0.0)};
  for (const Chromosome* c : chromosomes) {
    for (std::size_t g = 0; g < m; ++g) s.probs[g] += c->genes[g];
  }
  for (double& p : s.probs) p /= static_cast<double>(chromosomes.size());
  return s;
}

double top_mean(std::vector<double> values, double alpha) {
  const auto k = static_cast<std::size_t>(elite_size(alpha, values.size()));
  std::partial_sort(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(k), values.end(), std::greater<>());
  return std::accumulate(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(k), 0.0) /
         static_cast<double>(k);
}

}  // namespace

void GaConfig::validate() const {
  if (population < 2 || population % 2 != 0) throw std::invalid_argument("ga population must be even and positive");
  if (generations < 1) throw std::invalid_argument("ga generations must be at least 1");
  if (games < 1) throw std::invalid_argument("ga games per generation must be at least 1");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("ga alpha must lie in (0, 1]");
  if (!(mutation >= 0.0 && mutation <= 1.0)) throw std::invalid_argument("ga mutation must lie in [0, 1]");
  if (!(bankroll > 0.0)) throw std::invalid_argument("ga bankroll must be positive");
}

int GaConfig::elite_count() const { return elite_size(alpha, static_cast<std::size_t>(population)); }

GaConfig GaConfig::vn_defaults() { return GaConfig{5000, 1000, 10000, 0.1, 1e-6, 1e4, FitnessMode::bankroll, 1}; }

GaConfig GaConfig::flop_defaults() {
  return GaConfig{2000, 1000, 10000, 0.3, 1e-4, 1e4, FitnessMode::negative_squared_loss, 1};
}

GaConfig GaConfig::vn_desk() { return GaConfig{1000, 200, 2000, 0.1, 1e-6, 1e4, FitnessMode::bankroll, 1}; }

GaConfig GaConfig::flop_desk() {
  return GaConfig{400, 200, 500, 0.3, 1e-4, 1e4, FitnessMode::negative_squared_loss, 1};
}

Populations init_population(const GaConfig& config, int hands, Rng& rng) {
  config.validate();
  if (hands < 1) throw std::invalid_argument("ga needs at least one hand");
  Populations pops;
  pops.mode = config.fitness;
  const auto n = static_cast<std::size_t>(config.population);
  if (config.fitness == FitnessMode::bankroll) {
    for (std::size_t k = 0; k < n; ++k) pops.players.push_back({random_chromosome(Role::player, hands, rng), 0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) pops.dealers.push_back({random_chromosome(Role::dealer, hands, rng), 0.0, 0.0});
  } else {
    for (std::size_t k = 0; k < n; ++k) {
      Participant p;
      p.player = random_chromosome(Role::player, hands, rng);
      p.dealer = random_chromosome(Role::dealer, hands, rng);
      pops.participants.push_back(std::move(p));
    }
  }
  return pops;
}

void play_generation(Populations& pops, const HalfStreetGame& game, const GaConfig& config, Rng& rng) {
  if (pops.mode == FitnessMode::bankroll) {
    auto& players = pops.players;
    auto& dealers = pops.dealers;
    if (players.size() != dealers.size()) throw std::invalid_argument("player and dealer populations differ in size");
    for (auto& a : players) a.bankroll = config.bankroll;
    for (auto& a : dealers) a.bankroll = config.bankroll;
    std::vector<std::size_t> partner(dealers.size());
    std::iota(partner.begin(), partner.end(), std::size_t{0});
    for (int r = 0; r < config.games; ++r) {
      std::shuffle(partner.begin(), partner.end(), rng);
      for (std::size_t k = 0; k < players.size(); ++k) {
        Agent& pl = players[k];
        Agent& dl = dealers[partner[k]];
        const Deal d = game.deal(rng);
        const bool bet = pl.chromosome.genes[static_cast<std::size_t>(d.player_hand)] != 0;
        const bool call = dl.chromosome.genes[static_cast<std::size_t>(d.dealer_hand)] != 0;
        const Payoffs pay = play_round(game, d, bet, call, rng);
        pl.bankroll += pay.player;
        dl.bankroll += pay.dealer;
      }
    }
    for (auto& a : players) a.fitness = a.bankroll / config.bankroll;
    for (auto& a : dealers) a.fitness = a.bankroll / config.bankroll;
    return;
  }

  auto& members = pops.participants;
  for (auto& p : members) p.player_loss = p.dealer_loss = 0.0;
  std::vector<std::size_t> order(members.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::bernoulli_distribution coin(0.5);
  for (int r = 0; r < config.games; ++r) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t k = 0; k + 1 < order.size(); k += 2) {
      std::size_t a = order[k];
      std::size_t b = order[k + 1];
      if (coin(rng)) std::swap(a, b);
      Participant& pl = members[a];
      Participant& dl = members[b];
      const Deal d = game.deal(rng);
      const bool bet = pl.player.genes[static_cast<std::size_t>(d.player_hand)] != 0;
      const bool call = dl.dealer.genes[static_cast<std::size_t>(d.dealer_hand)] != 0;
      const Payoffs pay = play_round(game, d, bet, call, rng);
      if (pay.player < 0.0) pl.player_loss -= pay.player;
      if (pay.dealer < 0.0) dl.dealer_loss -= pay.dealer;
    }
  }
  for (auto& p : members) {
    const double loss = p.player_loss + p.dealer_loss;
    p.fitness = -(loss * loss);
  }
}

Populations select_and_breed(const Populations& pops, const GaConfig& config, Rng& rng) {
  config.validate();
  Populations next;
  next.mode = pops.mode;
  if (pops.mode == FitnessMode::bankroll) {
    next.players = breed_agents(pops.players, config, rng);
    next.dealers = breed_agents(pops.dealers, config, rng);
  } else {
    next.participants = breed_participants(pops.participants, config, rng);
  }
  return next;
}

Strategy population_strategy(const std::vector<Agent>& agents, double alpha) {
  if (agents.empty()) throw std::invalid_argument("population_strategy: empty population");
  const auto order = ranking(agents);
  const auto k = static_cast<std::size_t>(elite_size(alpha, agents.size()));
  std::vector<const Chromosome*> top;
  for (std::size_t r = 0; r < k; ++r) top.push_back(&agents[order[r]].chromosome);
  return gene_mean(agents.front().chromosome.role, top);
}

Strategy population_strategy(const std::vector<Participant>& participants, Role role, double alpha) {
  if (participants.empty()) throw std::invalid_argument("population_strategy: empty population");
  const auto order = ranking(participants);
  const auto k = static_cast<std::size_t>(elite_size(alpha, participants.size()));
  std::vector<const Chromosome*> top;
  for (std::size_t r = 0; r < k; ++r) {
    const Participant& p = participants[order[r]];
    top.push_back(role == Role::player ? &p.player : &p.dealer);
  }
  return gene_mean(role, top);
}

FitnessPoint top_fitness(const Populations& pops, double alpha, int generation) {
  FitnessPoint point{generation, 0.0, 0.0};
  std::vector<double> player;
  std::vector<double> dealer;
  if (pops.mode == FitnessMode::bankroll) {
    for (const auto& a : pops.players) player.push_back(a.fitness);
    for (const auto& a : pops.dealers) dealer.push_back(a.fitness);
  } else {
    for (const auto& p : pops.participants) {
      player.push_back(-(p.player_loss * p.player_loss));
      dealer.push_back(-(p.dealer_loss * p.dealer_loss));
    }
  }
  point.player = top_mean(std::move(player), alpha);
  point.dealer = top_mean(std::move(dealer), alpha);
  return point;
}

EvolveResult evolve(const GaConfig& config, const HalfStreetGame& game) {
  config.validate();
  Rng rng(config.seed);
  Populations pops = init_population(config, game.num_hands(), rng);
  EvolveResult result;
  for (int t = 0; t < config.generations; ++t) {
    play_generation(pops, game, config, rng);
    result.series.push_back(top_fitness(pops, config.alpha, t));
    if (t + 1 < config.generations) pops = select_and_breed(pops, config, rng);
  }
  if (pops.mode == FitnessMode::bankroll) {
    result.player = population_strategy(pops.players, config.alpha);
    result.dealer = population_strategy(pops.dealers, config.alpha);
  } else {
    result.player = population_strategy(pops.participants, Role::player, config.alpha);
    result.dealer = population_strategy(pops.participants, Role::dealer, config.alpha);
  }
  return result;
}

std::string fitness_series_csv(const std::vector<FitnessPoint>& series) {
  std::string out = "generation,mean_top_alpha_fitness_player,mean_top_alpha_fitness_dealer\n";
  for (const auto& p : series) {
    out += std::to_string(p.generation) + ',' + format_number(p.player) + ',' + format_number(p.dealer) + '\n';
  }
  return out;
}

}  // namespace halfstreet
