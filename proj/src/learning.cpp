#include "gcg/learning.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "gcg/errors.hpp"

namespace gcg {

double choice_probability(double utility_x, double utility_y, double temperature) {
  const double top = std::max(utility_x, utility_y);
  const double ex = std::exp((utility_x - top) / temperature);
  const double ey = std::exp((utility_y - top) / temperature);
  return ex / (ex + ey);
}

std::string state_label(std::uint64_t state, int agents) {
  std::string out(static_cast<std::size_t>(agents), 'x');
  for (int i = 0; i < agents; ++i) {
    if (state >> i & 1u) out[static_cast<std::size_t>(i)] = 'y';
  }
  return out;
}

double VisitDistribution::frequency(std::uint64_t state) const {
  const auto it = visits.find(state);
  if (it == visits.end() || recorded == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(recorded);
}

std::uint64_t VisitDistribution::modal() const {
  std::uint64_t best_state = 0;
  std::uint64_t best_count = 0;
  for (const auto& [state, count] : visits) {
    if (count > best_count) {
      best_state = state;
      best_count = count;
    }
  }
  return best_state;
}

std::uint64_t encode(const JointAction& profile) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] == Action::Y) bits |= std::uint64_t{1} << i;
  }
  return bits;
}

namespace {

std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * n) >> 64);
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

VisitDistribution run_lll(const LearningConfig& config, const GameParams& params) {
  const int n = config.graph.num_nodes();
  if (!(config.temperature > 0)) throw std::invalid_argument("temperature must be positive");
  if (config.steps == 0) throw std::invalid_argument("need at least one step");
  if (!(config.burn_in_fraction >= 0 && config.burn_in_fraction < 1)) {
    throw std::invalid_argument("burn-in fraction must lie in [0, 1)");
  }
  if (n < 1 || n > 63) throw std::invalid_argument("learning supports 1..63 agents");
  if (static_cast<int>(config.node_attacks.size()) != n) {
    throw std::invalid_argument("attack vector does not match the graph");
  }
  if (!config.initial.empty() && static_cast<int>(config.initial.size()) != n) {
    throw std::invalid_argument("initial profile does not match the graph");
  }

  const double gain = 1.0 + to_double(params.alpha());
  const double cost = to_double(params.p());
  std::uint64_t state = config.initial.empty() ? 0 : encode(config.initial);
  std::mt19937_64 rng(config.seed);
  const auto burn_in = static_cast<std::uint64_t>(
      std::floor(static_cast<double>(config.steps) * config.burn_in_fraction));

  VisitDistribution dist;
  dist.agents = n;
  for (std::uint64_t step = 0; step < config.steps; ++step) {
    const int agent = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n)));
    int y_neighbors = 0;
    int x_neighbors = 0;
    for (int j : config.graph.neighbors(agent)) ((state >> j & 1u) ? y_neighbors : x_neighbors) += 1;
    const double ux = gain * x_neighbors;
    const double uy = y_neighbors - cost + config.node_attacks[static_cast<std::size_t>(agent)];
    const std::uint64_t bit = std::uint64_t{1} << agent;
    if (uniform_unit(rng) < choice_probability(ux, uy, config.temperature)) {
      state &= ~bit;
    } else {
      state |= bit;
    }
    if (step >= burn_in) {
      ++dist.visits[state];
      ++dist.recorded;
    }
  }
  return dist;
}

namespace {

JointAction decode(std::uint64_t bits, int agents) {
  JointAction profile(static_cast<std::size_t>(agents), Action::X);
  for (int i = 0; i < agents; ++i) {
    if (bits >> i & 1u) profile[static_cast<std::size_t>(i)] = Action::Y;
  }
  return profile;
}

std::vector<Rational> all_potentials(const Graph& graph, const std::vector<int>& node_attacks,
                                     const GameParams& params) {
  const int n = graph.num_nodes();
  if (n > kMaxStabilityAgents) {
    throw ResourceError("potential enumeration is capped at " + std::to_string(kMaxStabilityAgents) +
                        " agents");
  }
  std::vector<Rational> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    out.push_back(global_potential(decode(s, n), node_attacks, graph, params));
  }
  return out;
}

}  // namespace

std::vector<double> gibbs_distribution(const Graph& graph, const std::vector<int>& node_attacks,
                                       const GameParams& params, double temperature) {
  const auto phi = all_potentials(graph, node_attacks, params);
  double top = -INFINITY;
  for (const auto& v : phi) top = std::max(top, to_double(v));
  std::vector<double> weights;
  weights.reserve(phi.size());
  double z = 0;
  for (const auto& v : phi) {
    weights.push_back(std::exp((to_double(v) - top) / temperature));
    z += weights.back();
  }
  for (auto& w : weights) w /= z;
  return weights;
}

double total_variation(const VisitDistribution& empirical, const std::vector<double>& exact) {
  double sum = 0;
  for (std::uint64_t s = 0; s < exact.size(); ++s) sum += std::abs(empirical.frequency(s) - exact[s]);
  for (const auto& [s, count] : empirical.visits) {
    if (s >= exact.size()) sum += empirical.frequency(s);
  }
  return sum / 2;
}

StabilityResult stability_check(const GraphTopology& g, const AttackAllocation& attacks,
                                const GameParams& params, double temperature,
                                std::uint64_t steps, std::uint64_t seed,
                                double burn_in_fraction) {
  if (g.nodes() > kMaxStabilityAgents) {
    throw ResourceError("stability check is capped at " + std::to_string(kMaxStabilityAgents) +
                        " agents");
  }
  LearningConfig config;
  config.graph = realize(g);
  config.node_attacks = spread_attacks(attacks, g);
  config.temperature = temperature;
  config.steps = steps;
  config.seed = seed;
  config.burn_in_fraction = burn_in_fraction;

  StabilityResult result;
  result.distribution = run_lll(config, params);
  result.modal = result.distribution.modal();
  result.emergent = encode(expand_state(emergent_state(g, attacks, params), g));

  const auto phi = all_potentials(config.graph, config.node_attacks, params);
  const Rational top = *std::max_element(phi.begin(), phi.end());
  result.emergent_is_potential_max = phi[result.emergent] == top;
  result.modal_is_potential_max = phi[result.modal] == top;
  result.match = result.modal == result.emergent ||
                 (result.emergent_is_potential_max && result.modal_is_potential_max);
  return result;
}

void write_csv(std::ostream& out, const VisitDistribution& dist) {
  out << "state,visits,frequency\n";
  char buf[32];
  for (const auto& [state, count] : dist.visits) {
    std::snprintf(buf, sizeof buf, "%.6f", dist.frequency(state));
    out << state_label(state, dist.agents) << ',' << count << ',' << buf << '\n';
  }
}

}  // namespace gcg
