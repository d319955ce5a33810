#ifndef GCG_LEARNING_HPP
#define GCG_LEARNING_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "gcg/emergent.hpp"
#include "gcg/game.hpp"
#include "gcg/topology.hpp"

namespace gcg {

// Log-linear (Boltzmann) choice: probability of picking x.
double choice_probability(double utility_x, double utility_y, double temperature);

// Asynchronous log-linear learning. Each step one agent, drawn uniformly,
// re-chooses its action from its perturbed utilities with the others held
// fixed. The generator is std::mt19937_64 and every draw is mapped to an
// index or a unit double by hand, so trajectories are identical across
// platforms and standard libraries.
struct LearningConfig {
  Graph graph{0};
  std::vector<int> node_attacks;  // impostors per agent
  double temperature = 0.05;
  std::uint64_t steps = 1'000'000;
  std::uint64_t seed = 1;
  double burn_in_fraction = 0.1;
  JointAction initial;  // empty means all agents start at x
};

// Bit i of a state is set when agent i plays y.
std::string state_label(std::uint64_t state, int agents);

struct VisitDistribution {
  int agents = 0;
  std::uint64_t recorded = 0;
  std::map<std::uint64_t, std::uint64_t> visits;

  double frequency(std::uint64_t state) const;
  // Most visited state; ties go to the smaller bit pattern.
  std::uint64_t modal() const;
};

// Throws std::invalid_argument for a non-positive temperature, zero steps,
// a burn-in fraction outside [0, 1), more than 63 agents, or attack and
// initial vectors that do not match the graph.
VisitDistribution run_lll(const LearningConfig& config, const GameParams& params);

// Exact Gibbs distribution exp(Phi(a)/tau) / Z over all 2^n profiles.
std::vector<double> gibbs_distribution(const Graph& graph, const std::vector<int>& node_attacks,
                                       const GameParams& params, double temperature);

double total_variation(const VisitDistribution& empirical, const std::vector<double>& exact);

std::uint64_t encode(const JointAction& profile);

inline constexpr int kMaxStabilityAgents = 16;

struct StabilityResult {
  bool match = false;
  std::uint64_t modal = 0;
  std::uint64_t emergent = 0;
  bool emergent_is_potential_max = false;
  bool modal_is_potential_max = false;
  VisitDistribution distribution;
};

// Runs log-linear learning on realize(g) with the allocation spread by
// spread_attacks, and compares the modal state with emergent_state. A
// different modal state is still accepted when both it and the emergent
// state are global potential maximizers. Throws ResourceError above
// kMaxStabilityAgents agents.
StabilityResult stability_check(const GraphTopology& g, const AttackAllocation& attacks,
                                const GameParams& params, double temperature,
                                std::uint64_t steps, std::uint64_t seed,
                                double burn_in_fraction = 0.1);

// Header "state,visits,frequency", rows in ascending state order.
void write_csv(std::ostream& out, const VisitDistribution& dist);

}  // namespace gcg

#endif  // GCG_LEARNING_HPP
