#include "gcg/game.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gcg {

char to_char(Action a) { return a == Action::X ? 'x' : 'y'; }

GameParams::GameParams(Rational alpha, Rational p) : alpha_(alpha), p_(p) {
  if (alpha_ <= 0 || alpha_ > 1) {
    throw std::invalid_argument("alpha must lie in (0, 1], got " + to_string(alpha_));
  }
  if (p_ <= 0 || p_ >= alpha_) {
    throw std::invalid_argument("p must lie in (0, alpha), got " + to_string(p_));
  }
}

bool GameParams::high_cost() const { return alpha_ + 2 * p_ > 2; }

Rational pairwise_payoff(Action mine, Action theirs, const GameParams& params) {
  if (mine != theirs) return 0;
  return mine == Action::X ? 1 + params.alpha() : Rational(1);
}

Rational component_potential(const Component& c, Action label, int attacks,
                             const GameParams& params) {
  if (label == Action::X) return c.edges * (1 + params.alpha());
  return Rational(c.edges) - c.nodes * params.p() + attacks;
}

int k_star(const Component& c, const GameParams& params) {
  return static_cast<int>(ceil(c.edges * params.alpha() + c.nodes * params.p()));
}

Rational delta_welfare(const Component& c, const GameParams& params) {
  return 2 * c.edges * params.alpha() + c.nodes * params.p();
}

Rational component_welfare(const Component& c, Action label, const GameParams& params) {
  if (label == Action::X) return 2 * c.edges * (1 + params.alpha());
  return Rational(2 * c.edges) - c.nodes * params.p();
}

Graph::Graph(int nodes) {
  if (nodes < 0) throw std::invalid_argument("negative node count");
  adjacency_.resize(static_cast<std::size_t>(nodes));
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= num_nodes() || v >= num_nodes()) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("self loop at node " + std::to_string(u));
  if (has_edge(u, v)) {
    throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

bool Graph::has_edge(int u, int v) const {
  const auto& adj = adjacency_.at(u);
  return std::find(adj.begin(), adj.end(), v) != adj.end();
}

const std::vector<int>& Graph::neighbors(int node) const { return adjacency_.at(node); }

namespace {

void check_profile(std::span<const Action> profile, const Graph& graph) {
  if (static_cast<int>(profile.size()) != graph.num_nodes()) {
    throw std::domain_error("profile has " + std::to_string(profile.size()) +
                            " actions for a graph with " + std::to_string(graph.num_nodes()) +
                            " agents");
  }
}

void check_agent(int agent, const Graph& graph) {
  if (agent < 0 || agent >= graph.num_nodes()) {
    throw std::domain_error("unknown agent " + std::to_string(agent));
  }
}

}  // namespace

Rational agent_utility(int agent, std::span<const Action> profile, const Graph& graph,
                       const GameParams& params) {
  check_agent(agent, graph);
  check_profile(profile, graph);
  Rational total = 0;
  for (int j : graph.neighbors(agent)) total += pairwise_payoff(profile[agent], profile[j], params);
  if (profile[agent] == Action::Y) total -= params.p();
  return total;
}

Rational perturbed_utility(int agent, std::span<const Action> profile, int attacks_on_agent,
                           const Graph& graph, const GameParams& params) {
  if (attacks_on_agent < 0) throw std::domain_error("negative attack count");
  Rational u = agent_utility(agent, profile, graph, params);
  if (profile[agent] == Action::Y) u += attacks_on_agent;
  return u;
}

Rational system_welfare(std::span<const Action> profile, const Graph& graph,
                        const GameParams& params) {
  check_profile(profile, graph);
  Rational total = 0;
  for (int i = 0; i < graph.num_nodes(); ++i) total += agent_utility(i, profile, graph, params);
  return total;
}

Rational global_potential(std::span<const Action> profile, std::span<const int> node_attacks,
                          const Graph& graph, const GameParams& params) {
  check_profile(profile, graph);
  if (node_attacks.size() != profile.size()) {
    throw std::domain_error("attack vector does not match the graph");
  }
  int x_edges = 0;
  int y_edges = 0;
  for (const auto& [u, v] : graph.edges()) {
    if (profile[u] != profile[v]) continue;
    (profile[u] == Action::X ? x_edges : y_edges) += 1;
  }
  int y_nodes = 0;
  int converted = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] != Action::Y) continue;
    ++y_nodes;
    converted += node_attacks[i];
  }
  return (1 + params.alpha()) * x_edges + y_edges - params.p() * y_nodes + converted;
}

}  // namespace gcg
