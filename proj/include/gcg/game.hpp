#ifndef GCG_GAME_HPP
#define GCG_GAME_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gcg/rational.hpp"

namespace gcg {

enum class Action : std::uint8_t { X, Y };

char to_char(Action a);

// Payoff gain alpha in (0, 1] and personal cost p in (0, alpha).
class GameParams {
 public:
  // Throws std::invalid_argument when the pair is outside the valid region.
  GameParams(Rational alpha, Rational p);

  const Rational& alpha() const { return alpha_; }
  const Rational& p() const { return p_; }

  // alpha + 2p > 2: a single edge then needs three impostors to flip.
  bool high_cost() const;

  friend bool operator==(const GameParams&, const GameParams&) = default;

 private:
  Rational alpha_;
  Rational p_;
};

// A connected component summarized by its edge and node counts.
// (0, 1) is a lone node.
struct Component {
  int edges = 0;
  int nodes = 1;

  bool is_lone() const { return edges == 0 && nodes == 1; }

  friend auto operator<=>(const Component&, const Component&) = default;
};

Rational pairwise_payoff(Action mine, Action theirs, const GameParams& params);

// Potential of a uniformly labeled component under `attacks` impostors.
Rational component_potential(const Component& c, Action label, int attacks,
                             const GameParams& params);

// Fewest impostors making the all-y labeling weakly potential maximizing:
// ceil(m_c * alpha + n_c * p).
int k_star(const Component& c, const GameParams& params);

// Welfare lost when the component switches from x to y: 2 m_c alpha + n_c p.
Rational delta_welfare(const Component& c, const GameParams& params);

// Nominal welfare of a uniformly labeled component.
Rational component_welfare(const Component& c, Action label, const GameParams& params);

// A concrete simple undirected graph, used where per-agent quantities are
// needed (utilities, potentials, learning dynamics).
class Graph {
 public:
  explicit Graph(int nodes);

  // Throws std::invalid_argument on self loops, duplicates or bad ids.
  void add_edge(int u, int v);

  int num_nodes() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int node) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::pair<int, int>> edges_;
};

using JointAction = std::vector<Action>;

// Throw std::domain_error for an unknown agent id or a profile whose size
// does not match the graph.
Rational agent_utility(int agent, std::span<const Action> profile, const Graph& graph,
                       const GameParams& params);
Rational perturbed_utility(int agent, std::span<const Action> profile, int attacks_on_agent,
                           const Graph& graph, const GameParams& params);

Rational system_welfare(std::span<const Action> profile, const Graph& graph,
                        const GameParams& params);

// `node_attacks[i]` is the number of impostors attached to agent i.
Rational global_potential(std::span<const Action> profile, std::span<const int> node_attacks,
                          const Graph& graph, const GameParams& params);

}  // namespace gcg

#endif  // GCG_GAME_HPP
