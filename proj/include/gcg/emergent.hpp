#ifndef GCG_EMERGENT_HPP
#define GCG_EMERGENT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "gcg/game.hpp"
#include "gcg/topology.hpp"

namespace gcg {

// Impostor counts per component, indexed like GraphTopology::component().
class AttackAllocation {
 public:
  AttackAllocation() = default;
  // Zero attacks on every component of `g`.
  explicit AttackAllocation(const GraphTopology& g);
  // Throws std::domain_error on negative counts.
  explicit AttackAllocation(std::vector<int> counts);

  int size() const { return static_cast<int>(counts_.size()); }
  int at(int component) const;
  void set(int component, int attacks);
  int total() const;
  const std::vector<int>& counts() const { return counts_; }

  friend bool operator==(const AttackAllocation&, const AttackAllocation&) = default;

 private:
  std::vector<int> counts_;
};

// "index:k_c" pairs for non-zero entries, comma separated; "-" when empty.
std::string format_allocation(const AttackAllocation& a);
// Entries may appear in any order; unnamed components get zero.
AttackAllocation parse_allocation(std::string_view text, const GraphTopology& g);

struct EmergentState {
  std::vector<Action> labels;  // one per component
  int x_edges = 0;
  int y_edges = 0;
  int y_nodes = 0;
  int converting_attacks = 0;  // impostors attached to y-playing agents

  bool all_x() const;
};

// Labels component c as y iff attacks[c] >= k_star(c). Throws
// std::domain_error when the allocation does not cover every component.
EmergentState emergent_state(const GraphTopology& g, const AttackAllocation& attacks,
                             const GameParams& params);

// Welfare of a uniformly labeled state: 2m(1+alpha) - sum of delta_welfare over y components.
Rational state_welfare(const EmergentState& state, const GraphTopology& g,
                       const GameParams& params);

// Per-agent joint action matching realize(g)'s node layout.
JointAction expand_state(const EmergentState& state, const GraphTopology& g);

// Per-agent impostor counts for realize(g)'s layout. A component's attacks
// are dealt round-robin over its nodes starting at its first node.
std::vector<int> spread_attacks(const AttackAllocation& attacks, const GraphTopology& g);

// Sum of k_star over all components: the budget that takes every component.
int takeover_budget(const GraphTopology& g, const GameParams& params);

}  // namespace gcg

#endif  // GCG_EMERGENT_HPP
