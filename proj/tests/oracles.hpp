#ifndef GCG_TESTS_ORACLES_HPP
#define GCG_TESTS_ORACLES_HPP

// Slow, independent reference computations used only by the tests. They
// work on concrete node-level graphs rather than component profiles.

#include <cstdint>
#include <utility>
#include <vector>

#include "gcg/adversary.hpp"
#include "gcg/game.hpp"
#include "gcg/topology.hpp"

namespace gcg::oracle {

// A connected simple graph with the given counts: a path, then extra edges.
inline Graph component_graph(const Component& c) {
  Graph g(c.nodes);
  for (int i = 0; i + 1 < c.nodes; ++i) g.add_edge(i, i + 1);
  int added = c.nodes - 1;
  for (int u = 0; u < c.nodes && added < c.edges; ++u) {
    for (int v = u + 2; v < c.nodes && added < c.edges; ++v) {
      g.add_edge(u, v);
      ++added;
    }
  }
  return g;
}

inline std::vector<int> round_robin(int attacks, int nodes) {
  std::vector<int> out(static_cast<std::size_t>(nodes), 0);
  for (int i = 0; i < attacks; ++i) ++out[static_cast<std::size_t>(i % nodes)];
  return out;
}

// Smallest k for which all-y weakly beats all-x in the node-level potential.
inline int scan_k_star(const Component& c, const GameParams& params) {
  const Graph g = component_graph(c);
  const JointAction all_x(static_cast<std::size_t>(c.nodes), Action::X);
  const JointAction all_y(static_cast<std::size_t>(c.nodes), Action::Y);
  const std::vector<int> none(static_cast<std::size_t>(c.nodes), 0);
  const Rational base = global_potential(all_x, none, g, params);
  for (int k = 0;; ++k) {
    if (global_potential(all_y, round_robin(k, c.nodes), g, params) >= base) return k;
  }
}

// Welfare lost by switching a component from x to y, from node-level welfare.
inline Rational welfare_drop(const Component& c, const GameParams& params) {
  const Graph g = component_graph(c);
  const JointAction all_x(static_cast<std::size_t>(c.nodes), Action::X);
  const JointAction all_y(static_cast<std::size_t>(c.nodes), Action::Y);
  return system_welfare(all_x, g, params) - system_welfare(all_y, g, params);
}

struct SubsetOptimum {
  Rational objective;
  Rational welfare;
};

// Best (objective, then lowest welfare) over every subset of components
// bought at k_star each, scored on realize(g) at node level.
inline SubsetOptimum subset_best_response(const GraphTopology& g, const Adversary& adversary,
                                          const GameParams& params) {
  const Graph concrete = realize(g);
  const auto offsets = component_offsets(g);
  const int count = g.num_components();
  SubsetOptimum best{Rational(-1'000'000), Rational(0)};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
    int cost = 0;
    JointAction profile(static_cast<std::size_t>(g.nodes()), Action::X);
    for (int i = 0; i < count; ++i) {
      if (!(mask >> i & 1u)) continue;
      const Component c = g.component(i);
      cost += k_star(c, params);
      for (int v = 0; v < c.nodes; ++v) profile[static_cast<std::size_t>(offsets[i] + v)] = Action::Y;
    }
    if (cost > adversary.budget) continue;
    const Rational welfare = system_welfare(profile, concrete, params);
    Rational objective = -welfare;
    if (adversary.kind == AdversaryKind::Advertiser) {
      int ys = 0;
      for (Action a : profile) ys += a == Action::Y;
      objective = ys;
    }
    if (objective > best.objective || (objective == best.objective && welfare < best.welfare)) {
      best = {objective, welfare};
    }
  }
  return best;
}

// Checks the exact-potential identity for every unilateral deviation.
inline bool potential_is_exact(const Graph& g, const std::vector<int>& attacks,
                               const GameParams& params) {
  const int n = g.num_nodes();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    JointAction a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = (s >> i & 1u) ? Action::Y : Action::X;
    const Rational phi = global_potential(a, attacks, g, params);
    for (int i = 0; i < n; ++i) {
      JointAction b = a;
      b[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] == Action::X ? Action::Y : Action::X;
      const int k = attacks[static_cast<std::size_t>(i)];
      const Rational du = perturbed_utility(i, b, k, g, params) - perturbed_utility(i, a, k, g, params);
      if (du != global_potential(b, attacks, g, params) - phi) return false;
    }
  }
  return true;
}

}  // namespace gcg::oracle

#endif  // GCG_TESTS_ORACLES_HPP
