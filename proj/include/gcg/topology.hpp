#ifndef GCG_TOPOLOGY_HPP
#define GCG_TOPOLOGY_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gcg/game.hpp"

namespace gcg {

// A graph on n = 2m nodes reduced to its multiset of connected components.
// Every quantity in the library depends on a graph only through this profile.
//
// Components are indexed: edged components first (sorted ascending by
// (edges, nodes)), then one index per lone node.
class GraphTopology {
 public:
  // Lone nodes fill the profile up to 2m nodes. Throws std::invalid_argument
  // when a component is infeasible, has no edges, or the nodes exceed 2m.
  explicit GraphTopology(std::vector<Component> edged);

  const std::vector<Component>& edged() const { return edged_; }
  int lone_count() const { return lone_count_; }
  int edges() const { return edges_; }
  int nodes() const { return 2 * edges_; }

  int num_components() const { return static_cast<int>(edged_.size()) + lone_count_; }
  int num_edged() const { return static_cast<int>(edged_.size()); }
  // Lone nodes are reported as Component{0, 1}.
  Component component(int index) const;

  friend bool operator==(const GraphTopology&, const GraphTopology&) = default;
  friend auto operator<=>(const GraphTopology& a, const GraphTopology& b) {
    return a.edged_ <=> b.edged_;
  }

 private:
  std::vector<Component> edged_;
  int lone_count_ = 0;
  int edges_ = 0;
};

enum class CanonicalKind { Sparse, Line, Complete };

const char* to_string(CanonicalKind kind);
// Accepts SPARSE / LINE / COMPLETE, case-insensitive.
CanonicalKind parse_canonical_kind(std::string_view text);

int min_complete_nodes(int m);
bool is_feasible_component(int edges, int nodes);

// Throws std::domain_error for m < 1.
GraphTopology canonical_graph(CanonicalKind kind, int m);

// Practical ceiling for exhaustive enumeration.
inline constexpr int kMaxEnumerationEdges = 10;

// Calls `visit` once per distinct profile with m edges, in lexicographic
// order of the sorted (edges, nodes) lists. Throws ResourceError above
// kMaxEnumerationEdges.
void for_each_profile(int m, const std::function<void(const GraphTopology&)>& visit);
std::vector<GraphTopology> enumerate_profiles(int m);

// "m_c:n_c" pairs joined by commas, then "+<L>lone" when L > 0, e.g. "3:4+2lone".
std::string format_profile(const GraphTopology& g);
// Inverse of format_profile. The lone suffix is optional; when present it
// must equal 2m minus the component nodes. Throws std::invalid_argument.
GraphTopology parse_profile(std::string_view text);

// Shape used to lay out each edged component when a concrete graph is built.
enum class ComponentShape { Path, Star };

// Concrete realization: component i occupies a contiguous block of node ids
// in component-index order. A spanning tree of the requested shape is laid
// down first; remaining edges fill in lexicographically.
Graph realize(const GraphTopology& g, ComponentShape shape = ComponentShape::Path);

// First node id of each component in realize()'s layout.
std::vector<int> component_offsets(const GraphTopology& g);

// Profile of a concrete graph; requires nodes == 2 * edges.
GraphTopology profile_of(const Graph& graph);

}  // namespace gcg

#endif  // GCG_TOPOLOGY_HPP
