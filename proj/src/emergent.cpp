#include "gcg/emergent.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace gcg {

AttackAllocation::AttackAllocation(const GraphTopology& g)
    : counts_(static_cast<std::size_t>(g.num_components()), 0) {}

AttackAllocation::AttackAllocation(std::vector<int> counts) : counts_(std::move(counts)) {
  if (std::any_of(counts_.begin(), counts_.end(), [](int k) { return k < 0; })) {
    throw std::domain_error("attack counts must be non-negative");
  }
}

int AttackAllocation::at(int component) const {
  if (component < 0 || component >= size()) {
    throw std::domain_error("allocation has no component " + std::to_string(component));
  }
  return counts_[static_cast<std::size_t>(component)];
}

void AttackAllocation::set(int component, int attacks) {
  if (component < 0 || component >= size()) {
    throw std::domain_error("allocation has no component " + std::to_string(component));
  }
  if (attacks < 0) throw std::domain_error("attack counts must be non-negative");
  counts_[static_cast<std::size_t>(component)] = attacks;
}

int AttackAllocation::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

std::string format_allocation(const AttackAllocation& a) {
  std::string out;
  for (int i = 0; i < a.size(); ++i) {
    if (a.at(i) == 0) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(i) + ":" + std::to_string(a.at(i));
  }
  return out.empty() ? "-" : out;
}

AttackAllocation parse_allocation(std::string_view text, const GraphTopology& g) {
  AttackAllocation a(g);
  if (text.empty() || text == "-") return a;
  auto number = [&](std::string_view s) {
    int v = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || ptr != end || v < 0) {
      throw std::invalid_argument("malformed allocation '" + std::string(text) + "'");
    }
    return v;
  };
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("expected index:k_c in allocation");
    }
    const int index = number(item.substr(0, colon));
    if (index >= g.num_components()) {
      throw std::domain_error("allocation references missing component " + std::to_string(index));
    }
    a.set(index, a.at(index) + number(item.substr(colon + 1)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return a;
}

bool EmergentState::all_x() const {
  return std::all_of(labels.begin(), labels.end(), [](Action a) { return a == Action::X; });
}

EmergentState emergent_state(const GraphTopology& g, const AttackAllocation& attacks,
                             const GameParams& params) {
  if (attacks.size() != g.num_components()) {
    throw std::domain_error("allocation covers " + std::to_string(attacks.size()) +
                            " components, graph has " + std::to_string(g.num_components()));
  }
  EmergentState state;
  state.labels.reserve(static_cast<std::size_t>(g.num_components()));
  for (int i = 0; i < g.num_components(); ++i) {
    const Component c = g.component(i);
    const int k = attacks.at(i);
    const bool flipped = k >= k_star(c, params);
    state.labels.push_back(flipped ? Action::Y : Action::X);
    if (flipped) {
      state.y_edges += c.edges;
      state.y_nodes += c.nodes;
      state.converting_attacks += k;
    } else {
      state.x_edges += c.edges;
    }
  }
  return state;
}

Rational state_welfare(const EmergentState& state, const GraphTopology& g,
                       const GameParams& params) {
  Rational w = 2 * g.edges() * (1 + params.alpha());
  for (int i = 0; i < g.num_components(); ++i) {
    if (state.labels.at(static_cast<std::size_t>(i)) == Action::Y) {
      w -= delta_welfare(g.component(i), params);
    }
  }
  return w;
}

JointAction expand_state(const EmergentState& state, const GraphTopology& g) {
  JointAction profile;
  profile.reserve(static_cast<std::size_t>(g.nodes()));
  for (int i = 0; i < g.num_components(); ++i) {
    profile.insert(profile.end(), static_cast<std::size_t>(g.component(i).nodes),
                   state.labels.at(static_cast<std::size_t>(i)));
  }
  return profile;
}

std::vector<int> spread_attacks(const AttackAllocation& attacks, const GraphTopology& g) {
  if (attacks.size() != g.num_components()) {
    throw std::domain_error("allocation does not match the graph");
  }
  std::vector<int> per_node(static_cast<std::size_t>(g.nodes()), 0);
  const auto offsets = component_offsets(g);
  for (int i = 0; i < g.num_components(); ++i) {
    const int n = g.component(i).nodes;
    for (int j = 0; j < attacks.at(i); ++j) {
      per_node[static_cast<std::size_t>(offsets[static_cast<std::size_t>(i)] + j % n)] += 1;
    }
  }
  return per_node;
}

int takeover_budget(const GraphTopology& g, const GameParams& params) {
  int total = 0;
  for (const auto& c : g.edged()) total += k_star(c, params);
  return total + g.lone_count() * k_star(Component{0, 1}, params);
}

}  // namespace gcg
