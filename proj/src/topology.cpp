#include "gcg/topology.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "gcg/errors.hpp"

namespace gcg {

GraphTopology::GraphTopology(std::vector<Component> edged) : edged_(std::move(edged)) {
  std::sort(edged_.begin(), edged_.end());
  int nodes = 0;
  for (const auto& c : edged_) {
    if (c.edges < 1 || !is_feasible_component(c.edges, c.nodes)) {
      throw std::invalid_argument("infeasible edged component " + std::to_string(c.edges) + ":" +
                                  std::to_string(c.nodes));
    }
    edges_ += c.edges;
    nodes += c.nodes;
  }
  if (edges_ < 1) throw std::invalid_argument("a topology needs at least one edge");
  if (nodes > 2 * edges_) {
    throw std::invalid_argument("components use " + std::to_string(nodes) +
                                " nodes but only 2m = " + std::to_string(2 * edges_) +
                                " exist");
  }
  lone_count_ = 2 * edges_ - nodes;
}

Component GraphTopology::component(int index) const {
  if (index < 0 || index >= num_components()) {
    throw std::domain_error("component index " + std::to_string(index) + " out of range");
  }
  if (index < num_edged()) return edged_[static_cast<std::size_t>(index)];
  return Component{0, 1};
}

const char* to_string(CanonicalKind kind) {
  switch (kind) {
    case CanonicalKind::Sparse: return "SPARSE";
    case CanonicalKind::Line: return "LINE";
    case CanonicalKind::Complete: return "COMPLETE";
  }
  return "?";
}

CanonicalKind parse_canonical_kind(std::string_view text) {
  std::string upper(text);
  for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (upper == "SPARSE") return CanonicalKind::Sparse;
  if (upper == "LINE") return CanonicalKind::Line;
  if (upper == "COMPLETE") return CanonicalKind::Complete;
  throw std::invalid_argument("unknown canonical graph '" + std::string(text) + "'");
}

int min_complete_nodes(int m) {
  int d = 1;
  while (static_cast<long long>(d) * (d - 1) / 2 < m) ++d;
  return d;
}

bool is_feasible_component(int edges, int nodes) {
  if (edges < 0 || nodes < 1) return false;
  if (edges == 0) return nodes == 1;
  return nodes - 1 <= edges && static_cast<long long>(edges) <= static_cast<long long>(nodes) * (nodes - 1) / 2;
}

GraphTopology canonical_graph(CanonicalKind kind, int m) {
  if (m < 1) throw std::domain_error("canonical graphs need m >= 1, got " + std::to_string(m));
  switch (kind) {
    case CanonicalKind::Sparse:
      return GraphTopology(std::vector<Component>(static_cast<std::size_t>(m), Component{1, 2}));
    case CanonicalKind::Line:
      return GraphTopology({Component{m, m + 1}});
    case CanonicalKind::Complete:
      return GraphTopology({Component{m, min_complete_nodes(m)}});
  }
  throw std::domain_error("unknown canonical kind");
}

namespace {

// Feasible edged components with `edges` edges, ascending in nodes.
std::vector<Component> shapes_with_edges(int edges) {
  std::vector<Component> out;
  for (int n = min_complete_nodes(edges); n <= edges + 1; ++n) out.push_back({edges, n});
  return out;
}

void extend(int remaining, int nodes_left, std::vector<Component>& prefix,
            const std::vector<std::vector<Component>>& shapes,
            const std::function<void(const GraphTopology&)>& visit) {
  if (remaining == 0) {
    visit(GraphTopology(prefix));
    return;
  }
  const Component floor_c = prefix.empty() ? Component{1, 0} : prefix.back();
  for (int e = floor_c.edges; e <= remaining; ++e) {
    for (const auto& c : shapes[static_cast<std::size_t>(e)]) {
      if (c < floor_c || c.nodes > nodes_left) continue;
      prefix.push_back(c);
      extend(remaining - e, nodes_left - c.nodes, prefix, shapes, visit);
      prefix.pop_back();
    }
  }
}

}  // namespace

void for_each_profile(int m, const std::function<void(const GraphTopology&)>& visit) {
  if (m < 1) throw std::domain_error("profile enumeration needs m >= 1");
  if (m > kMaxEnumerationEdges) {
    throw ResourceError("profile enumeration is capped at m = " +
                        std::to_string(kMaxEnumerationEdges) + ", got " + std::to_string(m));
  }
  std::vector<std::vector<Component>> shapes(static_cast<std::size_t>(m) + 1);
  for (int e = 1; e <= m; ++e) shapes[static_cast<std::size_t>(e)] = shapes_with_edges(e);
  std::vector<Component> prefix;
  extend(m, 2 * m, prefix, shapes, visit);
}

std::vector<GraphTopology> enumerate_profiles(int m) {
  std::vector<GraphTopology> out;
  for_each_profile(m, [&](const GraphTopology& g) { out.push_back(g); });
  return out;
}

std::string format_profile(const GraphTopology& g) {
  std::string out;
  for (std::size_t i = 0; i < g.edged().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(g.edged()[i].edges) + ":" + std::to_string(g.edged()[i].nodes);
  }
  if (g.lone_count() > 0) out += "+" + std::to_string(g.lone_count()) + "lone";
  return out;
}

namespace {

int parse_count(std::string_view s, std::string_view whole) {
  int value = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end || value < 0) {
    throw std::invalid_argument("malformed profile '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

GraphTopology parse_profile(std::string_view text) {
  std::string_view body = text;
  int declared_lone = -1;
  if (const auto plus = body.find('+'); plus != std::string_view::npos) {
    std::string_view suffix = body.substr(plus + 1);
    constexpr std::string_view kLone = "lone";
    if (suffix.size() <= kLone.size() || suffix.substr(suffix.size() - kLone.size()) != kLone) {
      throw std::invalid_argument("malformed lone suffix in '" + std::string(text) + "'");
    }
    declared_lone = parse_count(suffix.substr(0, suffix.size() - kLone.size()), text);
    body = body.substr(0, plus);
  }
  std::vector<Component> edged;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("expected m_c:n_c in '" + std::string(text) + "'");
    }
    edged.push_back({parse_count(item.substr(0, colon), text), parse_count(item.substr(colon + 1), text)});
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw std::invalid_argument("trailing comma in '" + std::string(text) + "'");
  }
  GraphTopology g(std::move(edged));
  if (declared_lone >= 0 && declared_lone != g.lone_count()) {
    throw std::invalid_argument("profile '" + std::string(text) + "' declares " +
                                std::to_string(declared_lone) + " lone nodes but n = 2m implies " +
                                std::to_string(g.lone_count()));
  }
  return g;
}

std::vector<int> component_offsets(const GraphTopology& g) {
  std::vector<int> offsets;
  int next = 0;
  for (int i = 0; i < g.num_components(); ++i) {
    offsets.push_back(next);
    next += g.component(i).nodes;
  }
  return offsets;
}

Graph realize(const GraphTopology& g, ComponentShape shape) {
  Graph graph(g.nodes());
  const auto offsets = component_offsets(g);
  for (int i = 0; i < g.num_edged(); ++i) {
    const Component c = g.component(i);
    const int base = offsets[static_cast<std::size_t>(i)];
    for (int v = 1; v < c.nodes; ++v) {
      graph.add_edge(base + (shape == ComponentShape::Path ? v - 1 : 0), base + v);
    }
    int extra = c.edges - (c.nodes - 1);
    for (int u = 0; u < c.nodes && extra > 0; ++u) {
      for (int v = u + 1; v < c.nodes && extra > 0; ++v) {
        if (graph.has_edge(base + u, base + v)) continue;
        graph.add_edge(base + u, base + v);
        --extra;
      }
    }
  }
  return graph;
}

GraphTopology profile_of(const Graph& graph) {
  if (graph.num_nodes() != 2 * graph.num_edges()) {
    throw std::invalid_argument("profiles describe graphs with n = 2m");
  }
  std::vector<int> label(static_cast<std::size_t>(graph.num_nodes()), -1);
  std::vector<Component> edged;
  for (int start = 0; start < graph.num_nodes(); ++start) {
    if (label[start] >= 0 || graph.neighbors(start).empty()) continue;
    std::vector<int> stack{start};
    label[start] = start;
    int nodes = 0;
    int degree_sum = 0;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      ++nodes;
      degree_sum += static_cast<int>(graph.neighbors(u).size());
      for (int v : graph.neighbors(u)) {
        if (label[v] < 0) {
          label[v] = start;
          stack.push_back(v);
        }
      }
    }
    edged.push_back({degree_sum / 2, nodes});
  }
  return GraphTopology(std::move(edged));
}

}  // namespace gcg
