#include "gcg/design.hpp"

#include <stdexcept>

#include "gcg/errors.hpp"

namespace gcg {

namespace {

void require_edges(int m) {
  if (m < 1) throw std::domain_error("need m >= 1, got " + std::to_string(m));
}

bool has_edged_y(const EmergentState& state, const GraphTopology& g) {
  for (int i = 0; i < g.num_edged(); ++i) {
    if (state.labels[static_cast<std::size_t>(i)] == Action::Y) return true;
  }
  return false;
}

}  // namespace

int k_max_malicious(int m, const GameParams& params) {
  require_edges(m);
  return static_cast<int>(ceil(m * params.alpha() + (m + 1) * params.p()));
}

bool is_ordinary(int m, const GameParams& params) {
  require_edges(m);
  return params.high_cost();
}

int k_max_advertiser(int m, const GameParams& params) {
  if (!is_ordinary(m, params)) return k_max_malicious(m, params);
  const int d = min_complete_nodes(m);
  return 2 * m - 2 * d + static_cast<int>(ceil(m * params.alpha() + d * params.p()));
}

int edged_flip_budget(const GraphTopology& g, AdversaryKind kind, const GameParams& params) {
  const int limit = takeover_budget(g, params);
  for (int k = 0; k <= limit; ++k) {
    const auto state = emergent_state(g, best_response(g, {kind, k}, params), params);
    if (has_edged_y(state, g)) return k;
  }
  return limit;
}

std::optional<int> k_intersect(int m, const GameParams& params) {
  const auto sparse = canonical_graph(CanonicalKind::Sparse, m);
  const auto complete = canonical_graph(CanonicalKind::Complete, m);
  for (int k = k_max_malicious(m, params); k <= 3 * m; ++k) {
    const Adversary adv{AdversaryKind::Malicious, k};
    if (welfare_under_attack(complete, adv, params) >= welfare_under_attack(sparse, adv, params)) {
      return k;
    }
  }
  return std::nullopt;
}

CanonicalKind optimal_canonical_graph(const Adversary& adversary, int m, const GameParams& params) {
  const int k = adversary.budget;
  const int kmax_m = k_max_malicious(m, params);
  if (k < kmax_m) return CanonicalKind::Line;
  if (adversary.kind == AdversaryKind::Advertiser) {
    if (params.high_cost() && k >= k_max_advertiser(m, params)) return CanonicalKind::Sparse;
    return CanonicalKind::Complete;
  }
  if (params.high_cost()) return CanonicalKind::Sparse;
  const auto crossing = k_intersect(m, params);
  return crossing && k >= *crossing ? CanonicalKind::Complete : CanonicalKind::Sparse;
}

ProfileOptimum exact_optimal_profile(const Adversary& adversary,
                                     std::span<const GraphTopology> profiles,
                                     const GameParams& params) {
  if (profiles.empty()) throw std::invalid_argument("no profiles to search");
  std::optional<ProfileOptimum> best;
  for (const auto& g : profiles) {
    const Rational w = welfare_under_attack(g, adversary, params);
    if (!best || w > best->welfare) best = ProfileOptimum{g, w};
  }
  return *best;
}

ProfileOptimum exact_optimal_profile(const Adversary& adversary, int m, const GameParams& params) {
  require_edges(m);
  if (m > kMaxExactSearchEdges) {
    throw ResourceError("exact topology search is capped at m = " +
                        std::to_string(kMaxExactSearchEdges) + ", got " + std::to_string(m));
  }
  const auto profiles = enumerate_profiles(m);
  return exact_optimal_profile(adversary, profiles, params);
}

RegretReport relative_regret(AdversaryKind planned, AdversaryKind realized, int k, int m,
                             const GameParams& params, bool exact) {
  require_edges(m);
  if (k < 0 || k > 3 * m) {
    throw std::domain_error("budget " + std::to_string(k) + " outside [0, 3m]");
  }
  const Adversary planned_adv{planned, k};
  const Adversary realized_adv{realized, k};

  GraphTopology planned_graph = canonical_graph(CanonicalKind::Line, m);
  GraphTopology realized_graph = planned_graph;
  RegretReport report{planned, realized, k, {}, {}, {}, {}, {}};
  if (exact) {
    if (m > kMaxExactSearchEdges) {
      throw ResourceError("exact regret is capped at m = " + std::to_string(kMaxExactSearchEdges));
    }
    const auto profiles = enumerate_profiles(m);
    planned_graph = exact_optimal_profile(planned_adv, profiles, params).graph;
    realized_graph = exact_optimal_profile(realized_adv, profiles, params).graph;
    report.planned_graph = format_profile(planned_graph);
    report.realized_graph = format_profile(realized_graph);
  } else {
    const auto planned_kind = optimal_canonical_graph(planned_adv, m, params);
    const auto realized_kind = optimal_canonical_graph(realized_adv, m, params);
    planned_graph = canonical_graph(planned_kind, m);
    realized_graph = canonical_graph(realized_kind, m);
    report.planned_graph = to_string(planned_kind);
    report.realized_graph = to_string(realized_kind);
  }
  report.best_welfare = welfare_under_attack(realized_graph, realized_adv, params);
  report.planned_welfare = welfare_under_attack(planned_graph, realized_adv, params);
  if (report.planned_welfare <= 0) {
    throw std::domain_error("regret denominator W(g*(T), T') = " +
                            to_string(report.planned_welfare) + " is not positive");
  }
  report.regret = (report.best_welfare - report.planned_welfare) / report.planned_welfare;
  return report;
}

WelfareCurve welfare_curve(const GraphTopology& g, std::string label, AdversaryKind kind,
                           const GameParams& params, int k_lo, int k_hi) {
  if (k_lo < 0 || k_lo > k_hi || k_hi > 3 * g.edges()) {
    throw std::domain_error("budget range " + std::to_string(k_lo) + ".." + std::to_string(k_hi) +
                            " is not within [0, 3m]");
  }
  WelfareCurve curve{std::move(label), kind, g.edges(), {}};
  for (int k = k_lo; k <= k_hi; ++k) {
    curve.points.push_back({k, welfare_under_attack(g, {kind, k}, params)});
  }
  return curve;
}

}  // namespace gcg
