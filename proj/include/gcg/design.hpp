#ifndef GCG_DESIGN_HPP
#define GCG_DESIGN_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gcg/adversary.hpp"
#include "gcg/game.hpp"
#include "gcg/topology.hpp"

namespace gcg {

// Largest budget below which LINE keeps every edged component at x against
// a malicious adversary: ceil(m alpha + (m+1) p).
int k_max_malicious(int m, const GameParams& params);

// Some graph on 2m nodes has every component (lone nodes included) holding
// fewer nodes than its k_star. Covering 2m nodes without lone nodes forces
// SPARSE, so this reduces to alpha + 2p > 2.
bool is_ordinary(int m, const GameParams& params);

// 2m - 2d + ceil(m alpha + d p) with d = min_complete_nodes(m) when
// ordinary, otherwise k_max_malicious.
int k_max_advertiser(int m, const GameParams& params);

// Least budget at which the best response of `kind` on `g` labels an edged
// component y. Always <= takeover_budget(g).
int edged_flip_budget(const GraphTopology& g, AdversaryKind kind, const GameParams& params);

// First integer budget k >= k_max_malicious where COMPLETE weakly overtakes
// SPARSE against a malicious adversary; nullopt if that never happens on
// [k_max_malicious, 3m].
std::optional<int> k_intersect(int m, const GameParams& params);

// Operator choice restricted to SPARSE, LINE and COMPLETE.
CanonicalKind optimal_canonical_graph(const Adversary& adversary, int m, const GameParams& params);

struct ProfileOptimum {
  GraphTopology graph;
  Rational welfare;
};

inline constexpr int kMaxExactSearchEdges = 8;

// Best profile over enumerate_profiles(m); ties go to the first profile in
// enumeration order. Throws ResourceError for m > kMaxExactSearchEdges.
ProfileOptimum exact_optimal_profile(const Adversary& adversary, int m, const GameParams& params);
// Same search over a caller-supplied profile list (must be non-empty).
ProfileOptimum exact_optimal_profile(const Adversary& adversary,
                                     std::span<const GraphTopology> profiles,
                                     const GameParams& params);

struct RegretReport {
  AdversaryKind planned = AdversaryKind::Malicious;
  AdversaryKind realized = AdversaryKind::Malicious;
  int budget = 0;
  std::string planned_graph;     // g*(planned)
  std::string realized_graph;    // g*(realized)
  Rational best_welfare;         // W(g*(realized), realized)
  Rational planned_welfare;      // W(g*(planned), realized)
  Rational regret;               // (best - planned) / planned
};

// Relative regret of planning for `planned` when `realized` attacks with
// budget k. `exact` selects exhaustive search (m <= kMaxExactSearchEdges)
// over the canonical rule. Throws std::domain_error for k outside [0, 3m]
// or a non-positive denominator.
RegretReport relative_regret(AdversaryKind planned, AdversaryKind realized, int k, int m,
                             const GameParams& params, bool exact);

struct WelfarePoint {
  int k = 0;
  Rational welfare;
};

struct WelfareCurve {
  std::string graph;
  AdversaryKind kind = AdversaryKind::Malicious;
  int m = 0;
  std::vector<WelfarePoint> points;
};

// welfare_under_attack for k = k_lo..k_hi. Throws std::domain_error unless
// 0 <= k_lo <= k_hi <= 3m.
WelfareCurve welfare_curve(const GraphTopology& g, std::string label, AdversaryKind kind,
                           const GameParams& params, int k_lo, int k_hi);

}  // namespace gcg

#endif  // GCG_DESIGN_HPP
