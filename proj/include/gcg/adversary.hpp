#ifndef GCG_ADVERSARY_HPP
#define GCG_ADVERSARY_HPP

#include <string_view>

#include "gcg/emergent.hpp"
#include "gcg/game.hpp"
#include "gcg/topology.hpp"

namespace gcg {

enum class AdversaryKind { Malicious, Advertiser };

// "M" / "A".
const char* to_string(AdversaryKind kind);
// Accepts M, A, malicious, advertiser (case-insensitive).
AdversaryKind parse_adversary_kind(std::string_view text);

struct Adversary {
  AdversaryKind kind = AdversaryKind::Malicious;
  int budget = 0;
};

// Number of agents playing y.
int advertiser_payoff(const EmergentState& state, const GraphTopology& g);
// Negated system welfare.
Rational malicious_payoff(const EmergentState& state, const GraphTopology& g,
                          const GameParams& params);
Rational adversary_payoff(AdversaryKind kind, const EmergentState& state, const GraphTopology& g,
                          const GameParams& params);

// Exact best response. Solved as a 0/1 knapsack whose items are the
// components (cost k_star, value = delta_welfare for the malicious type or
// n_c for the advertiser); identical lone nodes form one item class.
//
// Ties: (1) adversary objective, (2) lower operator welfare, (3) the
// lexicographically smallest set of flipped component indices. Flipped
// components get exactly k_star attacks; leftover budget is unspent.
AttackAllocation best_response(const GraphTopology& g, const Adversary& adversary,
                               const GameParams& params);

// Welfare at the emergent state induced by best_response.
Rational welfare_under_attack(const GraphTopology& g, const Adversary& adversary,
                              const GameParams& params);

inline constexpr int kMaxBruteForceComponents = 12;

// Verification oracle: enumerates every per-component count vector with
// total <= budget. Same tie-breaking as best_response. Throws ResourceError
// for more than kMaxBruteForceComponents components or a budget above 3m.
AttackAllocation brute_force_best_response(const GraphTopology& g, const Adversary& adversary,
                                           const GameParams& params);

}  // namespace gcg

#endif  // GCG_ADVERSARY_HPP
