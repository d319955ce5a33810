#include "gcg/adversary.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gcg/errors.hpp"

namespace gcg {

const char* to_string(AdversaryKind kind) {
  return kind == AdversaryKind::Malicious ? "M" : "A";
}

AdversaryKind parse_adversary_kind(std::string_view text) {
  std::string lower(text);
  for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (lower == "m" || lower == "malicious") return AdversaryKind::Malicious;
  if (lower == "a" || lower == "advertiser") return AdversaryKind::Advertiser;
  throw std::invalid_argument("unknown adversary '" + std::string(text) + "'");
}

int advertiser_payoff(const EmergentState& state, const GraphTopology& g) {
  int total = 0;
  for (int i = 0; i < g.num_components(); ++i) {
    if (state.labels.at(static_cast<std::size_t>(i)) == Action::Y) total += g.component(i).nodes;
  }
  return total;
}

Rational malicious_payoff(const EmergentState& state, const GraphTopology& g,
                          const GameParams& params) {
  return -state_welfare(state, g, params);
}

Rational adversary_payoff(AdversaryKind kind, const EmergentState& state, const GraphTopology& g,
                          const GameParams& params) {
  return kind == AdversaryKind::Malicious ? malicious_payoff(state, g, params)
                                          : Rational(advertiser_payoff(state, g));
}

namespace {

// (objective gain, welfare destroyed), compared lexicographically.
using Score = std::pair<Rational, Rational>;

Score operator+(const Score& a, const Score& b) { return {a.first + b.first, a.second + b.second}; }
Score scale(const Score& a, int times) { return {a.first * times, a.second * times}; }

Score item_score(AdversaryKind kind, const Component& c, const GameParams& params) {
  const Rational damage = delta_welfare(c, params);
  return {kind == AdversaryKind::Malicious ? damage : Rational(c.nodes), damage};
}

void check_budget(const Adversary& adversary) {
  if (adversary.budget < 0) throw std::domain_error("attack budget must be non-negative");
}

}  // namespace

AttackAllocation best_response(const GraphTopology& g, const Adversary& adversary,
                               const GameParams& params) {
  check_budget(adversary);
  AttackAllocation result(g);
  // Any budget beyond the takeover cost buys nothing.
  const int budget = std::min(adversary.budget, takeover_budget(g, params));
  const int edged = g.num_edged();
  const Component lone{0, 1};
  const int lone_cost = k_star(lone, params);
  const Score lone_score = item_score(adversary.kind, lone, params);

  // best[i][b]: best score from edged items i.. plus the lone class, budget b.
  std::vector<std::vector<Score>> best(static_cast<std::size_t>(edged) + 1,
                                       std::vector<Score>(static_cast<std::size_t>(budget) + 1));
  for (int b = 0; b <= budget; ++b) {
    best[static_cast<std::size_t>(edged)][static_cast<std::size_t>(b)] =
        scale(lone_score, std::min(g.lone_count(), b / lone_cost));
  }
  for (int i = edged - 1; i >= 0; --i) {
    const Component c = g.component(i);
    const int cost = k_star(c, params);
    const Score gain = item_score(adversary.kind, c, params);
    const auto& next = best[static_cast<std::size_t>(i) + 1];
    auto& row = best[static_cast<std::size_t>(i)];
    for (int b = 0; b <= budget; ++b) {
      row[static_cast<std::size_t>(b)] = next[static_cast<std::size_t>(b)];
      if (cost <= b) {
        row[static_cast<std::size_t>(b)] =
            std::max(row[static_cast<std::size_t>(b)], gain + next[static_cast<std::size_t>(b - cost)]);
      }
    }
  }

  // Taking the lowest index whenever that stays optimal gives the
  // lexicographically smallest optimal set.
  int b = budget;
  for (int i = 0; i < edged; ++i) {
    const Component c = g.component(i);
    const int cost = k_star(c, params);
    if (cost > b) continue;
    const Score with = item_score(adversary.kind, c, params) +
                       best[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(b - cost)];
    if (with == best[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)]) {
      result.set(i, cost);
      b -= cost;
    }
  }
  const int lone_taken = std::min(g.lone_count(), b / lone_cost);
  for (int j = 0; j < lone_taken; ++j) result.set(edged + j, lone_cost);
  return result;
}

Rational welfare_under_attack(const GraphTopology& g, const Adversary& adversary,
                              const GameParams& params) {
  const auto state = emergent_state(g, best_response(g, adversary, params), params);
  return state_welfare(state, g, params);
}

namespace {

bool lex_smaller_set(std::uint32_t a, std::uint32_t b) {
  // Compare the sorted index lists of two bit sets.
  while (a != 0 && b != 0) {
    const int ia = __builtin_ctz(a);
    const int ib = __builtin_ctz(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

struct BruteForce {
  const GraphTopology& g;
  AdversaryKind kind;
  const GameParams& params;
  std::vector<int> thresholds;
  std::vector<int> counts;
  std::unordered_map<std::uint32_t, Score> evaluated;
  std::optional<std::pair<Score, std::uint32_t>> incumbent;

  void leaf(std::uint32_t mask) {
    auto it = evaluated.find(mask);
    if (it == evaluated.end()) {
      const auto state = emergent_state(g, AttackAllocation(counts), params);
      const Score score{adversary_payoff(kind, state, g, params), -state_welfare(state, g, params)};
      it = evaluated.emplace(mask, score).first;
    }
    const Score& score = it->second;
    if (!incumbent || score > incumbent->first ||
        (score == incumbent->first && lex_smaller_set(mask, incumbent->second))) {
      incumbent = {score, mask};
    }
  }

  void descend(int index, int remaining, std::uint32_t mask) {
    if (index == static_cast<int>(counts.size())) {
      leaf(mask);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      counts[static_cast<std::size_t>(index)] = k;
      const std::uint32_t next =
          k >= thresholds[static_cast<std::size_t>(index)] ? mask | (1u << index) : mask;
      descend(index + 1, remaining - k, next);
    }
    counts[static_cast<std::size_t>(index)] = 0;
  }
};

}  // namespace

AttackAllocation brute_force_best_response(const GraphTopology& g, const Adversary& adversary,
                                           const GameParams& params) {
  check_budget(adversary);
  if (g.num_components() > kMaxBruteForceComponents) {
    throw ResourceError("brute force is capped at " + std::to_string(kMaxBruteForceComponents) +
                        " components, graph has " + std::to_string(g.num_components()));
  }
  if (adversary.budget > 3 * g.edges()) {
    throw ResourceError("brute force budget is capped at 3m = " + std::to_string(3 * g.edges()));
  }
  BruteForce search{g, adversary.kind, params, {}, {}, {}, std::nullopt};
  for (int i = 0; i < g.num_components(); ++i) search.thresholds.push_back(k_star(g.component(i), params));
  search.counts.assign(static_cast<std::size_t>(g.num_components()), 0);
  search.descend(0, adversary.budget, 0);

  AttackAllocation result(g);
  for (int i = 0; i < g.num_components(); ++i) {
    if (search.incumbent->second & (1u << i)) result.set(i, search.thresholds[static_cast<std::size_t>(i)]);
  }
  return result;
}

}  // namespace gcg
