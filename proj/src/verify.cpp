#include "gcg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "gcg/adversary.hpp"
#include "gcg/design.hpp"
#include "gcg/errors.hpp"
#include "gcg/topology.hpp"

namespace gcg {

namespace {

struct SuiteName {
  Suite suite;
  const char* name;
  int ceiling;
};

constexpr SuiteName kSuites[] = {
    {Suite::KStar, "kstar", 40},
    {Suite::OracleBestResponse, "oracle_br", 5},
    {Suite::KMax, "kmax", kMaxExactSearchEdges},
    {Suite::Ordinary, "ordinary", kMaxExactSearchEdges},
    {Suite::CanonicalRule, "canonical_rule", 60},
    {Suite::LemmaSlope, "lemma_slope", 40},
    {Suite::LemmaSparseMid, "lemma_sparse_mid", kMaxExactSearchEdges},
    {Suite::LemmaB, "lemma_B", kMaxExactSearchEdges},
    {Suite::LemmaLine2p, "lemma_line_2p", kMaxExactSearchEdges},
    {Suite::Thm2Regret, "thm2_regret", kMaxExactSearchEdges},
    {Suite::Thm3Gap, "thm3_gap", kMaxExactSearchEdges},
};

const SuiteName& lookup(Suite suite) {
  for (const auto& s : kSuites) {
    if (s.suite == suite) return s;
  }
  throw std::invalid_argument("unknown suite");
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

class Recorder {
 public:
  Recorder(Suite suite, VerifyReport& report) : name_(to_string(suite)), report_(report) {}

  void add(int m, const GameParams& params, int k, std::string lhs, std::string rhs, bool pass) {
    report_.rows.push_back(
        {name_, next_id_++, m, params.alpha(), params.p(), k, std::move(lhs), std::move(rhs), pass});
  }

 private:
  std::string name_;
  VerifyReport& report_;
  int next_id_ = 0;
};

// min{k : Phi_c(y, k) >= Phi_c(x, k)} by direct scan.
int k_star_by_scan(const Component& c, const GameParams& params) {
  for (int k = 0;; ++k) {
    if (component_potential(c, Action::Y, k, params) >= component_potential(c, Action::X, k, params)) {
      return k;
    }
  }
}

const std::vector<GraphTopology>& profiles_for(int m) {
  thread_local std::map<int, std::vector<GraphTopology>> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, enumerate_profiles(m)).first;
  return it->second;
}

Rational welfare_at(const GraphTopology& g, AdversaryKind kind, int k, const GameParams& params) {
  return welfare_under_attack(g, {kind, k}, params);
}

Rational objective_of(const GraphTopology& g, const AttackAllocation& a, AdversaryKind kind,
                      const GameParams& params) {
  return adversary_payoff(kind, emergent_state(g, a, params), g, params);
}

void run_kstar(Recorder& rec, int m_max, std::span<const GameParams> grid) {
  for (const auto& params : grid) {
    for (int edges = 0; edges <= m_max; ++edges) {
      for (int nodes = 1; nodes <= edges + 1; ++nodes) {
        if (!is_feasible_component(edges, nodes)) continue;
        const Component c{edges, nodes};
        const int formula = k_star(c, params);
        const int scan = k_star_by_scan(c, params);
        rec.add(edges, params, formula, std::to_string(formula), std::to_string(scan), formula == scan);
      }
    }
  }
}

void run_oracle_br(Recorder& rec, int m_min, int m_max, std::span<const GameParams> grid) {
  for (const auto& params : grid) {
    for (int m = m_min; m <= m_max; ++m) {
      for (const auto& g : profiles_for(m)) {
        for (auto kind : {AdversaryKind::Malicious, AdversaryKind::Advertiser}) {
          for (int k = 0; k <= 3 * m; ++k) {
            const Adversary adv{kind, k};
            const Rational fast = objective_of(g, best_response(g, adv, params), kind, params);
            const Rational slow = objective_of(g, brute_force_best_response(g, adv, params), kind, params);
            rec.add(m, params, k, to_string(fast), to_string(slow), fast == slow);
          }
        }
      }
    }
  }
}

void run_kmax(Recorder& rec, int m_min, int m_max, std::span<const GameParams> grid) {
  for (const auto& params : grid) {
    for (int m = m_min; m <= m_max; ++m) {
      for (auto kind : {AdversaryKind::Malicious, AdversaryKind::Advertiser}) {
        int oracle = 0;
        for (const auto& g : profiles_for(m)) oracle = std::max(oracle, edged_flip_budget(g, kind, params));
        const int formula = kind == AdversaryKind::Malicious ? k_max_malicious(m, params)
                                                             : k_max_advertiser(m, params);
        rec.add(m, params, formula, std::to_string(formula), std::to_string(oracle), formula == oracle);
      }
    }
  }
}

void run_ordinary(Recorder& rec, int m_min, int m_max, std::span<const GameParams> grid) {
  for (const auto& params : grid) {
    for (int m = m_min; m <= m_max; ++m) {
      bool witness = false;
      for (const auto& g : profiles_for(m)) {
        bool resistant = true;
        for (int i = 0; i < g.num_components() && resistant; ++i) {
          const Component c = g.component(i);
          resistant = c.nodes < k_star(c, params);
        }
        if (resistant) {
          witness = true;
          break;
        }
      }
      const bool closed = is_ordinary(m, params);
      rec.add(m, params, 0, yes_no(closed), yes_no(witness), closed == witness);
    }
  }
}

void run_canonical_rule(Recorder& rec, int m_min, int m_max, std::span<const GameParams> grid) {
  constexpr CanonicalKind kinds[] = {CanonicalKind::Sparse, CanonicalKind::Line, CanonicalKind::Complete};
  for (const auto& params : grid) {
    for (int m = m_min; m <= m_max; ++m) {
      for (auto kind : {AdversaryKind::Malicious, AdversaryKind::Advertiser}) {
        for (int k = 0; k <= 3 * m; ++k) {
          Rational best;
          bool first = true;
          for (auto c : kinds) {
            const Rational w = welfare_at(canonical_graph(c, m), kind, k, params);
            if (first || w > best) best = w;
            first = false;
          }
          const auto chosen = optimal_canonical_graph({kind, k}, m, params);
          const Rational w = welfare_at(canonical_graph(chosen, m), kind, k, params);
          rec.add(m, params, k, std::string(to_string(chosen)) + "=" + to_string(w), to_string(best),
                  w == best);
        }
      }
    }
  }
}

void run_lemma_slope(Recorder& rec, int m_max, std::span<const GameParams> grid) {
  for (const auto& params : grid) {
    for (int edges = 1; edges <= m_max; ++edges) {
      for (int nodes = 2; nodes <= edges + 1; ++nodes) {
        if (!is_feasible_component(edges, nodes)) continue;
        const Component c{edges, nodes};
        const Rational lhs = delta_welfare(c, params);
        const Rational rhs = k_star(c, params) * params.p();
        rec.add(edges, params, k_star(c, params), to_string(lhs), to_string(rhs), lhs > rhs);
      }
    }
  }
}

void run_sparse_mid(Recorder& rec, int m_min, int m_max, std::span<const GameParams> grid) {
  for (const auto& params : grid) {
    for (int m = m_min; m <= m_max; ++m) {
      const int hi = std::min(k_max_advertiser(m, params), 3 * m + 1);
      for (int k = k_max_malicious(m, params); k < hi; ++k) {
        const Rational lhs = exact_optimal_profile({AdversaryKind::Malicious, k}, profiles_for(m), params).welfare;
        const Rational rhs = 2 * m * (1 + params.alpha()) - (k / 3) * (2 * params.alpha() + 2 * params.p());
        rec.add(m, params, k, to_string(lhs), to_string(rhs), lhs <= rhs);
      }
    }
  }
}

// Largest p * min{|C_e| - 1, ceil(m_c(alpha + p) + p)} over every welfare
// maximizing profile, with c the first edged component of least k_star.
Rational lemma_b_bound(const std::vector<GraphTopology>& optima, const GameParams& params) {
  Rational best = -1;
  for (const auto& g : optima) {
    Rational bound = 0;
    if (g.num_edged() > 0) {
      int arg = 0;
      for (int i = 1; i < g.num_edged(); ++i) {
        if (k_star(g.component(i), params) < k_star(g.component(arg), params)) arg = i;
      }
      const int mc = g.component(arg).edges;
      const std::int64_t tree_k = ceil(mc * (params.alpha() + params.p()) + params.p());
      bound = params.p() * std::min<std::int64_t>(g.num_edged() - 1, tree_k);
    }
    best = std::max(best, bound);
  }
  return best;
}

void run_lemma_b(Recorder& rec, int m_min, int m_max, std::span<const GameParams> grid) {
  for (const auto& params : grid) {
    for (int m = m_min; m <= m_max; ++m) {
      const auto line = canonical_graph(CanonicalKind::Line, m);
      const auto& profiles = profiles_for(m);
      for (int k = 0; k < std::min(k_max_malicious(m, params), 3 * m + 1); ++k) {
        std::vector<Rational> welfare;
        welfare.reserve(profiles.size());
        for (const auto& g : profiles) welfare.push_back(welfare_at(g, AdversaryKind::Advertiser, k, params));
        const Rational top = *std::max_element(welfare.begin(), welfare.end());
        std::vector<GraphTopology> optima;
        for (std::size_t i = 0; i < profiles.size(); ++i) {
          if (welfare[i] == top) optima.push_back(profiles[i]);
        }
        const Rational lhs = top - welfare_at(line, AdversaryKind::Advertiser, k, params);
        const Rational rhs = lemma_b_bound(optima, params);
        rec.add(m, params, k, to_string(lhs), to_string(rhs), lhs <= rhs);
      }
    }
  }
}

void run_line_2p(Recorder& rec, int m_min, int m_max, std::span<const GameParams> grid) {
  for (const auto& params : grid) {
    for (int m = m_min; m <= m_max; ++m) {
      const auto line = canonical_graph(CanonicalKind::Line, m);
      for (int k = 0; k < std::min(k_max_malicious(m, params), 3 * m + 1); ++k) {
        const Rational best =
            exact_optimal_profile({AdversaryKind::Malicious, k}, profiles_for(m), params).welfare;
        const Rational lhs = best - welfare_at(line, AdversaryKind::Malicious, k, params);
        const Rational rhs = 2 * params.p();
        rec.add(m, params, k, to_string(lhs), to_string(rhs), lhs <= rhs);
      }
    }
  }
}

void run_thm2(Recorder& rec, int m_min, int m_max, std::span<const GameParams> grid) {
  for (const auto& params : grid) {
    for (int m = m_min; m <= m_max; ++m) {
      for (int k = 0; k < std::min(k_max_malicious(m, params), 3 * m + 1); ++k) {
        const auto report =
            relative_regret(AdversaryKind::Malicious, AdversaryKind::Advertiser, k, m, params, true);
        const Rational bound = 2 * params.p();
        // R sqrt(m) <= 2p  <=>  R^2 m <= 4p^2, since R >= 0.
        const bool pass = report.regret >= 0 && report.regret * report.regret * m <= bound * bound;
        rec.add(m, params, k, fixed6(to_double(report.regret) * std::sqrt(static_cast<double>(m))),
                to_string(bound), pass);
      }
    }
  }
}

void run_thm3(Recorder& rec, int m_min, int m_max, std::span<const GameParams> grid) {
  for (const auto& params : grid) {
    for (int m = m_min; m <= m_max; ++m) {
      const int hi = std::min(k_max_advertiser(m, params), 3 * m);
      for (int k = k_max_malicious(m, params); k <= hi; ++k) {
        const auto& profiles = profiles_for(m);
        const Rational adv = exact_optimal_profile({AdversaryKind::Advertiser, k}, profiles, params).welfare;
        const Rational mal = exact_optimal_profile({AdversaryKind::Malicious, k}, profiles, params).welfare;
        const Rational lhs = adv - mal;
        const Rational rhs = (k / 3) * (2 * params.alpha() + 2 * params.p()) - k * params.p();
        rec.add(m, params, k, to_string(lhs), to_string(rhs), lhs >= rhs);
      }
    }
  }
}

}  // namespace

const char* to_string(Suite suite) { return lookup(suite).name; }

Suite parse_suite(std::string_view name) {
  for (const auto& s : kSuites) {
    if (name == s.name) return s.suite;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::vector<Suite> all_suites() {
  std::vector<Suite> out;
  for (const auto& s : kSuites) out.push_back(s.suite);
  return out;
}

int suite_ceiling(Suite suite) { return lookup(suite).ceiling; }

int VerifyReport::failures() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return !r.pass; }));
}

std::vector<GameParams> default_grid() {
  return {
      GameParams(Rational(1, 2), Rational(1, 4)),
      GameParams(Rational(1), Rational(9, 10)),
      GameParams(Rational(1), Rational(1, 2)),
      GameParams(Rational(1), Rational(11, 20)),
      GameParams(Rational(3, 4), Rational(1, 2)),
      GameParams(Rational(1, 5), Rational(1, 10)),
  };
}

std::vector<GameParams> parse_grid(std::string_view text) {
  std::vector<GameParams> grid;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("grid entries are alpha:p, got '" + std::string(item) + "'");
    }
    grid.emplace_back(parse_rational(item.substr(0, colon)), parse_rational(item.substr(colon + 1)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (grid.empty()) throw std::invalid_argument("empty parameter grid");
  return grid;
}

VerifyReport verify_bounds(Suite suite, int m_min, int m_max, std::span<const GameParams> grid) {
  if (m_min < 1 || m_min > m_max) {
    throw std::domain_error("need 1 <= m_min <= m_max");
  }
  if (m_max > suite_ceiling(suite)) {
    throw ResourceError(std::string("suite ") + to_string(suite) + " is capped at m = " +
                        std::to_string(suite_ceiling(suite)));
  }
  VerifyReport report;
  Recorder rec(suite, report);
  switch (suite) {
    case Suite::KStar: run_kstar(rec, m_max, grid); break;
    case Suite::OracleBestResponse: run_oracle_br(rec, m_min, m_max, grid); break;
    case Suite::KMax: run_kmax(rec, m_min, m_max, grid); break;
    case Suite::Ordinary: run_ordinary(rec, m_min, m_max, grid); break;
    case Suite::CanonicalRule: run_canonical_rule(rec, m_min, m_max, grid); break;
    case Suite::LemmaSlope: run_lemma_slope(rec, m_max, grid); break;
    case Suite::LemmaSparseMid: run_sparse_mid(rec, m_min, m_max, grid); break;
    case Suite::LemmaB: run_lemma_b(rec, m_min, m_max, grid); break;
    case Suite::LemmaLine2p: run_line_2p(rec, m_min, m_max, grid); break;
    case Suite::Thm2Regret: run_thm2(rec, m_min, m_max, grid); break;
    case Suite::Thm3Gap: run_thm3(rec, m_min, m_max, grid); break;
  }
  return report;
}

void write_csv(std::ostream& out, const VerifyReport& report) {
  out << "suite,case_id,m,alpha,p,k,lhs,rhs,pass\n";
  for (const auto& r : report.rows) {
    out << r.suite << ',' << r.case_id << ',' << r.m << ',' << to_string(r.alpha) << ','
        << to_string(r.p) << ',' << r.k << ',' << r.lhs << ',' << r.rhs << ','
        << (r.pass ? "true" : "false") << '\n';
  }
}

}  // namespace gcg
