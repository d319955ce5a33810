#ifndef GCG_VERIFY_HPP
#define GCG_VERIFY_HPP

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcg/game.hpp"

namespace gcg {

// Each suite evaluates both sides of one inequality (or one oracle
// agreement) over a sweep of (m, alpha, p, k) and reports every case.
enum class Suite {
  KStar,            // ceil(m_c alpha + n_c p) vs a potential scan
  OracleBestResponse,  // knapsack vs brute-force objective
  KMax,             // k_max formulas vs max over profiles of edged_flip_budget
  Ordinary,         // alpha + 2p > 2 vs profile search
  CanonicalRule,    // canonical rule vs argmax of the three canonical curves
  LemmaSlope,       // delta_welfare(c) > k_star(c) p
  LemmaSparseMid,   // W(g*(M), M) <= 2m(1+alpha) - floor(k/3)(2alpha+2p)
  LemmaB,           // B(k) <= p min{|C_e|-1, ceil(m_c(alpha+p)+p)}
  LemmaLine2p,      // W(g*(M), M) - W(LINE, M) <= 2p
  Thm2Regret,       // R(M) sqrt(m) <= 2p
  Thm3Gap,          // W(g*(A), A) - W(g*(M), M) >= floor(k/3)(2alpha+2p) - kp
};

const char* to_string(Suite suite);
// Throws std::invalid_argument for unknown names.
Suite parse_suite(std::string_view name);
std::vector<Suite> all_suites();

// Largest m accepted by a suite (for KStar and LemmaSlope this bounds m_c).
int suite_ceiling(Suite suite);

struct VerifyRow {
  std::string suite;
  int case_id = 0;
  int m = 0;
  Rational alpha;
  Rational p;
  int k = 0;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;

  int failures() const;
  bool all_pass() const { return failures() == 0; }
};

// Six parameter points spanning both alpha + 2p regimes and the boundary.
std::vector<GameParams> default_grid();

// Parses "alpha:p" pairs separated by commas, e.g. "1/2:1/4,1:9/10".
std::vector<GameParams> parse_grid(std::string_view text);

// Runs `suite` for m in [m_min, m_max]. Throws ResourceError when m_max
// exceeds suite_ceiling(suite), std::domain_error when m_min > m_max or m_min < 1.
VerifyReport verify_bounds(Suite suite, int m_min, int m_max, std::span<const GameParams> grid);

// Header "suite,case_id,m,alpha,p,k,lhs,rhs,pass".
void write_csv(std::ostream& out, const VerifyReport& report);

}  // namespace gcg

#endif  // GCG_VERIFY_HPP
