#include "gcg/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "gcg/adversary.hpp"
#include "gcg/design.hpp"
#include "gcg/errors.hpp"
#include "gcg/learning.hpp"
#include "gcg/topology.hpp"
#include "gcg/verify.hpp"

namespace gcg::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a verification suite reports failures; the report is already written.
struct VerificationFailed {};

struct Common {
  int m = 0;
  std::string alpha;
  std::string p;

  GameParams params() const { return GameParams(parse_rational(alpha), parse_rational(p)); }
  void require_m() const {
    if (m < 1) throw std::invalid_argument("--m must be at least 1, got " + std::to_string(m));
  }
};

void add_params(CLI::App* cmd, Common& c, bool m_required = true) {
  auto* m = cmd->add_option("--m", c.m, "Number of edges (nodes = 2m)");
  if (m_required) m->required();
  cmd->add_option("--alpha", c.alpha, "Payoff gain, a/b or decimal")->required();
  cmd->add_option("--p", c.p, "Personal cost, a/b or decimal")->required();
}

std::string csv_field(const std::string& s) {
  if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// Writes to `path` through a temporary file and a rename. With no path,
// falls back to $GCG_OUTPUT_DIR/<default_name>, then to `out`.
void emit(const std::string& path, const std::string& default_name, const std::string& body,
          std::ostream& out) {
  std::filesystem::path target;
  if (!path.empty()) {
    target = path;
  } else if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
    target = std::filesystem::path(dir) / default_name;
  } else {
    out << body;
    return;
  }
  std::filesystem::path temp = target;
  temp += ".tmp";
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot write " + temp.string());
    file << body;
    file.flush();
    if (!file) throw IoError("failed writing " + temp.string());
  }
  std::error_code ec;
  std::filesystem::rename(temp, target, ec);
  if (ec) {
    std::filesystem::remove(temp, ec);
    throw IoError("cannot move output into place at " + target.string());
  }
}

std::pair<int, int> parse_k_range(const std::string& text, int m) {
  if (text.empty()) return {0, 3 * m};
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw std::invalid_argument("malformed budget range '" + text + "'");
    return v;
  };
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
  }
  const int k = number(text);
  return {k, k};
}

// --- kmax ---------------------------------------------------------------

void cmd_kmax(const Common& c, std::ostream& out) {
  c.require_m();
  const auto params = c.params();
  const int kmax_m = k_max_malicious(c.m, params);
  const int kmax_a = k_max_advertiser(c.m, params);
  const bool ordinary = is_ordinary(c.m, params);
  const int d = min_complete_nodes(c.m);
  out << "kmaxM=" << kmax_m << " kmaxA=" << kmax_a << " ordinary=" << (ordinary ? "true" : "false")
      << " d=" << d << "\n";
  out << "# m=" << c.m << " alpha=" << to_string(params.alpha()) << " p=" << to_string(params.p())
      << ": LINE keeps every edge on x against a malicious adversary with k < " << kmax_m << "; "
      << (ordinary ? "COMPLETE on " + std::to_string(d) + " nodes" : std::string("LINE"))
      << " does so against an advertiser with k < " << kmax_a << "\n";
}

// --- curve --------------------------------------------------------------

struct CurveArgs {
  Common common;
  std::string graph = "LINE";
  std::string adversary = "M";
  std::string k_range;
  std::string out;
};

void cmd_curve(const CurveArgs& a, std::ostream& out) {
  const auto params = a.common.params();
  const auto kind = parse_adversary_kind(a.adversary);

  std::vector<std::pair<std::string, GraphTopology>> graphs;
  std::string upper = a.graph;
  for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (upper == "ALL" || upper == "SPARSE" || upper == "LINE" || upper == "COMPLETE") {
    a.common.require_m();
    const std::vector<CanonicalKind> kinds =
        upper == "ALL" ? std::vector<CanonicalKind>{CanonicalKind::Sparse, CanonicalKind::Line,
                                                    CanonicalKind::Complete}
                       : std::vector<CanonicalKind>{parse_canonical_kind(upper)};
    for (auto k : kinds) graphs.emplace_back(to_string(k), canonical_graph(k, a.common.m));
  } else {
    auto g = parse_profile(a.graph);
    if (a.common.m != 0 && a.common.m != g.edges()) {
      throw std::invalid_argument("--m " + std::to_string(a.common.m) + " disagrees with profile '" +
                                  a.graph + "'");
    }
    graphs.emplace_back(format_profile(g), std::move(g));
  }
  const int m = graphs.front().second.edges();
  const auto [lo, hi] = parse_k_range(a.k_range, m);
  if (lo < 0 || lo > hi || hi > 3 * m) {
    throw std::invalid_argument("budget range must lie within 0.." + std::to_string(3 * m));
  }

  std::vector<WelfareCurve> curves;
  for (const auto& [label, g] : graphs) curves.push_back(welfare_curve(g, label, kind, params, lo, hi));

  std::ostringstream body;
  body << "k,welfare,graph,adversary,m,alpha,p\n";
  for (std::size_t i = 0; i < curves.front().points.size(); ++i) {
    for (const auto& curve : curves) {
      const auto& pt = curve.points[i];
      body << pt.k << ',' << to_string(pt.welfare) << ',' << csv_field(curve.graph) << ','
           << to_string(kind) << ',' << m << ',' << to_string(params.alpha()) << ','
           << to_string(params.p()) << '\n';
    }
  }
  emit(a.out, "curve.csv", body.str(), out);
}

// --- optimize -----------------------------------------------------------

struct OptimizeArgs {
  Common common;
  std::string adversary = "M";
  int k = 0;
  bool exact = false;
};

void cmd_optimize(const OptimizeArgs& a, std::ostream& out) {
  a.common.require_m();
  const auto params = a.common.params();
  const Adversary adv{parse_adversary_kind(a.adversary), a.k};
  if (a.k < 0) throw std::invalid_argument("--k must be non-negative");
  if (a.exact && a.common.m > kMaxExactSearchEdges) {
    throw ResourceError("--exact is capped at m = " + std::to_string(kMaxExactSearchEdges));
  }
  const auto choice = optimal_canonical_graph(adv, a.common.m, params);
  const Rational w = welfare_under_attack(canonical_graph(choice, a.common.m), adv, params);
  out << "graph=" << to_string(choice) << " welfare=" << to_string(w) << "\n";
  if (a.exact) {
    const auto best = exact_optimal_profile(adv, a.common.m, params);
    out << "exact_profile=" << format_profile(best.graph) << " exact_welfare=" << to_string(best.welfare)
        << " gap=" << to_string(best.welfare - w) << "\n";
  }
}

// --- regret -------------------------------------------------------------

struct RegretArgs {
  Common common;
  std::string planned;
  std::string realized;
  int k = 0;
  bool exact = false;
};

void cmd_regret(const RegretArgs& a, std::ostream& out) {
  a.common.require_m();
  const auto params = a.common.params();
  const auto report = relative_regret(parse_adversary_kind(a.planned), parse_adversary_kind(a.realized),
                                      a.k, a.common.m, params, a.exact);
  char decimal[32];
  std::snprintf(decimal, sizeof decimal, "%.6f", to_double(report.regret));
  out << "planned=" << to_string(report.planned) << " realized=" << to_string(report.realized)
      << " k=" << report.budget << " planned_graph=" << report.planned_graph
      << " realized_graph=" << report.realized_graph
      << " numerator=" << to_string(report.best_welfare - report.planned_welfare)
      << " denominator=" << to_string(report.planned_welfare) << " R=" << report.regret.numerator()
      << "/" << report.regret.denominator() << " R_decimal=" << decimal << "\n";
}

// --- verify -------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  int m_min = 1;
  int m_max = 0;
  std::string grid;
  std::string out;
};

void cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Suite suite = parse_suite(a.suite);
  const auto grid = a.grid.empty() ? default_grid() : parse_grid(a.grid);
  if (a.m_min < 1 || a.m_max < a.m_min) throw std::invalid_argument("need 1 <= --m-min <= --m-max");
  const auto report = verify_bounds(suite, a.m_min, a.m_max, grid);
  std::ostringstream body;
  write_csv(body, report);
  emit(a.out, std::string("verify_") + to_string(suite) + ".csv", body.str(), out);
  out << "suite=" << to_string(suite) << " cases=" << report.rows.size()
      << " failures=" << report.failures() << "\n";
  if (!report.all_pass()) throw VerificationFailed{};
}

// --- simulate -----------------------------------------------------------

struct SimulateArgs {
  Common common;
  std::string profile;
  std::string attacks = "-";
  std::string temperature = "1/20";
  std::uint64_t steps = 1'000'000;
  std::uint64_t seed = 1;
  std::string burn_in = "1/10";
  std::string out;
};

void cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const auto params = a.common.params();
  const auto g = parse_profile(a.profile);
  const auto allocation = parse_allocation(a.attacks, g);
  const Rational tau = parse_rational(a.temperature);
  if (tau <= 0) throw std::invalid_argument("--temperature must be positive");
  const Rational burn = parse_rational(a.burn_in);
  if (burn < 0 || burn >= 1) throw std::invalid_argument("--burn-in must lie in [0, 1)");
  if (a.steps == 0) throw std::invalid_argument("--steps must be positive");
  if (g.nodes() > kMaxStabilityAgents) {
    throw ResourceError("simulation is capped at " + std::to_string(kMaxStabilityAgents) + " agents");
  }

  const auto result = stability_check(g, allocation, params, to_double(tau), a.steps, a.seed,
                                      to_double(burn));
  std::ostringstream body;
  write_csv(body, result.distribution);
  emit(a.out, "simulate.csv", body.str(), out);
  const int agents = result.distribution.agents;
  out << "modal=" << state_label(result.modal, agents) << " emergent=" << state_label(result.emergent, agents)
      << " match=" << (result.match ? "true" : "false") << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graphical coordination games under budgeted adversarial influence", "gcg"};
  app.require_subcommand(1);

  Common kmax_args;
  auto* kmax = app.add_subcommand("kmax", "Attack-free budget thresholds for both adversary types");
  add_params(kmax, kmax_args);

  CurveArgs curve_args;
  auto* curve = app.add_subcommand("curve", "Welfare against budget for a graph (CSV)");
  add_params(curve, curve_args.common, false);
  curve->add_option("--graph", curve_args.graph, "SPARSE, LINE, COMPLETE, ALL or a profile like 3:4+2lone");
  curve->add_option("--adv", curve_args.adversary, "M or A");
  curve->add_option("--k", curve_args.k_range, "Budget or range lo..hi (default 0..3m)");
  curve->add_option("--out", curve_args.out, "Output CSV path");

  OptimizeArgs opt_args;
  auto* optimize = app.add_subcommand("optimize", "Operator-optimal topology");
  add_params(optimize, opt_args.common);
  optimize->add_option("--adv", opt_args.adversary, "M or A")->required();
  optimize->add_option("--k", opt_args.k, "Attack budget")->required();
  optimize->add_flag("--exact", opt_args.exact, "Also search every component profile");

  RegretArgs regret_args;
  auto* regret = app.add_subcommand("regret", "Relative regret of planning for the wrong type");
  add_params(regret, regret_args.common);
  regret->add_option("--planned", regret_args.planned, "M or A")->required();
  regret->add_option("--realized", regret_args.realized, "M or A")->required();
  regret->add_option("--k", regret_args.k, "Attack budget")->required();
  regret->add_flag("--exact", regret_args.exact, "Exhaustive topology search instead of the canonical rule");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run a verification suite (CSV report)");
  verify->add_option("--suite", verify_args.suite, "Suite name")->required();
  verify->add_option("--m-max", verify_args.m_max, "Largest m (or m_c) to sweep")->required();
  verify->add_option("--m-min", verify_args.m_min, "Smallest m to sweep");
  verify->add_option("--grid", verify_args.grid, "alpha:p pairs, e.g. 1/2:1/4,1:9/10");
  verify->add_option("--out", verify_args.out, "Output CSV path");

  SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "Log-linear learning on a realized profile (CSV)");
  simulate->add_option("--profile", sim_args.profile, "Component profile, e.g. 1:2 or 3:4+2lone")->required();
  simulate->add_option("--attacks", sim_args.attacks, "component:k pairs, e.g. 0:1,2:1");
  simulate->add_option("--alpha", sim_args.common.alpha, "Payoff gain")->required();
  simulate->add_option("--p", sim_args.common.p, "Personal cost")->required();
  simulate->add_option("--temperature", sim_args.temperature, "Learning temperature");
  simulate->add_option("--steps", sim_args.steps, "Revision steps");
  simulate->add_option("--seed", sim_args.seed, "Generator seed");
  simulate->add_option("--burn-in", sim_args.burn_in, "Fraction of steps discarded");
  simulate->add_option("--out", sim_args.out, "Output CSV path");

  std::vector<std::string> argv_storage{"gcg"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadArguments;
  }

  try {
    if (kmax->parsed()) cmd_kmax(kmax_args, out);
    else if (curve->parsed()) cmd_curve(curve_args, out);
    else if (optimize->parsed()) cmd_optimize(opt_args, out);
    else if (regret->parsed()) cmd_regret(regret_args, out);
    else if (verify->parsed()) cmd_verify(verify_args, out);
    else if (simulate->parsed()) cmd_simulate(sim_args, out);
  } catch (const VerificationFailed&) {
    return kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadArguments;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCeiling;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace gcg::cli
