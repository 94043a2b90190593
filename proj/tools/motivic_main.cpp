// motivic: command-line front end for the power structure library.
//
// Exit codes: 0 all checks pass, 1 an identity failed, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "motivic/errors.hpp"
#include "motivic/oracle.hpp"
#include "motivic/power_structure.hpp"
#include "motivic/suites.hpp"
#include "motivic/text.hpp"
#include "motivic/varieties.hpp"
#include "motivic/zeta.hpp"

namespace {

using motivic::SuiteResult;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool color_enabled() {
  const char* env = std::getenv("MOTIVIC_COLOR");
  return env != nullptr && std::string(env) == "1";
}

std::string verdict(bool pass) {
  if (!color_enabled()) return pass ? "PASS" : "FAIL";
  return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

std::string json_text(const ordered_json& j) { return j.dump(2) + "\n"; }

std::vector<std::string> series_coefficients(const motivic::TruncatedSeries& s) {
  std::vector<std::string> out;
  for (const auto& c : s.coefficients()) out.push_back(motivic::format_class(c));
  return out;
}

// ---------------------------------------------------------------- zeta, power

struct ZetaArgs {
  std::string cls;
  int order = 0;
  bool json = false;
};

int cmd_zeta(const ZetaArgs& args, std::ostream& out) {
  if (args.order < 0) throw UsageError("--order must be nonnegative");
  const auto c = motivic::parse_class(args.cls);
  const auto zeta = motivic::kapranov_zeta(c, args.order);
  if (args.json) {
    out << json_text({{"class", motivic::format_class(c)},
                      {"order", args.order},
                      {"series", motivic::format_series(zeta)},
                      {"coefficients", series_coefficients(zeta)}});
  } else {
    out << motivic::format_series(zeta) << "\n";
  }
  return kExitPass;
}

struct PowerArgs {
  std::string series;
  std::string exponent;
  int order = 8;
  bool json = false;
};

int cmd_power(const PowerArgs& args, std::ostream& out) {
  if (args.order < 0) throw UsageError("--order must be nonnegative");
  const auto a = motivic::parse_series(args.series, args.order);
  const auto m = motivic::parse_class(args.exponent);
  const auto result = motivic::power(a, m);
  if (args.json) {
    out << json_text({{"series", motivic::format_series(a)},
                      {"exponent", motivic::format_class(m)},
                      {"order", result.order()},
                      {"result", motivic::format_series(result)},
                      {"coefficients", series_coefficients(result)}});
  } else {
    out << motivic::format_series(result) << "\n";
  }
  return kExitPass;
}

// --------------------------------------------------------------------- verify

struct VerifyArgs {
  std::string target;
  std::uint64_t seed = 0;
  std::optional<int> trials;
  std::optional<int> n;
  std::optional<int> order;
  std::optional<int> max_n;
  std::optional<int> max_sum;
  std::optional<int> max_m;
  std::optional<int> max_dim;
  std::optional<int> m;
  std::optional<std::string> cls;
  bool json = false;
};

// Flags each target accepts besides --seed and --json.
const std::map<std::string, std::set<std::string>>& verify_flags() {
  static const std::map<std::string, std::set<std::string>> flags{
      {"theorem1", {"--n", "--max-n", "--order"}},
      {"scaling", {"--class", "--order"}},
      {"lemma", {"--trials", "--order"}},
      {"theorem2-finite", {"--max-sum", "--max-m", "--max-dim"}},
      {"properties", {"--trials", "--order"}},
      {"bcstar", {"--order"}},
      {"oracle", {"--m"}},
      {"all", {}},
  };
  return flags;
}

int positive(const std::optional<int>& v, int fallback, const char* flag, int minimum = 1) {
  const int value = v.value_or(fallback);
  if (value < minimum) throw UsageError(std::string(flag) + " must be >= " + std::to_string(minimum));
  return value;
}

std::vector<SuiteResult> run_target(const VerifyArgs& a) {
  std::vector<SuiteResult> suites;
  const std::string& t = a.target;
  if (t == "theorem1" || t == "all") {
    const int order = positive(a.order, 16, "--order", 0);
    if (a.n) {
      const int n = positive(a.n, 0, "--n", 0);
      suites.push_back({"theorem1", {motivic::verify_theorem1(n, order)}});
    } else {
      suites.push_back(motivic::run_theorem1_suite(positive(a.max_n, 5, "--max-n", 0), order));
    }
  }
  if (t == "scaling" || t == "all") {
    const int order = positive(a.order, 12, "--order", 0);
    if (a.cls) {
      suites.push_back({"scaling", {motivic::verify_scaling(motivic::parse_class(*a.cls), order)}});
    } else {
      suites.push_back(motivic::run_scaling_suite(order));
    }
  }
  if (t == "lemma" || t == "all") {
    suites.push_back(motivic::run_lemma_suite(a.seed, positive(a.trials, 200, "--trials", 0),
                                              positive(a.order, 10, "--order", 0)));
  }
  if (t == "properties" || t == "all") {
    suites.push_back(motivic::run_property_suite(a.seed, positive(a.trials, 500, "--trials", 0),
                                                 positive(a.order, 10, "--order")));
    suites.push_back(motivic::run_power_finite_suite(a.seed));
  }
  if (t == "theorem2-finite" || t == "all") {
    suites.push_back(motivic::run_theorem2_finite_suite(positive(a.max_sum, 12, "--max-sum")));
    suites.push_back(
        motivic::run_strata_suite(positive(a.max_m, 8, "--max-m"), positive(a.max_dim, 40, "--max-dim", 0)));
  }
  if (t == "bcstar" || t == "all") {
    suites.push_back(motivic::run_bcstar_suite(positive(a.order, 8, "--order")));
  }
  if (t == "oracle" || t == "all") {
    suites.push_back(motivic::run_oracle_suite(positive(a.m, 5, "--m")));
    suites.push_back(motivic::run_brute_force_suite());
  }
  return suites;
}

void print_failures(const SuiteResult& suite, std::ostream& out) {
  for (const auto& report : suite.reports) {
    for (const auto& f : report.failures()) {
      out << "  " << verdict(false) << " " << report.name() << " " << report.params().dump() << "\n"
          << "    identity: " << f.identity << "\n"
          << "    lhs: " << f.lhs << "\n"
          << "    rhs: " << f.rhs << "\n";
    }
  }
}

int cmd_verify(const VerifyArgs& args, const std::set<std::string>& given, std::ostream& out) {
  const auto& table = verify_flags();
  const auto allowed = table.find(args.target);
  if (allowed == table.end()) throw UsageError("unknown verify target: " + args.target);
  for (const auto& flag : given) {
    if (!allowed->second.contains(flag)) {
      throw UsageError("flag " + flag + " does not apply to verify " + args.target);
    }
  }

  const auto suites = run_target(args);
  bool pass = true;
  for (const auto& s : suites) pass = pass && s.passed();

  if (args.json) {
    ordered_json j{{"target", args.target}, {"seed", args.seed}, {"pass", pass}, {"suites", ordered_json::array()}};
    for (const auto& s : suites) {
      ordered_json reports = ordered_json::array();
      for (const auto& r : s.reports) reports.push_back(r.to_json());
      j["suites"].push_back({{"name", s.name}, {"pass", s.passed()}, {"reports", std::move(reports)}});
    }
    out << json_text(j);
    return pass ? kExitPass : kExitFailed;
  }

  if (args.target == "bcstar" || args.target == "all") {
    const auto c = motivic::stack_zeta_bcstar(args.target == "bcstar" ? args.order.value_or(8) : 8);
    for (std::size_t m = 0; m < c.size(); ++m) {
      out << "c_" << m << " = " << motivic::format_class(c[m]) << "\n";
    }
  }
  for (const auto& s : suites) {
    std::size_t checks = 0;
    for (const auto& r : s.reports) checks += r.checks();
    out << verdict(s.passed()) << "  " << s.name << ": " << s.reports.size() << " cells, " << checks
        << " identities";
    if (!s.passed()) out << ", " << s.failed_count() << " failing cells";
    out << "\n";
    print_failures(s, out);
  }
  out << (pass ? "all identities hold" : "some identities failed") << " (seed " << args.seed << ")\n";
  return pass ? kExitPass : kExitFailed;
}

// --------------------------------------------------------------------- strata

struct StrataArgs {
  int m = 1;
  int max_dim = 0;
  bool json = false;
};

int cmd_strata(const StrataArgs& args, std::ostream& out) {
  if (args.m < 1) throw UsageError("--m must be >= 1");
  if (args.max_dim < 0) throw UsageError("--max-dim must be >= 0");
  const auto report = motivic::verify_strata(args.m, args.max_dim);

  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  for (int n = 0; n <= args.max_dim; ++n) {
    const auto pairs = motivic::match_strata(args.m, n);
    const auto by_part = motivic::count_partitions_bounded_part(n, args.m);
    const auto by_length = motivic::count_partitions_bounded_length(n, args.m);
    text << "dim " << n << ": " << pairs.size() << " strata <-> " << by_part << " cells (at most " << args.m
         << " parts: " << by_length << ")\n";
    ordered_json matches = ordered_json::array();
    for (const auto& [sig, lambda] : pairs) {
      const int stratum_level = motivic::stratum_min_level(sig);
      const int cell_level = motivic::cell_min_level(lambda, args.m);
      text << "  " << motivic::to_string(sig) << " <-> " << motivic::to_string(lambda) << "  levels S^" << args.m
           << " P^" << stratum_level << ", Gr(" << args.m << "," << cell_level << ")\n";
      matches.push_back({{"signature", sig.multiplicities},
                         {"partition", lambda.parts},
                         {"stratum_level", stratum_level},
                         {"cell_level", cell_level}});
    }
    rows.push_back({{"dim", n},
                    {"strata", pairs.size()},
                    {"cells", by_part},
                    {"cells_by_length", by_length},
                    {"matches", std::move(matches)}});
  }

  if (args.json) {
    out << json_text({{"m", args.m}, {"max_dim", args.max_dim}, {"pass", report.passed()}, {"rows", rows},
                      {"report", report.to_json()}});
  } else {
    out << text.str();
    out << verdict(report.passed()) << "  bijection checked, " << report.checks() << " identities\n";
    for (const auto& f : report.failures()) {
      out << "  " << f.identity << ": " << f.lhs << " vs " << f.rhs << "\n";
    }
  }
  return report.passed() ? kExitPass : kExitFailed;
}

// --------------------------------------------------------------------- oracle

struct OracleArgs {
  std::string space;
  std::int64_t q = 2;
  int m = 1;
  bool brute_force = false;
  bool json = false;
};

int cmd_oracle(const OracleArgs& args, std::ostream& out) {
  if (args.q < 2) throw UsageError("--q must be >= 2");
  if (args.m < 0) throw UsageError("--m must be >= 0");
  const auto space = motivic::parse_space(args.space);
  const auto cls = motivic::space_class(space);
  const auto table = motivic::counts_from_class(cls, args.q, args.m);

  const mpz_class motivic_count = motivic::eval_at(motivic::symmetric_power_class(cls, args.m), args.q).get_num();
  const mpz_class weil = motivic::weil_coefficients(table, args.m);
  const mpz_class census = motivic::cycles_from_closed_points(motivic::closed_points(table), args.m);
  std::optional<mpz_class> brute;
  if (args.brute_force) brute = mpz_class(std::to_string(motivic::brute_force_cycles(space, args.q, args.m)));

  bool agree = motivic_count == weil && weil == census && (!brute || *brute == weil);
  if (args.json) {
    ordered_json j{{"space", motivic::to_string(space)},
                   {"class", motivic::format_class(cls)},
                   {"q", args.q},
                   {"m", args.m},
                   {"motivic", motivic_count.get_str()},
                   {"weil", weil.get_str()},
                   {"census", census.get_str()}};
    if (brute) j["brute_force"] = brute->get_str();
    j["table"] = motivic::to_json(table);
    j["agree"] = agree;
    out << json_text(j);
  } else {
    out << "space   " << motivic::to_string(space) << "  [" << motivic::format_class(cls) << "]\n"
        << "q = " << args.q << ", m = " << args.m << "\n"
        << "motivic " << motivic_count.get_str() << "\n"
        << "weil    " << weil.get_str() << "\n"
        << "census  " << census.get_str() << "\n";
    if (brute) out << "brute   " << brute->get_str() << "\n";
    out << verdict(agree) << (agree ? "  all channels agree" : "  channels disagree") << "\n";
  }
  return agree ? kExitPass : kExitFailed;
}

std::set<std::string> given_flags(const CLI::App* app) {
  std::set<std::string> out;
  for (const auto* opt : app->get_options()) {
    if (opt->count() == 0) continue;
    const auto& names = opt->get_lnames();
    if (!names.empty()) out.insert("--" + names.front());
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power structure over the Grothendieck ring: exact computation and verification"};
  app.require_subcommand(1);

  ZetaArgs zeta;
  auto* zeta_cmd = app.add_subcommand("zeta", "Kapranov zeta function of a class, truncated");
  zeta_cmd->add_option("--class", zeta.cls, "class expression, e.g. 1+L")->required();
  zeta_cmd->add_option("--order", zeta.order, "highest power of T kept")->required();
  zeta_cmd->add_flag("--json", zeta.json);

  PowerArgs power;
  auto* power_cmd = app.add_subcommand("power", "(A(T))^M for a series A with constant term 1");
  power_cmd->add_option("--series", power.series, "series, e.g. 1+T or 1+L*T+O(T^5)")->required();
  power_cmd->add_option("--exponent", power.exponent, "exponent in Z[L, 1/L]")->required();
  power_cmd->add_option("--order", power.order, "highest power of T kept")->capture_default_str();
  power_cmd->add_flag("--json", power.json);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("target", verify.target, "theorem1|scaling|lemma|theorem2-finite|properties|bcstar|oracle|all")
      ->required()
      ->check(CLI::IsMember({"theorem1", "scaling", "lemma", "theorem2-finite", "properties", "bcstar", "oracle", "all"}));
  verify_cmd->add_option("--seed", verify.seed, "seed for randomized suites")->capture_default_str();
  verify_cmd->add_option("--trials", verify.trials, "random cases (lemma, properties)");
  verify_cmd->add_option("--n", verify.n, "single n (theorem1)");
  verify_cmd->add_option("--max-n", verify.max_n, "n = 0..max (theorem1)");
  verify_cmd->add_option("--order", verify.order, "series order");
  verify_cmd->add_option("--class", verify.cls, "single class (scaling)");
  verify_cmd->add_option("--max-sum", verify.max_sum, "m + N bound (theorem2-finite)");
  verify_cmd->add_option("--max-m", verify.max_m, "strata: m = 1..max (theorem2-finite)");
  verify_cmd->add_option("--max-dim", verify.max_dim, "strata: dimensions 0..max (theorem2-finite)");
  verify_cmd->add_option("--m", verify.m, "cycle degree bound (oracle)");
  verify_cmd->add_flag("--json", verify.json);

  StrataArgs strata;
  auto* strata_cmd = app.add_subcommand("strata", "strata of S^m CP^inf against Schubert cells");
  strata_cmd->add_option("--m", strata.m)->required();
  strata_cmd->add_option("--max-dim", strata.max_dim)->required();
  strata_cmd->add_flag("--json", strata.json);

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "degree-m zero-cycles over F_q on every channel");
  oracle_cmd->add_option("--space", oracle.space, "A^n, P^N or Gr(m,N)")->required();
  oracle_cmd->add_option("--q", oracle.q, "field size")->required();
  oracle_cmd->add_option("--m", oracle.m, "cycle degree")->required();
  oracle_cmd->add_flag("--brute-force", oracle.brute_force, "also enumerate cycles directly");
  oracle_cmd->add_flag("--json", oracle.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::ostringstream out;
  int code = kExitPass;
  try {
    if (zeta_cmd->parsed()) code = cmd_zeta(zeta, out);
    if (power_cmd->parsed()) code = cmd_power(power, out);
    if (verify_cmd->parsed()) {
      auto flags = given_flags(verify_cmd);
      flags.erase("--seed");
      flags.erase("--json");
      code = cmd_verify(verify, flags, out);
    }
    if (strata_cmd->parsed()) code = cmd_strata(strata, out);
    if (oracle_cmd->parsed()) code = cmd_oracle(oracle, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const motivic::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cout << out.str();
  return code;
}
