// Command-line front end: constructions, graph6 checking, exact
// extremal search, closed-form verification, and the S_{2,3} probe.
//
// Exit codes: 0 success / all rows match, 1 usage error, 2 a computed
// value contradicts a closed form, 3 resource cap refusal.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "opturan/cache.hpp"
#include "opturan/canonical.hpp"
#include "opturan/constructions.hpp"
#include "opturan/graph6.hpp"
#include "opturan/mops.hpp"
#include "opturan/planarity.hpp"
#include "opturan/report.hpp"
#include "opturan/search.hpp"
#include "opturan/version.hpp"

namespace {

using namespace opturan;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitResource = 3;

struct CommonFlags {
  int workers = 0;
  bool override_cap = false;
  std::string format = "table";
  std::string cache_path;
};

void add_common(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--workers", flags->workers,
                  "parallel workers (0 = all cores)");
  cmd->add_flag("--override-cap", flags->override_cap,
                "lift the default size caps (searches may get slow)");
  cmd->add_option("--format", flags->format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  cmd->add_option("--cache", flags->cache_path,
                  "result cache file (default: OPTURAN_CACHE env var)");
}

EngineOptions engine_options(const CommonFlags& flags,
                             std::optional<ResultCache>& cache) {
  EngineOptions opts;
  opts.workers = flags.workers;
  opts.override_cap = flags.override_cap;
  std::string path = flags.cache_path;
  if (path.empty()) {
    const char* env = std::getenv("OPTURAN_CACHE");
    if (env != nullptr) path = env;
  }
  if (!path.empty()) {
    cache.emplace(path);
    opts.cache = &*cache;
  }
  return opts;
}

DoubleStarSpec default_family_spec(const std::string& family) {
  if (family == "Tn") return {3, 3};
  if (family == "On") return {2, 4};
  if (family == "H" || family == "Hprime") return {2, 3};
  return {2, 2};  // Mk, Gn, 2M5
}

void print_graph_summary(const Graph& g, const DoubleStarSpec& spec) {
  std::cout << graph6_encode(g) << '\n';
  std::cout << "n=" << g.vertex_count() << " edges=" << g.edge_count()
            << " maxdeg=" << g.max_degree()
            << " connected=" << (is_connected(g) ? "yes" : "no")
            << " outerplanar=" << (is_outerplanar(g) ? "yes" : "no")
            << " free[S_{" << spec.p << "," << spec.q
            << "}]=" << (is_double_star_free(g, spec) ? "yes" : "no")
            << '\n';
}

int run_construct(const std::string& family, int n, int k, int t, int i,
                  std::optional<int> p, std::optional<int> q) {
  DoubleStarSpec spec = default_family_spec(family);
  if (p && q) spec = DoubleStarSpec(*p, *q);

  Graph g(0);
  if (family == "Mk") {
    g = fan_mop(k);
  } else if (family == "Gn") {
    g = construct_gn(n);
  } else if (family == "2M5") {
    g = construct_two_m5();
  } else if (family == "Tn") {
    g = construct_tn(n);
  } else if (family == "On") {
    g = construct_on(n);
  } else if (family == "H") {
    g = construct_h();
  } else if (family == "Hprime") {
    g = construct_hprime(t, i);
  } else {
    std::cerr << "unknown family '" << family << "'\n";
    return kExitUsage;
  }
  print_graph_summary(g, spec);
  return kExitOk;
}

int run_check(std::istream& in, const DoubleStarSpec& spec) {
  std::string line;
  long long index = 0;
  bool parse_failure = false;
  while (std::getline(in, line)) {
    ++index;
    if (line.empty()) continue;
    try {
      Graph g = graph6_decode(line);
      std::cout << index << " ok n=" << g.vertex_count()
                << " edges=" << g.edge_count()
                << " connected=" << (is_connected(g) ? "yes" : "no")
                << " outerplanar=" << (is_outerplanar(g) ? "yes" : "no")
                << " free=" << (is_double_star_free(g, spec) ? "yes" : "no")
                << '\n';
    } catch (const Graph6ParseError& err) {
      parse_failure = true;
      std::cout << index << " error offset=" << err.offset() << " "
                << err.what() << '\n';
    }
  }
  return parse_failure ? kExitUsage : kExitOk;
}

int run_ex(int n, const DoubleStarSpec& spec, Mode mode,
           const CommonFlags& flags) {
  std::optional<ResultCache> cache;
  EngineOptions opts = engine_options(flags, cache);
  ExtremalResult result = mode == Mode::kConnected
                              ? ex_connected(n, spec, opts)
                              : ex_general(n, spec, opts);
  TuranBound bound = turan_formula(n, spec, mode);
  std::cout << render_ex_report(result, bound, parse_format(flags.format));
  std::cerr << "elapsed " << result.elapsed_seconds << "s\n";
  return ex_status(result, bound) == "MISMATCH" ? kExitMismatch : kExitOk;
}

int run_verify(int n_max, const CommonFlags& flags) {
  std::optional<ResultCache> cache;
  EngineOptions opts = engine_options(flags, cache);
  VerifyReport report = verify_theorems(n_max, opts);
  std::cout << render_verify_report(report, parse_format(flags.format));
  return report.all_match ? kExitOk : kExitMismatch;
}

int run_probe(int from, int to, const CommonFlags& flags) {
  std::optional<ResultCache> cache;
  EngineOptions opts = engine_options(flags, cache);
  ProbeReport report = probe_conjecture(from, to, opts);
  std::cout << render_probe_report(report, parse_format(flags.format));
  return report.lower_bounds_ok ? kExitOk : kExitMismatch;
}

int run_mops(int n, bool override_cap) {
  for (const auto& g :
       enumerate_mops(n, override_cap ? kEnumerationCap : kSearchCap))
    std::cout << graph6_encode(g) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact outerplanar Turan numbers for double stars: constructions, "
      "recognition, exhaustive search, verification, conjecture probe"};
  app.set_version_flag("--version", std::string(kCodeVersion));
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand(
      "construct", "emit a named extremal family member as graph6");
  std::string family;
  int c_n = 0, c_k = 5, c_t = 1, c_i = 0;
  std::optional<int> c_p, c_q;
  construct
      ->add_option("--family", family, "Mk, Gn, 2M5, Tn, On, H or Hprime")
      ->required()
      ->check(CLI::IsMember({"Mk", "Gn", "2M5", "Tn", "On", "H", "Hprime"}));
  construct->add_option("--n", c_n, "order (Gn, Tn, On)");
  construct->add_option("--k", c_k, "fan order (Mk)");
  construct->add_option("--t", c_t, "number of chained blocks (Hprime)");
  construct->add_option("--i", c_i, "residue part 0..5 (Hprime)");
  construct->add_option("--p", c_p, "report freeness for this p");
  construct->add_option("--q", c_q, "report freeness for this q");

  // check
  auto* check = app.add_subcommand(
      "check", "verdict per graph6 line: order, connectivity, "
               "outerplanarity, S_{p,q}-freeness");
  int ck_p = 2, ck_q = 2;
  std::string check_input;
  check->add_option("--p", ck_p, "double star p (default 2)");
  check->add_option("--q", ck_q, "double star q (default 2)");
  check->add_option("input", check_input, "graph6 file (default: stdin)");

  // ex
  auto* ex = app.add_subcommand(
      "ex", "exact ex(n, S_{p,q}) by exhaustive search");
  int ex_n = 0, ex_p = 2, ex_q = 2;
  std::string ex_mode = "general";
  CommonFlags ex_flags;
  ex->add_option("--n", ex_n, "order")->required();
  ex->add_option("--p", ex_p, "double star p (default 2)");
  ex->add_option("--q", ex_q, "double star q (default 2)");
  ex->add_option("--mode", ex_mode, "connected or general")
      ->check(CLI::IsMember({"connected", "general"}));
  add_common(ex, &ex_flags);

  // verify
  auto* verify = app.add_subcommand(
      "verify", "search every order up to n-max and compare against the "
                "closed forms");
  int v_nmax = 0;
  CommonFlags v_flags;
  verify->add_option("--n-max", v_nmax, "largest order")->required();
  add_common(verify, &v_flags);

  // probe
  auto* probe = app.add_subcommand(
      "probe", "exact S_{2,3} values per order, connected vs general");
  int p_from = 7, p_to = 10;
  CommonFlags p_flags;
  probe->add_option("--from", p_from, "first order");
  probe->add_option("--to", p_to, "last order");
  add_common(probe, &p_flags);

  // mops
  auto* mops = app.add_subcommand(
      "mops", "stream one maximal outerplanar graph per isomorphism "
              "class as graph6");
  int m_n = 0;
  bool m_override = false;
  mops->add_option("--n", m_n, "order")->required();
  mops->add_flag("--override-cap", m_override, "lift the size cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed())
      return run_construct(family, c_n, c_k, c_t, c_i, c_p, c_q);
    if (check->parsed()) {
      DoubleStarSpec spec(ck_p, ck_q);
      if (check_input.empty()) return run_check(std::cin, spec);
      std::ifstream file(check_input);
      if (!file) {
        std::cerr << "cannot open '" << check_input << "'\n";
        return kExitUsage;
      }
      return run_check(file, spec);
    }
    if (ex->parsed())
      return run_ex(ex_n, DoubleStarSpec(ex_p, ex_q), parse_mode(ex_mode),
                    ex_flags);
    if (verify->parsed()) return run_verify(v_nmax, v_flags);
    if (probe->parsed()) return run_probe(p_from, p_to, p_flags);
    if (mops->parsed()) return run_mops(m_n, m_override);
  } catch (const ResourceCapError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
