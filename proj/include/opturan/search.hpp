#ifndef OPTURAN_SEARCH_HPP
#define OPTURAN_SEARCH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opturan/constructions.hpp"
#include "opturan/doublestar.hpp"
#include "opturan/graph.hpp"
#include "opturan/mops.hpp"

namespace opturan {

class ResultCache;

struct EngineOptions {
  int workers = 0;           // 0: all available threads
  int cap = kSearchCap;      // largest n accepted
  bool override_cap = false; // raise cap to the enumeration limit
  int witness_cap = 8;       // optimum graphs kept per result
  ResultCache* cache = nullptr;
};

/// Outcome of one extremal computation. Witnesses are graph6 strings of
/// canonically relabeled optimum graphs, sorted, so the first entry is
/// the canonical-least witness; the list is identical for any worker
/// count.
struct ExtremalResult {
  int n = 0;
  int p = 0;
  int q = 0;
  Mode mode = Mode::kConnected;
  long long value = 0;
  std::vector<std::string> witnesses;
  long long mop_count = 0;
  double elapsed_seconds = 0.0;
};

/// Maximum edge count of a spanning subgraph of `mop` that is
/// S_{p,q}-free (and connected if required), with one optimum witness
/// (the canonical-least one). Branch and bound seeded by
/// `lower_bound_hint`, which must be achievable or -1. Returns -1 and
/// an empty graph when no spanning subgraph qualifies, which can happen
/// only in connected mode with p = 1 (for p >= 2 the host's boundary
/// path is always free).
std::pair<long long, Graph> max_free_subgraph(const Graph& mop,
                                              const DoubleStarSpec& spec,
                                              bool require_connected,
                                              long long lower_bound_hint);

/// Exact ex over connected S_{p,q}-free outerplanar graphs on n
/// vertices. Every such graph is a spanning subgraph of some maximal
/// outerplanar graph on the same vertex set (edges can be added to any
/// outerplanar graph until it is maximal), so scanning spanning
/// subgraphs of each triangulation class covers the whole space.
ExtremalResult ex_connected(int n, const DoubleStarSpec& spec,
                            const EngineOptions& opts = {});

/// Exact ex over all S_{p,q}-free outerplanar graphs on n vertices, by
/// dynamic programming over the size of one connected component:
/// ex(n) = max(ex_c(n), max_k ex_c(k) + ex(n-k)).
ExtremalResult ex_general(int n, const DoubleStarSpec& spec,
                          const EngineOptions& opts = {});

struct VerifyRow {
  int n;
  int p;
  int q;
  Mode mode;
  long long predicted;
  long long computed;
  bool match;
  std::string rule;
};

struct VerifyReport {
  int n_max = 0;
  std::vector<VerifyRow> rows;
  bool all_match = true;
};

/// Runs the search for every (n, p, q, mode) with n <= n_max where a
/// closed form gives an exact value, and compares.
VerifyReport verify_theorems(int n_max, const EngineOptions& opts = {});

struct ProbeRow {
  int n;
  long long connected_value;
  long long general_value;
  long long formula_value;  // -1 when the formula does not apply
  bool meets_lower_bound;   // exact >= formula (checked for n >= 7)
  bool modes_equal;
  bool matches_formula;     // recorded, never asserted
  std::string witness_connected;
  std::string witness_general;
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
  bool lower_bounds_ok = true;
};

/// Exact S_{2,3} values for each n in [from, to], compared against the
/// conjectured closed form. Equality is reported, not asserted.
ProbeReport probe_conjecture(int from, int to,
                             const EngineOptions& opts = {});

}  // namespace opturan

#endif
