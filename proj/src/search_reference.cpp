#include "opturan/search_reference.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "opturan/canonical.hpp"
#include "opturan/graph6.hpp"
#include "opturan/planarity.hpp"
#include "opturan/subgraph.hpp"

namespace opturan {

namespace {

// Plain branch and bound: branch on the edges of any embedded copy
// found by the generic matcher.
struct ReferenceScan {
  const Graph* base = nullptr;
  std::vector<std::pair<int, int>> edges;
  Graph pattern;
  bool connected = false;
  long long best = -1;
  std::map<std::string, Graph> optima;
  bool collecting = false;

  void walk(std::uint64_t removed, std::uint64_t kept) {
    const long long bound =
        static_cast<long long>(edges.size()) - std::popcount(removed);
    if (collecting ? bound < best : bound <= best) return;

    Graph g = *base;
    for (std::uint64_t rest = removed; rest != 0; rest &= rest - 1) {
      auto [u, v] = edges[static_cast<std::size_t>(std::countr_zero(rest))];
      g.remove_edge(u, v);
    }
    if (connected && !is_connected(g)) return;

    auto mapping = contains_subgraph(g, pattern);
    if (!mapping) {
      if (collecting)
        optima.emplace(canonical_form(g), canonical_graph(g));
      else
        best = bound;
      return;
    }

    // Edges of the embedded copy: center edge first, then the leaves,
    // translated through the mapping. Pattern layout: 0-1 centers.
    std::vector<int> copy_edges;
    auto index_of = [&](int u, int v) {
      for (std::size_t i = 0; i < edges.size(); ++i)
        if ((edges[i].first == u && edges[i].second == v) ||
            (edges[i].first == v && edges[i].second == u))
          return static_cast<int>(i);
      throw std::logic_error("copy edge missing from host");
    };
    for (auto [pu, pv] : pattern.edges())
      copy_edges.push_back(
          index_of((*mapping)[static_cast<std::size_t>(pu)],
                   (*mapping)[static_cast<std::size_t>(pv)]));
    std::sort(copy_edges.begin(), copy_edges.end());

    std::uint64_t commit = kept;
    for (int e : copy_edges) {
      const std::uint64_t bit = std::uint64_t{1} << e;
      if ((commit & bit) != 0) continue;
      walk(removed | bit, commit);
      commit |= bit;
    }
  }
};

}  // namespace

std::pair<long long, Graph> max_free_subgraph_reference(
    const Graph& mop, const DoubleStarSpec& spec, bool require_connected) {
  if (!is_maximal_outerplanar(mop))
    throw std::invalid_argument(
        "max_free_subgraph_reference requires a maximal outerplanar host");
  if (mop.edge_count() > 64)
    throw std::invalid_argument(
        "spanning-subgraph search supports at most 64 edges");
  ReferenceScan scan;
  scan.base = &mop;
  scan.edges = mop.edges();
  scan.pattern = double_star_graph(spec);
  scan.connected = require_connected;
  scan.walk(0, 0);
  const long long value = scan.best;
  if (value < 0) return {-1, Graph(0)};
  scan.collecting = true;
  scan.walk(0, 0);
  return {value, scan.optima.begin()->second};
}

ExtremalResult ex_connected_reference(int n, const DoubleStarSpec& spec,
                                      int witness_cap) {
  if (n < 1)
    throw std::invalid_argument("reference search requires n >= 1");
  ExtremalResult result;
  result.n = n;
  result.p = spec.p;
  result.q = spec.q;
  result.mode = Mode::kConnected;
  if (n <= 2) {
    Graph g(n);
    if (n == 2) g.add_edge(0, 1);
    result.value = g.edge_count();
    result.witnesses = {graph6_encode(g)};
    return result;
  }

  std::map<std::string, Graph> optima;
  long long best = -1;
  const auto mops = enumerate_mops(n);
  const Graph pattern = double_star_graph(spec);
  for (const auto& mop : mops) {
    ReferenceScan scan;
    scan.base = &mop;
    scan.edges = mop.edges();
    scan.pattern = pattern;
    scan.connected = true;
    scan.walk(0, 0);
    best = std::max(best, scan.best);
  }
  for (const auto& mop : mops) {
    ReferenceScan scan;
    scan.base = &mop;
    scan.edges = mop.edges();
    scan.pattern = pattern;
    scan.connected = true;
    scan.best = best;
    scan.collecting = true;
    scan.walk(0, 0);
    for (auto& [canon, graph] : scan.optima) optima.emplace(canon, graph);
  }
  result.value = best;
  result.mop_count = static_cast<long long>(mops.size());
  for (const auto& [canon, graph] : optima) {
    if (static_cast<int>(result.witnesses.size()) >= witness_cap) break;
    result.witnesses.push_back(graph6_encode(graph));
  }
  return result;
}

}  // namespace opturan
