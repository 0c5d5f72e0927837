#include "opturan/planarity.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>

#include "opturan/blocks.hpp"

namespace opturan {

namespace {

// Enumerates Hamilton cycles as vertex orders starting at 0, oriented so
// order[1] < order[n-1]; each cycle edge set is produced exactly once.
struct HamiltonSearch {
  const Graph* g;
  int n;
  int want;  // stop after this many cycles
  std::vector<int> path;
  std::uint64_t used = 1;
  std::vector<std::vector<int>> cycles;

  void run() {
    path = {0};
    extend();
  }

  void extend() {
    if (static_cast<int>(cycles.size()) >= want) return;
    if (static_cast<int>(path.size()) == n) {
      if (g->has_edge(path.back(), 0) && path[1] < path.back())
        cycles.push_back(path);
      return;
    }
    std::uint64_t candidates = g->neighbors(path.back()) & ~used;
    while (candidates != 0) {
      int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      path.push_back(v);
      used |= std::uint64_t{1} << v;
      extend();
      used &= ~(std::uint64_t{1} << v);
      path.pop_back();
      if (static_cast<int>(cycles.size()) >= want) return;
    }
  }
};

std::vector<std::pair<int, int>> chords_of(const Graph& g,
                                           const std::vector<int>& order) {
  const int n = g.vertex_count();
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  std::vector<std::pair<int, int>> chords;
  for (auto [u, v] : g.edges()) {
    int i = pos[static_cast<std::size_t>(u)];
    int j = pos[static_cast<std::size_t>(v)];
    if (i > j) std::swap(i, j);
    if (j - i == 1 || (i == 0 && j == n - 1)) continue;  // cycle edge
    chords.emplace_back(i, j);
  }
  return chords;
}

bool chords_non_crossing(const std::vector<std::pair<int, int>>& chords) {
  for (std::size_t a = 0; a < chords.size(); ++a)
    for (std::size_t b = a + 1; b < chords.size(); ++b) {
      auto [i1, j1] = chords[a];
      auto [i2, j2] = chords[b];
      if ((i1 < i2 && i2 < j1 && j1 < j2) ||
          (i2 < i1 && i1 < j2 && j2 < j1))
        return false;
    }
  return true;
}

// A 2-connected graph of order >= 3 is outerplanar exactly when some
// Hamilton cycle carries all other edges as non-crossing chords (and an
// outerplanar one has exactly one Hamilton cycle). Returns the cycle
// order, or empty if none qualifies.
std::vector<int> outer_cycle_of_block(const Graph& b) {
  const int n = b.vertex_count();
  if (b.edge_count() > 2 * n - 3) return {};
  HamiltonSearch search{&b, n, 1'000'000, {}, 1, {}};
  search.run();
  for (const auto& cycle : search.cycles)
    if (chords_non_crossing(chords_of(b, cycle))) return cycle;
  return {};
}

}  // namespace

bool is_outerplanar(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 2) return true;
  if (g.edge_count() > 2 * n - 3) return false;
  for (const auto& comp : components(g)) {
    if (comp.size() <= 2) continue;
    Graph cg = g.induced(comp);
    for (const auto& block : block_decomposition(cg).blocks) {
      if (block.size() <= 2) continue;
      if (outer_cycle_of_block(cg.induced(block)).empty()) return false;
    }
  }
  return true;
}

OuterCycle outer_cycle(const Graph& g) {
  if (!is_two_connected(g))
    throw std::invalid_argument("outer_cycle requires a 2-connected graph");
  std::vector<int> order = outer_cycle_of_block(g);
  if (order.empty())
    throw std::invalid_argument("outer_cycle requires an outerplanar graph");

#ifndef NDEBUG
  // A second Hamilton cycle would contradict outerplanarity; its
  // presence means the certificate above was accepted in error.
  HamiltonSearch probe{&g, g.vertex_count(), 2, {}, 1, {}};
  probe.run();
  assert(probe.cycles.size() == 1);
#endif

  OuterCycle out;
  out.order = std::move(order);
  const int n = g.vertex_count();
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    pos[static_cast<std::size_t>(out.order[static_cast<std::size_t>(i)])] = i;
  for (auto [u, v] : g.edges()) {
    int i = pos[static_cast<std::size_t>(u)];
    int j = pos[static_cast<std::size_t>(v)];
    if (i > j) std::swap(i, j);
    if (j - i == 1 || (i == 0 && j == n - 1)) continue;
    out.chords.emplace_back(u, v);
  }
  std::sort(out.chords.begin(), out.chords.end());
  return out;
}

bool is_maximal_outerplanar(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 2) return g.edge_count() == n * (n - 1) / 2;
  return g.edge_count() == 2 * n - 3 && is_outerplanar(g);
}

}  // namespace opturan
