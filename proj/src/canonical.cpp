#include "opturan/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace opturan {

namespace {

// Equitable refinement: split cells by the multiset of neighbor colors
// until stable. Color ids are ranks, so the result is independent of
// the input labeling.
std::vector<int> refine(const Graph& g, std::vector<int> colors) {
  const int n = g.vertex_count();
  int distinct = 0;
  for (int v = 0; v < n; ++v) distinct = std::max(distinct, colors[v] + 1);
  while (true) {
    std::vector<std::pair<std::pair<int, std::vector<int>>, int>> keys;
    keys.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> nbr_colors;
      std::uint64_t nbrs = g.neighbors(v);
      while (nbrs != 0) {
        int u = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        nbr_colors.push_back(colors[static_cast<std::size_t>(u)]);
      }
      std::sort(nbr_colors.begin(), nbr_colors.end());
      keys.push_back({{colors[static_cast<std::size_t>(v)],
                       std::move(nbr_colors)},
                      v});
    }
    std::sort(keys.begin(), keys.end());
    int next = -1;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (i == 0 || keys[i].first != keys[i - 1].first) ++next;
      colors[static_cast<std::size_t>(keys[i].second)] = next;
    }
    if (next + 1 == distinct) break;
    distinct = next + 1;
  }
  return colors;
}

using Encoding = std::vector<std::uint64_t>;

Encoding encode_ordered(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  Encoding enc((static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
  std::size_t bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(order[static_cast<std::size_t>(i)],
                     order[static_cast<std::size_t>(j)]))
        enc[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
      ++bit;
    }
  return enc;
}

struct CanonSearch {
  const Graph* g;
  Encoding best;
  std::vector<int> best_order;
  bool have_best = false;

  void visit(std::vector<int> colors) {
    colors = refine(*g, std::move(colors));
    const int n = g->vertex_count();

    int target = -1;
    for (int c = 0; c < n && target < 0; ++c) {
      int count = 0;
      for (int v = 0; v < n; ++v)
        if (colors[static_cast<std::size_t>(v)] == c) ++count;
      if (count >= 2) target = c;
      if (count == 0) break;  // colors are ranks; past the last cell
    }

    if (target < 0) {  // discrete: one full ordering
      std::vector<int> order(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v)
        order[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])] =
            v;
      Encoding enc = encode_ordered(*g, order);
      if (!have_best || enc < best) {
        best = std::move(enc);
        best_order = std::move(order);
        have_best = true;
      }
      return;
    }

    for (int v = 0; v < n; ++v) {
      if (colors[static_cast<std::size_t>(v)] != target) continue;
      std::vector<int> child(colors);
      for (int u = 0; u < n; ++u)
        child[static_cast<std::size_t>(u)] =
            2 * child[static_cast<std::size_t>(u)] + (u == v ? 0 : 1);
      visit(std::move(child));
    }
  }
};

CanonSearch run_search(const Graph& g) {
  CanonSearch s;
  s.g = &g;
  s.visit(std::vector<int>(static_cast<std::size_t>(g.vertex_count()), 0));
  return s;
}

}  // namespace

std::string canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  std::string out = "g" + std::to_string(n) + ":";
  if (n <= 1) return out;
  CanonSearch s = run_search(g);
  static const char* hex = "0123456789abcdef";
  for (std::uint64_t word : s.best)
    for (int shift = 60; shift >= 0; shift -= 4)
      out.push_back(hex[(word >> shift) & 0xF]);
  return out;
}

Graph canonical_graph(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return g;
  CanonSearch s = run_search(g);
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    position[static_cast<std::size_t>(s.best_order[static_cast<std::size_t>(
        i)])] = i;
  Graph out(n);
  for (auto [u, v] : g.edges())
    out.add_edge(position[static_cast<std::size_t>(u)],
                 position[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace opturan
