#include "opturan/subgraph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace opturan {

namespace {

struct Matcher {
  const Graph* host;
  const Graph* pattern;
  std::vector<int> order;       // pattern vertices, most-constrained first
  std::vector<int> mapping;     // pattern vertex -> host vertex or -1
  std::uint64_t used = 0;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int pv = order[depth];
    const int need = pattern->degree(pv);
    for (int hv = 0; hv < host->vertex_count(); ++hv) {
      if ((used >> hv) & 1) continue;
      if (host->degree(hv) < need) continue;
      bool ok = true;
      std::uint64_t pnbrs = pattern->neighbors(pv);
      while (pnbrs != 0) {
        int pu = std::countr_zero(pnbrs);
        pnbrs &= pnbrs - 1;
        int hu = mapping[static_cast<std::size_t>(pu)];
        if (hu >= 0 && !host->has_edge(hv, hu)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      mapping[static_cast<std::size_t>(pv)] = hv;
      used |= std::uint64_t{1} << hv;
      if (extend(depth + 1)) return true;
      mapping[static_cast<std::size_t>(pv)] = -1;
      used &= ~(std::uint64_t{1} << hv);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> contains_subgraph(const Graph& host,
                                                  const Graph& pattern) {
  const int pk = pattern.vertex_count();
  if (pk > host.vertex_count()) return std::nullopt;
  if (pattern.edge_count() > host.edge_count()) return std::nullopt;
  if (pk == 0) return std::vector<int>{};

  // Highest degree first, then prefer vertices attached to the already
  // ordered part so adjacency pruning bites early.
  std::vector<int> order;
  std::vector<bool> placed(static_cast<std::size_t>(pk), false);
  for (int step = 0; step < pk; ++step) {
    int pick = -1;
    int pick_attached = -1;
    for (int v = 0; v < pk; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      int attached = 0;
      std::uint64_t nbrs = pattern.neighbors(v);
      while (nbrs != 0) {
        int u = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        if (placed[static_cast<std::size_t>(u)]) ++attached;
      }
      if (pick < 0 || attached > pick_attached ||
          (attached == pick_attached &&
           pattern.degree(v) > pattern.degree(pick))) {
        pick = v;
        pick_attached = attached;
      }
    }
    order.push_back(pick);
    placed[static_cast<std::size_t>(pick)] = true;
  }

  Matcher m;
  m.host = &host;
  m.pattern = &pattern;
  m.order = std::move(order);
  m.mapping.assign(static_cast<std::size_t>(pk), -1);
  if (m.extend(0)) return m.mapping;
  return std::nullopt;
}

}  // namespace opturan
