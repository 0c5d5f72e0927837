#include "opturan/blocks.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace opturan {

bool BlockDecomposition::is_cut_vertex(int v) const {
  return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

std::vector<int> BlockDecomposition::endblock_indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    int cuts = 0;
    for (int v : blocks[i])
      if (is_cut_vertex(v)) ++cuts;
    if (cuts <= 1) out.push_back(static_cast<int>(i));
  }
  return out;
}

namespace {

struct LowpointState {
  const Graph* g;
  std::vector<int> disc, low;
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::vector<int>> blocks;
  std::set<int> cuts;
  int timer = 0;

  void pop_block(std::pair<int, int> until) {
    std::set<int> verts;
    while (true) {
      auto e = edge_stack.back();
      edge_stack.pop_back();
      verts.insert(e.first);
      verts.insert(e.second);
      if (e == until) break;
    }
    blocks.emplace_back(verts.begin(), verts.end());
  }

  void dfs(int v, int parent) {
    disc[static_cast<std::size_t>(v)] =
        low[static_cast<std::size_t>(v)] = ++timer;
    int children = 0;
    std::uint64_t nbrs = g->neighbors(v);
    while (nbrs != 0) {
      int w = std::countr_zero(nbrs);
      nbrs &= nbrs - 1;
      if (w == parent) continue;
      if (disc[static_cast<std::size_t>(w)] == 0) {
        ++children;
        edge_stack.emplace_back(v, w);
        dfs(w, v);
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)],
                     low[static_cast<std::size_t>(w)]);
        if (low[static_cast<std::size_t>(w)] >=
            disc[static_cast<std::size_t>(v)]) {
          if (parent != -1 || children > 1) cuts.insert(v);
          pop_block({v, w});
        }
      } else if (disc[static_cast<std::size_t>(w)] <
                 disc[static_cast<std::size_t>(v)]) {
        edge_stack.emplace_back(v, w);
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)],
                     disc[static_cast<std::size_t>(w)]);
      }
    }
  }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("connected graph required, got empty graph");
  if (!is_connected(g))
    throw std::invalid_argument(
        "connected graph required (decompose components first)");

  BlockDecomposition out;
  if (g.vertex_count() == 1) {
    out.blocks.push_back({0});
    return out;
  }

  LowpointState st;
  st.g = &g;
  st.disc.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  st.low.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  st.dfs(0, -1);

  out.blocks = std::move(st.blocks);
  out.cut_vertices.assign(st.cuts.begin(), st.cuts.end());
  std::sort(out.blocks.begin(), out.blocks.end());

  for (std::size_t i = 0; i < out.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < out.blocks.size(); ++j) {
      std::vector<int> shared;
      std::set_intersection(out.blocks[i].begin(), out.blocks[i].end(),
                            out.blocks[j].begin(), out.blocks[j].end(),
                            std::back_inserter(shared));
      if (!shared.empty())
        out.block_adjacency.emplace_back(static_cast<int>(i),
                                         static_cast<int>(j));
    }
  return out;
}

bool is_two_connected(const Graph& g) {
  if (g.vertex_count() < 3) return false;
  if (!is_connected(g)) return false;
  return block_decomposition(g).cut_vertices.empty();
}

}  // namespace opturan
