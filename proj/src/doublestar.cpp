#include "opturan/doublestar.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace opturan {

namespace {

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

DoubleStarSpec::DoubleStarSpec(int p_, int q_) : p(p_), q(q_) {
  if (p < 1 || q < p)
    throw std::invalid_argument("double star requires q >= p >= 1, got (" +
                                std::to_string(p_) + "," +
                                std::to_string(q_) + ")");
}

bool witness_valid(const Graph& g, const DoubleStarSpec& spec,
                   const DoubleStarWitness& w) {
  if (static_cast<int>(w.leaves_x.size()) != spec.p ||
      static_cast<int>(w.leaves_y.size()) != spec.q)
    return false;
  if (!g.has_edge(w.x, w.y)) return false;
  std::uint64_t taken =
      (std::uint64_t{1} << w.x) | (std::uint64_t{1} << w.y);
  for (int a : w.leaves_x) {
    if ((taken >> a) & 1) return false;
    if (!g.has_edge(w.x, a)) return false;
    taken |= std::uint64_t{1} << a;
  }
  for (int b : w.leaves_y) {
    if ((taken >> b) & 1) return false;
    if (!g.has_edge(w.y, b)) return false;
    taken |= std::uint64_t{1} << b;
  }
  return true;
}

bool edge_hosts_double_star(const Graph& g, int u, int v,
                            const DoubleStarSpec& spec) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("edge_hosts_double_star requires an edge");
  if (g.degree(u) - 1 < spec.p || g.degree(v) - 1 < spec.q) return false;
  std::uint64_t ends = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
  std::uint64_t outside = (g.neighbors(u) | g.neighbors(v)) & ~ends;
  return std::popcount(outside) >= spec.p + spec.q;
}

namespace {

// Greedy leaf assignment for an edge already known to qualify: fill X
// with private neighbors of u first, then common ones; Y takes whatever
// of v's neighbors is left. Feasibility guarantees this never starves Y.
DoubleStarWitness build_witness(const Graph& g, int u, int v,
                                const DoubleStarSpec& spec) {
  std::uint64_t ends = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
  std::uint64_t side_u = g.neighbors(u) & ~ends;
  std::uint64_t side_v = g.neighbors(v) & ~ends;

  DoubleStarWitness w;
  w.x = u;
  w.y = v;
  std::uint64_t taken = 0;
  for (int a : mask_to_vertices(side_u & ~side_v)) {
    if (static_cast<int>(w.leaves_x.size()) == spec.p) break;
    w.leaves_x.push_back(a);
    taken |= std::uint64_t{1} << a;
  }
  for (int a : mask_to_vertices(side_u & side_v)) {
    if (static_cast<int>(w.leaves_x.size()) == spec.p) break;
    w.leaves_x.push_back(a);
    taken |= std::uint64_t{1} << a;
  }
  for (int b : mask_to_vertices(side_v & ~taken)) {
    if (static_cast<int>(w.leaves_y.size()) == spec.q) break;
    w.leaves_y.push_back(b);
  }
  std::sort(w.leaves_x.begin(), w.leaves_x.end());
  std::sort(w.leaves_y.begin(), w.leaves_y.end());
  return w;
}

}  // namespace

std::optional<DoubleStarWitness> contains_double_star(
    const Graph& g, const DoubleStarSpec& spec) {
  if (g.vertex_count() < spec.order()) return std::nullopt;
  for (auto [u, v] : g.edges()) {
    // Both orientations: roles differ whenever p != q.
    if (edge_hosts_double_star(g, u, v, spec))
      return build_witness(g, u, v, spec);
    if (edge_hosts_double_star(g, v, u, spec))
      return build_witness(g, v, u, spec);
  }
  return std::nullopt;
}

bool is_double_star_free(const Graph& g, const DoubleStarSpec& spec) {
  return !contains_double_star(g, spec).has_value();
}

bool shared_neighbor_holds(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if (g.degree(u) < 3 || g.degree(v) < 3) continue;
    if ((g.neighbors(u) & g.neighbors(v)) == 0) return false;
  }
  return true;
}

bool every_34_edge_shares_neighbor(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    int du = g.degree(u);
    int dv = g.degree(v);
    if (!((du == 3 && dv == 4) || (du == 4 && dv == 3))) continue;
    if ((g.neighbors(u) & g.neighbors(v)) == 0) return false;
  }
  return true;
}

Graph double_star_graph(const DoubleStarSpec& spec) {
  Graph g(spec.order());
  g.add_edge(0, 1);
  for (int i = 0; i < spec.p; ++i) g.add_edge(0, 2 + i);
  for (int j = 0; j < spec.q; ++j) g.add_edge(1, 2 + spec.p + j);
  return g;
}

}  // namespace opturan
