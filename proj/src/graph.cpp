#include "opturan/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace opturan {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("vertex count must be in [0, 64], got " +
                                std::to_string(n));
}

Graph Graph::from_edges(int n,
                        std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for order " +
                                std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (has_edge(u, v)) return;
  adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (!has_edge(u, v)) return;
  adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
  adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
  --m_;
}

int Graph::degree(int v) const {
  return std::popcount(neighbors(v));
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = kMaxVertices;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    std::uint64_t higher = adj_[static_cast<std::size_t>(u)] >>
                           (u + 1);
    while (higher != 0) {
      int v = u + 1 + std::countr_zero(higher);
      out.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return out;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  Graph sub(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (has_edge(vertices[i], vertices[j]))
        sub.add_edge(static_cast<int>(i), static_cast<int>(j));
  return sub;
}

Graph Graph::disjoint_union(const Graph& other) const {
  if (n_ + other.n_ > kMaxVertices)
    throw std::invalid_argument("disjoint union exceeds 64 vertices");
  Graph g(n_ + other.n_);
  for (auto [u, v] : edges()) g.add_edge(u, v);
  for (auto [u, v] : other.edges()) g.add_edge(u + n_, v + n_);
  return g;
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_ || m_ != other.m_) return false;
  for (int v = 0; v < n_; ++v)
    if (adj_[static_cast<std::size_t>(v)] !=
        other.adj_[static_cast<std::size_t>(v)])
      return false;
  return true;
}

namespace {

std::uint64_t reach_from(const Graph& g, int start) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    while (frontier != 0) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.neighbors(v);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

std::uint64_t all_vertices_mask(int n) {
  return n == kMaxVertices ? ~std::uint64_t{0}
                           : (std::uint64_t{1} << n) - 1;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  return reach_from(g, 0) == all_vertices_mask(g.vertex_count());
}

int component_count(const Graph& g) {
  const int n = g.vertex_count();
  std::uint64_t todo = all_vertices_mask(n);
  int count = 0;
  while (todo != 0) {
    int v = std::countr_zero(todo);
    todo &= ~reach_from(g, v);
    ++count;
  }
  return count;
}

std::vector<std::vector<int>> components(const Graph& g) {
  const int n = g.vertex_count();
  std::uint64_t todo = all_vertices_mask(n);
  std::vector<std::vector<int>> out;
  while (todo != 0) {
    int v = std::countr_zero(todo);
    std::uint64_t comp = reach_from(g, v);
    todo &= ~comp;
    std::vector<int> verts;
    while (comp != 0) {
      verts.push_back(std::countr_zero(comp));
      comp &= comp - 1;
    }
    out.push_back(std::move(verts));
  }
  return out;
}

}  // namespace opturan
