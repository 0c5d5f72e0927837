#ifndef OPTURAN_GRAPH_HPP
#define OPTURAN_GRAPH_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace opturan {

inline constexpr int kMaxVertices = 64;

/// Simple undirected graph on labeled vertices 0..n-1, n <= 64.
/// Adjacency is kept as one 64-bit neighbor mask per vertex, so membership
/// tests and set algebra are single machine ops. Values are cheap to copy
/// and safe to share across threads once construction is done.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n,
                          std::initializer_list<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
  }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Neighbor set of v as a bitmask over vertex labels.
  std::uint64_t neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }
  int degree(int v) const;
  int max_degree() const;
  int min_degree() const;

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  /// Subgraph induced on the given vertices, relabeled 0..k-1 in the
  /// order given.
  Graph induced(const std::vector<int>& vertices) const;

  /// This graph and `other` side by side on disjoint label ranges.
  Graph disjoint_union(const Graph& other) const;

  bool operator==(const Graph& other) const;

private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

bool is_connected(const Graph& g);
int component_count(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);

}  // namespace opturan

#endif
