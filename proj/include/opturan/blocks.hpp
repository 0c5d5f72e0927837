#ifndef OPTURAN_BLOCKS_HPP
#define OPTURAN_BLOCKS_HPP

#include <utility>
#include <vector>

#include "opturan/graph.hpp"

namespace opturan {

/// Blocks (maximal nonseparable subgraphs), cut vertices, and which
/// blocks meet at a cut vertex. For a connected graph with r blocks,
/// sum of block orders equals n + r - 1.
struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // each sorted ascending
  std::vector<int> cut_vertices;         // sorted ascending
  std::vector<std::pair<int, int>> block_adjacency;  // index pairs, i < j

  bool is_cut_vertex(int v) const;
  /// Blocks containing at most one cut vertex.
  std::vector<int> endblock_indices() const;
};

/// Requires a connected graph with at least one vertex.
BlockDecomposition block_decomposition(const Graph& g);

/// Order >= 3, connected, and free of cut vertices.
bool is_two_connected(const Graph& g);

}  // namespace opturan

#endif
