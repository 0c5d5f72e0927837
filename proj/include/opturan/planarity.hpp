#ifndef OPTURAN_PLANARITY_HPP
#define OPTURAN_PLANARITY_HPP

#include <utility>
#include <vector>

#include "opturan/graph.hpp"

namespace opturan {

/// The boundary cycle of a 2-connected outerplanar graph: every vertex
/// exactly once, consecutive entries adjacent (with wrap-around), and
/// all remaining edges pairwise non-crossing chords of that cycle.
struct OuterCycle {
  std::vector<int> order;
  std::vector<std::pair<int, int>> chords;  // (u, v) with u < v, sorted
};

/// Certificate-based recognition: a graph is outerplanar exactly when
/// every block has a Hamilton cycle whose chords are non-crossing.
/// Orders 0..2 are outerplanar by convention.
bool is_outerplanar(const Graph& g);

/// Requires a 2-connected outerplanar graph of order >= 3; throws
/// std::invalid_argument otherwise. The returned cycle starts at vertex
/// 0 oriented toward its smaller neighbor on the cycle.
OuterCycle outer_cycle(const Graph& g);

/// Outerplanar and no edge can be added keeping it so. For n >= 3 this
/// is outerplanar with exactly 2n-3 edges; below that, complete.
bool is_maximal_outerplanar(const Graph& g);

}  // namespace opturan

#endif
