#ifndef OPTURAN_SUBGRAPH_HPP
#define OPTURAN_SUBGRAPH_HPP

#include <optional>
#include <vector>

#include "opturan/graph.hpp"

namespace opturan {

/// Injective mapping witnessing pattern as a (not necessarily induced)
/// subgraph of host: result[p] is the host vertex for pattern vertex p.
/// Backtracking with degree ordering and adjacency pruning; meant as an
/// oracle and test utility, not a hot path.
std::optional<std::vector<int>> contains_subgraph(const Graph& host,
                                                  const Graph& pattern);

}  // namespace opturan

#endif
