#ifndef OPTURAN_CANONICAL_HPP
#define OPTURAN_CANONICAL_HPP

#include <string>

#include "opturan/graph.hpp"

namespace opturan {

/// Canonical label: equal strings exactly for isomorphic graphs, stable
/// across runs. Computed by iterated color refinement plus backtracking
/// over the individualization tree, taking the least adjacency encoding
/// over all refinement-consistent orderings.
std::string canonical_form(const Graph& g);

/// The graph relabeled into its canonical vertex order.
Graph canonical_graph(const Graph& g);

}  // namespace opturan

#endif
