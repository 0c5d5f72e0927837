#ifndef OPTURAN_SEARCH_REFERENCE_HPP
#define OPTURAN_SEARCH_REFERENCE_HPP

#include <utility>

#include "opturan/doublestar.hpp"
#include "opturan/graph.hpp"
#include "opturan/search.hpp"

namespace opturan {

/// Serial reference implementations of the search kernel, kept as an
/// independent path for tests and the benchmark. Freeness is decided by
/// generic subgraph isomorphism against S_{p,q} itself instead of the
/// counting criterion, there is no incumbent sharing, and triangulations
/// are scanned one by one. Infeasible queries return -1 like the kernel.
std::pair<long long, Graph> max_free_subgraph_reference(
    const Graph& mop, const DoubleStarSpec& spec, bool require_connected);

ExtremalResult ex_connected_reference(int n, const DoubleStarSpec& spec,
                                      int witness_cap = 8);

}  // namespace opturan

#endif
