#ifndef OPTURAN_DOUBLESTAR_HPP
#define OPTURAN_DOUBLESTAR_HPP

#include <optional>
#include <vector>

#include "opturan/graph.hpp"

namespace opturan {

/// The double star S_{p,q}: an edge xy with p extra leaves at x and q at
/// y, so p + q + 2 vertices in total. Always q >= p >= 1.
struct DoubleStarSpec {
  int p;
  int q;

  DoubleStarSpec(int p_, int q_);
  int order() const { return p + q + 2; }
};

/// An embedded copy: centers x, y plus disjoint leaf sets X (|X| = p,
/// attached at x) and Y (|Y| = q, attached at y).
struct DoubleStarWitness {
  int x;
  int y;
  std::vector<int> leaves_x;
  std::vector<int> leaves_y;
};

bool witness_valid(const Graph& g, const DoubleStarSpec& spec,
                   const DoubleStarWitness& w);

/// Whether edge uv carries a copy with u as the p-center and v as the
/// q-center. Decided by counting: deg(u)-1 >= p, deg(v)-1 >= q, and the
/// neighbors of u and v other than u, v themselves number at least p+q.
bool edge_hosts_double_star(const Graph& g, int u, int v,
                            const DoubleStarSpec& spec);

/// Scans edges in lexicographic order, each in both orientations, and
/// returns the first copy found with lowest-labeled leaves; nullopt
/// exactly when g is S_{p,q}-free.
std::optional<DoubleStarWitness> contains_double_star(
    const Graph& g, const DoubleStarSpec& spec);

bool is_double_star_free(const Graph& g, const DoubleStarSpec& spec);

/// Every edge whose endpoints both have degree >= 3 has a common
/// neighbor. Holds in any S_{2,2}-free graph.
bool shared_neighbor_holds(const Graph& g);

/// Every edge with endpoint degrees exactly {3,4} has a common neighbor.
bool every_34_edge_shares_neighbor(const Graph& g);

/// The double star itself as a labeled graph: x = 0, y = 1, then the p
/// leaves of x, then the q leaves of y.
Graph double_star_graph(const DoubleStarSpec& spec);

}  // namespace opturan

#endif
