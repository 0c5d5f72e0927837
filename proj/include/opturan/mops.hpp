#ifndef OPTURAN_MOPS_HPP
#define OPTURAN_MOPS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opturan/doublestar.hpp"
#include "opturan/graph.hpp"

namespace opturan {

/// n above the supported enumeration range. CLI maps this to a refusal
/// exit code rather than a hard failure.
class ResourceCapError : public std::runtime_error {
public:
  explicit ResourceCapError(const std::string& what)
      : std::runtime_error(what) {}
};

inline constexpr int kEnumerationCap = 14;  // hard generator limit
inline constexpr int kSearchCap = 12;       // default search/probe limit
inline constexpr int kVerifyCap = 11;       // default verify-suite limit
inline constexpr int kCorpusCap = 8;        // connected-outerplanar corpus

/// A maximal outerplanar graph as a polygon triangulation: outer cycle
/// 0..n-1 plus n-3 pairwise non-crossing chords. `canon` is the least
/// chord-set encoding over the 2n rotations and reflections, so equal
/// canon means isomorphic (the outer cycle of a maximal outerplanar
/// graph on n >= 4 vertices is unique).
struct TriangulationCode {
  int n = 0;
  std::vector<std::pair<int, int>> chords;  // (u, v), u < v, sorted
  std::string canon;

  Graph graph() const;
};

/// One triangulation per isomorphism class, sorted by canon. 3 <= n <= cap.
std::vector<TriangulationCode> enumerate_triangulations(
    int n, int cap = kEnumerationCap);

/// One maximal outerplanar graph per isomorphism class.
std::vector<Graph> enumerate_mops(int n, int cap = kEnumerationCap);

/// One representative per isomorphism class of connected outerplanar
/// graphs on n vertices, generated as connected spanning subgraphs of
/// the triangulations and deduplicated by canonical form; optionally
/// restricted to S_{p,q}-free members. n <= 8.
std::vector<Graph> enumerate_connected_outerplanar(
    int n, std::optional<DoubleStarSpec> free_filter = std::nullopt,
    int cap = kCorpusCap);

/// One representative per isomorphism class of 2-connected outerplanar
/// graphs on n vertices (outer cycle plus any subset of a
/// triangulation's chords). n <= 12.
std::vector<Graph> enumerate_two_connected_outerplanar(int n,
                                                       int cap = kSearchCap);

}  // namespace opturan

#endif
