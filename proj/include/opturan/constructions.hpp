#ifndef OPTURAN_CONSTRUCTIONS_HPP
#define OPTURAN_CONSTRUCTIONS_HPP

#include <string>

#include "opturan/doublestar.hpp"
#include "opturan/graph.hpp"

namespace opturan {

/// floor(3(n-1)/2): the connected S_{2,2}-free extremal edge count for
/// n >= 6.
long long h_formula(int n);

/// The S_{2,3} lower-bound edge count for n >= 6. With n = 6t + i,
/// i in 0..5: 10t - 1 for i = 0, 10t for i = 1, 10t + 2i - 3 otherwise.
long long f_formula(int n);

/// Fan: one apex joined to a path on k-1 vertices. The unique maximal
/// outerplanar graph for k <= 5; maximal outerplanar for every k.
Graph fan_mop(int k);

/// Apex over floor((n-1)/2) disjoint edges, plus one pendant vertex when
/// n is even: n vertices, h(n) edges, connected, S_{2,2}-free. n >= 6.
Graph construct_gn(int n);

/// Two disjoint fans of order 5: 10 vertices, 14 edges, S_{2,2}-free.
Graph construct_two_m5();

/// Apex over a path on n-1 vertices: 2n-3 edges, only one vertex of
/// degree above 3, hence S_{3,3}-free. n >= 3.
Graph construct_tn(int n);

/// Serpentine triangulation of the n-gon: maximal outerplanar with
/// maximum degree 4, so S_{p,q}-free whenever q >= 4. n >= 5.
Graph construct_on(int n);

/// The 6-vertex maximal outerplanar graph with maximum degree 4 and
/// exactly two vertices of degree 2 (the chain ports).
Graph construct_h();

/// Chain of t copies of construct_h() linked port to port, plus (for
/// i >= 1) a fan of order i hung off the last port by a single edge.
/// 6t + i vertices, f_formula(6t + i) edges, connected, S_{2,3}-free.
Graph construct_hprime(int t, int i);

enum class Mode { kConnected, kGeneral };

std::string mode_name(Mode mode);
Mode parse_mode(const std::string& name);

/// What the closed forms predict for ex(n, S_{p,q}) in the given mode.
struct TuranBound {
  enum class Kind { kExact, kLowerBound, kUnknown };
  Kind kind = Kind::kUnknown;
  long long value = -1;
  /// Which rule applied and its hypothesis, for report rows.
  std::string rule;

  static TuranBound exact(long long v, std::string rule);
  static TuranBound lower_bound(long long v, std::string rule);
  static TuranBound unknown(std::string rule);
};

TuranBound turan_formula(int n, const DoubleStarSpec& spec, Mode mode);

}  // namespace opturan

#endif
