#include "opturan/constructions.hpp"

#include <cassert>
#include <stdexcept>

#include "opturan/planarity.hpp"

namespace opturan {

long long h_formula(int n) {
  if (n < 1) throw std::invalid_argument("h_formula requires n >= 1");
  return 3LL * (n - 1) / 2;
}

long long f_formula(int n) {
  if (n < 6) throw std::invalid_argument("f_formula requires n >= 6");
  const long long t = n / 6;
  const int i = n % 6;
  if (i == 0) return 10 * t - 1;
  if (i == 1) return 10 * t;
  return 10 * t + 2 * i - 3;
}

Graph fan_mop(int k) {
  if (k < 1) throw std::invalid_argument("fan_mop requires k >= 1");
  Graph g(k);
  for (int v = 1; v < k; ++v) {
    g.add_edge(0, v);
    if (v + 1 < k) g.add_edge(v, v + 1);
  }
  return g;
}

Graph construct_gn(int n) {
  if (n < 6) throw std::invalid_argument("construct_gn requires n >= 6");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  for (int v = 1; v + 1 < n; v += 2) g.add_edge(v, v + 1);
  return g;
}

Graph construct_two_m5() {
  return fan_mop(5).disjoint_union(fan_mop(5));
}

Graph construct_tn(int n) {
  if (n < 3) throw std::invalid_argument("construct_tn requires n >= 3");
  return fan_mop(n);
}

Graph construct_on(int n) {
  if (n < 5)
    throw std::invalid_argument(
        "construct_on requires n >= 5 (no smaller triangulation reaches "
        "maximum degree 4)");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  // Chords snake between an advancing front and a retreating back, each
  // sharing a vertex with the one before: (0,2), (2,n-1), (n-1,3), ...
  int last = 2;
  int front = 2;
  int back = n - 1;
  bool take_back = true;
  g.add_edge(0, 2);
  for (int placed = 1; placed < n - 3; ++placed) {
    int next;
    if (take_back) {
      next = back--;
    } else {
      next = ++front;
    }
    g.add_edge(last, next);
    last = next;
    take_back = !take_back;
  }
  assert(g.max_degree() == 4);
  assert(is_maximal_outerplanar(g));
  return g;
}

Graph construct_h() { return construct_on(6); }

namespace {

// Lowest-labeled vertex of degree <= 2; both chain ports and fan
// attachment points are picked this way so the output is deterministic.
int lowest_low_degree_vertex(const Graph& g, int skip = -1) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == skip) continue;
    if (g.degree(v) <= 2) return v;
  }
  throw std::logic_error("no vertex of degree <= 2");
}

}  // namespace

Graph construct_hprime(int t, int i) {
  if (t < 1) throw std::invalid_argument("construct_hprime requires t >= 1");
  if (i < 0 || i > 5)
    throw std::invalid_argument("construct_hprime requires i in 0..5");

  const Graph h = construct_h();
  // Ports: the two degree-2 vertices of h, lower label first.
  const int port_in = lowest_low_degree_vertex(h);
  const int port_out = lowest_low_degree_vertex(h, port_in);

  Graph g(6 * t + i);
  for (int copy = 0; copy < t; ++copy)
    for (auto [u, v] : h.edges()) g.add_edge(6 * copy + u, 6 * copy + v);
  for (int copy = 0; copy + 1 < t; ++copy)
    g.add_edge(6 * copy + port_out, 6 * (copy + 1) + port_in);

  if (i >= 1) {
    const Graph m = fan_mop(i);
    for (auto [u, v] : m.edges()) g.add_edge(6 * t + u, 6 * t + v);
    g.add_edge(6 * (t - 1) + port_out, 6 * t + lowest_low_degree_vertex(m));
  }
  return g;
}

std::string mode_name(Mode mode) {
  return mode == Mode::kConnected ? "connected" : "general";
}

Mode parse_mode(const std::string& name) {
  if (name == "connected") return Mode::kConnected;
  if (name == "general") return Mode::kGeneral;
  throw std::invalid_argument("mode must be 'connected' or 'general', got '" +
                              name + "'");
}

TuranBound TuranBound::exact(long long v, std::string rule) {
  return {Kind::kExact, v, std::move(rule)};
}
TuranBound TuranBound::lower_bound(long long v, std::string rule) {
  return {Kind::kLowerBound, v, std::move(rule)};
}
TuranBound TuranBound::unknown(std::string rule) {
  return {Kind::kUnknown, -1, std::move(rule)};
}

TuranBound turan_formula(int n, const DoubleStarSpec& spec, Mode mode) {
  if (n < 1) throw std::invalid_argument("turan_formula requires n >= 1");
  const int p = spec.p;
  const int q = spec.q;

  if (n <= p + q + 1)
    return TuranBound::exact(
        std::max(0, 2 * n - 3),
        "below the double star order every maximal outerplanar graph "
        "qualifies: max{0, 2n-3} for n <= p+q+1");

  if (p == 2 && q == 2) {
    if (mode == Mode::kConnected)
      return TuranBound::exact(
          h_formula(n), "connected S_{2,2} closed form floor(3(n-1)/2), "
                        "valid for n >= 6");
    if (n == 10)
      return TuranBound::exact(
          14, "S_{2,2} general case: two disjoint order-5 fans beat every "
              "connected graph exactly at n = 10");
    return TuranBound::exact(
        h_formula(n), "S_{2,2} general case equals the connected value "
                      "floor(3(n-1)/2) for n >= 6, n != 10");
  }

  if (p >= 2 && (p >= 3 || q >= 4) && n >= p + q + 2)
    return TuranBound::exact(
        2 * n - 3,
        "2n-3 for p >= 3 or q >= 4 once n >= p+q+2 (the witness is "
        "connected, so both modes agree)");

  if (p == 2 && q == 3 && n >= 7)
    return TuranBound::lower_bound(
        f_formula(n),
        "S_{2,3} has only a lower bound from the chained-block family");

  return TuranBound::unknown("no closed form applies");
}

}  // namespace opturan
