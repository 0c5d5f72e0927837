#include "opturan/mops.hpp"

#include <algorithm>
#include <unordered_set>

#include "opturan/canonical.hpp"
#include "opturan/planarity.hpp"

namespace opturan {

namespace {

void check_cap(int n, int low, int cap, int hard_cap, const char* what) {
  if (n < low)
    throw std::invalid_argument(std::string(what) + " requires n >= " +
                                std::to_string(low));
  if (n > std::min(cap, hard_cap))
    throw ResourceCapError(std::string(what) + " capped at n = " +
                           std::to_string(std::min(cap, hard_cap)) +
                           ", got n = " + std::to_string(n));
}

using ChordSet = std::vector<std::pair<int, int>>;

// All triangulations of the polygon 0..n-1, as chord sets. Built by arc
// length: the closing edge (0, len) of an arc lies in one triangle with
// apex k, splitting the arc in two. Catalan(n-2) outputs.
std::vector<ChordSet> labeled_triangulations(int n) {
  std::vector<std::vector<ChordSet>> by_len(static_cast<std::size_t>(n));
  by_len[1] = {{}};
  for (int len = 2; len < n; ++len) {
    std::vector<ChordSet> acc;
    for (int k = 1; k < len; ++k)
      for (const auto& left : by_len[static_cast<std::size_t>(k)])
        for (const auto& right : by_len[static_cast<std::size_t>(len - k)]) {
          ChordSet cs = left;
          for (auto [u, v] : right) cs.emplace_back(u + k, v + k);
          if (k > 1) cs.emplace_back(0, k);
          if (len - k > 1) cs.emplace_back(k, len);
          acc.push_back(std::move(cs));
        }
    by_len[static_cast<std::size_t>(len)] = std::move(acc);
  }
  return by_len[static_cast<std::size_t>(n - 1)];
}

ChordSet normalized(ChordSet chords) {
  for (auto& [u, v] : chords)
    if (u > v) std::swap(u, v);
  std::sort(chords.begin(), chords.end());
  return chords;
}

std::string chord_key(const ChordSet& chords) {
  std::string key;
  key.reserve(chords.size() * 2);
  for (auto [u, v] : chords) {
    key.push_back(static_cast<char>('0' + u));
    key.push_back(static_cast<char>('0' + v));
  }
  return key;
}

// Least chord encoding over the dihedral group of the n-gon.
std::string dihedral_canon(int n, const ChordSet& chords) {
  std::string best;
  bool have = false;
  for (int reflect = 0; reflect < 2; ++reflect)
    for (int shift = 0; shift < n; ++shift) {
      ChordSet mapped = chords;
      for (auto& [u, v] : mapped) {
        int mu = reflect ? (n - u) % n : u;
        int mv = reflect ? (n - v) % n : v;
        u = (mu + shift) % n;
        v = (mv + shift) % n;
      }
      std::string key = chord_key(normalized(std::move(mapped)));
      if (!have || key < best) {
        best = std::move(key);
        have = true;
      }
    }
  return best;
}

}  // namespace

Graph TriangulationCode::graph() const {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  for (auto [u, v] : chords) g.add_edge(u, v);
  return g;
}

std::vector<TriangulationCode> enumerate_triangulations(int n, int cap) {
  check_cap(n, 3, cap, kEnumerationCap, "triangulation enumeration");
  std::unordered_set<std::string> seen;
  std::vector<TriangulationCode> out;
  for (auto& chords : labeled_triangulations(n)) {
    std::string canon = dihedral_canon(n, chords);
    if (!seen.insert(canon).second) continue;
    TriangulationCode code;
    code.n = n;
    code.chords = normalized(std::move(chords));
    code.canon = std::move(canon);
    out.push_back(std::move(code));
  }
  std::sort(out.begin(), out.end(),
            [](const TriangulationCode& a, const TriangulationCode& b) {
              return a.canon < b.canon;
            });
  return out;
}

std::vector<Graph> enumerate_mops(int n, int cap) {
  std::vector<Graph> out;
  for (const auto& code : enumerate_triangulations(n, cap))
    out.push_back(code.graph());
  return out;
}

std::vector<Graph> enumerate_connected_outerplanar(
    int n, std::optional<DoubleStarSpec> free_filter, int cap) {
  check_cap(n, 1, cap, kCorpusCap, "connected outerplanar enumeration");
  std::vector<Graph> out;
  if (n == 1) {
    out.emplace_back(1);
    return out;
  }
  if (n == 2) {
    out.push_back(Graph::from_edges(2, {{0, 1}}));
    return out;
  }

  std::unordered_set<std::string> seen;
  for (const auto& mop : enumerate_mops(n)) {
    const auto edges = mop.edges();
    const int m = static_cast<int>(edges.size());
    for (std::uint32_t keep = 0; keep < (std::uint32_t{1} << m); ++keep) {
      Graph g(n);
      for (int e = 0; e < m; ++e)
        if ((keep >> e) & 1)
          g.add_edge(edges[static_cast<std::size_t>(e)].first,
                     edges[static_cast<std::size_t>(e)].second);
      if (g.edge_count() < n - 1 || !is_connected(g)) continue;
      if (free_filter && !is_double_star_free(g, *free_filter)) continue;
      std::string canon = canonical_form(g);
      if (!seen.insert(canon).second) continue;
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Graph> enumerate_two_connected_outerplanar(int n, int cap) {
  check_cap(n, 3, cap, kSearchCap, "2-connected outerplanar enumeration");
  std::unordered_set<std::string> seen;
  std::vector<Graph> out;
  for (const auto& code : enumerate_triangulations(n)) {
    const int c = static_cast<int>(code.chords.size());
    for (std::uint32_t keep = 0; keep < (std::uint32_t{1} << c); ++keep) {
      Graph g(n);
      for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
      for (int e = 0; e < c; ++e)
        if ((keep >> e) & 1)
          g.add_edge(code.chords[static_cast<std::size_t>(e)].first,
                     code.chords[static_cast<std::size_t>(e)].second);
      std::string canon = canonical_form(g);
      if (!seen.insert(canon).second) continue;
      out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace opturan
