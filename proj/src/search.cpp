#include "opturan/search.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "opturan/cache.hpp"
#include "opturan/canonical.hpp"
#include "opturan/graph6.hpp"
#include "opturan/planarity.hpp"

namespace opturan {

namespace {

constexpr int kPerMopWitnessCap = 64;

int thread_count(const EngineOptions& opts) {
  return opts.workers > 0 ? opts.workers : omp_get_max_threads();
}

int effective_cap(const EngineOptions& opts, int default_cap) {
  if (opts.override_cap) return kEnumerationCap;
  return std::min(opts.cap, default_cap);
}

void check_search_cap(int n, const EngineOptions& opts, int default_cap,
                      const char* what) {
  if (n < 1)
    throw std::invalid_argument(std::string(what) + " requires n >= 1");
  int cap = effective_cap(opts, default_cap);
  if (n > cap)
    throw ResourceCapError(
        std::string(what) + " refused at n = " + std::to_string(n) +
        " (cap " + std::to_string(cap) +
        "); raise the cap explicitly to run larger searches");
}

// Triangulation classes are requested repeatedly by the verify and
// probe drivers; enumerate each order once.
const std::vector<TriangulationCode>& triangulations_for(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const std::vector<TriangulationCode>>>
      cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache
             .emplace(n,
                      std::make_unique<const std::vector<TriangulationCode>>(
                          enumerate_triangulations(n, kEnumerationCap)))
             .first;
  return *it->second;
}

void atomic_max(std::atomic<long long>& target, long long value) {
  long long current = target.load(std::memory_order_relaxed);
  while (current < value &&
         !target.compare_exchange_weak(current, value,
                                       std::memory_order_relaxed)) {
  }
}

/// Edge counts of known S_{p,q}-free connected outerplanar graphs on n
/// vertices, used to seed the incumbent. Every returned value is
/// achievable, so pruning at it never loses the true maximum.
long long connected_seed(int n, const DoubleStarSpec& spec) {
  long long seed = n - 1;  // Hamilton path for p >= 2, star for p = 1
  if (n <= spec.p + spec.q + 1)
    seed = std::max<long long>(seed, std::max(0, 2 * n - 3));
  if (spec.p == 2 && spec.q == 2 && n >= 6)
    seed = std::max(seed, h_formula(n));
  if (spec.p == 2 && spec.q == 3 && n >= 6)
    seed = std::max(seed, f_formula(n));
  if (spec.p >= 3 && n >= 3)
    seed = std::max<long long>(seed, 2 * n - 3);  // apex over a path
  if (spec.q >= 4 && n >= 5)
    seed = std::max<long long>(seed, 2 * n - 3);  // serpentine
  return seed;
}

/// Branch and bound over spanning edge subsets of one maximal
/// outerplanar graph. Branching always targets the edges of the
/// lowest-indexed double-star violation: each child removes one of its
/// edges and commits to keeping the earlier ones, which partitions the
/// remaining subsets exactly. The bound is simply the number of edges
/// not yet removed.
class SubgraphScan {
public:
  SubgraphScan(Graph mop, const DoubleStarSpec& spec, bool require_connected)
      : base_(std::move(mop)), spec_(spec), connected_(require_connected) {
    edges_ = base_.edges();
    if (edges_.size() > 64)
      throw std::invalid_argument(
          "spanning-subgraph search supports at most 64 edges");
    const int n = base_.vertex_count();
    edge_index_.assign(static_cast<std::size_t>(n) * n, -1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      auto [u, v] = edges_[i];
      edge_index_[static_cast<std::size_t>(u) * n + v] =
          edge_index_[static_cast<std::size_t>(v) * n + u] =
              static_cast<int>(i);
    }
  }

  /// Phase 1: raise `local_best` (and the shared incumbent, when given)
  /// to this triangulation's optimum if it beats them.
  void improve(long long& local_best, std::atomic<long long>* shared) {
    collecting_ = false;
    local_best_ = &local_best;
    shared_ = shared;
    walk(0, 0);
  }

  /// Phase 2: gather optimum subgraphs of exactly `target` edges as
  /// (canonical form, canonical graph) pairs, deduplicated, at most
  /// `limit`. Runs with no shared state, so the outcome per
  /// triangulation is independent of scheduling.
  void collect(long long target, int limit,
               std::map<std::string, Graph>& out) {
    collecting_ = true;
    target_ = target;
    limit_ = limit;
    out_ = &out;
    walk(0, 0);
  }

private:
  void walk(std::uint64_t removed, std::uint64_t forced) {
    const long long bound =
        static_cast<long long>(edges_.size()) - std::popcount(removed);
    if (collecting_) {
      if (bound < target_) return;
      if (static_cast<int>(out_->size()) >= limit_) return;
    } else {
      long long cutoff = *local_best_;
      if (shared_ != nullptr)
        cutoff = std::max(cutoff, shared_->load(std::memory_order_relaxed));
      if (bound <= cutoff) return;
    }

    Graph g = base_;
    for (std::uint64_t rest = removed; rest != 0; rest &= rest - 1) {
      auto [u, v] = edges_[static_cast<std::size_t>(std::countr_zero(rest))];
      g.remove_edge(u, v);
    }
    // Removing further edges cannot reconnect the graph, so this check
    // prunes the whole subtree.
    if (connected_ && !is_connected(g)) return;

    std::optional<DoubleStarWitness> copy = contains_double_star(g, spec_);
    if (!copy) {
      if (collecting_) {
        assert(bound == target_);
        out_->emplace(canonical_form(g), canonical_graph(g));
      } else {
        *local_best_ = bound;
        if (shared_ != nullptr) atomic_max(*shared_, bound);
      }
      return;
    }

    // Any free subset misses at least one edge of this copy; children
    // remove each in index order, keeping the ones before it.
    std::vector<int> violation = witness_edge_indices(*copy);
    std::uint64_t kept = forced;
    for (int e : violation) {
      const std::uint64_t bit = std::uint64_t{1} << e;
      if ((kept & bit) != 0) continue;
      walk(removed | bit, kept);
      kept |= bit;
    }
  }

  std::vector<int> witness_edge_indices(const DoubleStarWitness& w) const {
    const int n = base_.vertex_count();
    std::vector<int> out;
    out.push_back(edge_index_[static_cast<std::size_t>(w.x) * n + w.y]);
    for (int a : w.leaves_x)
      out.push_back(edge_index_[static_cast<std::size_t>(w.x) * n + a]);
    for (int b : w.leaves_y)
      out.push_back(edge_index_[static_cast<std::size_t>(w.y) * n + b]);
    std::sort(out.begin(), out.end());
    return out;
  }

  Graph base_;
  DoubleStarSpec spec_;
  bool connected_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> edge_index_;

  bool collecting_ = false;
  long long* local_best_ = nullptr;
  std::atomic<long long>* shared_ = nullptr;
  long long target_ = 0;
  int limit_ = 0;
  std::map<std::string, Graph>* out_ = nullptr;
};

std::vector<std::string> merged_witnesses(
    std::vector<std::map<std::string, Graph>>& per_mop, int cap) {
  std::map<std::string, Graph> merged;
  for (auto& part : per_mop)
    for (auto& [canon, graph] : part) merged.emplace(canon, graph);
  std::vector<std::string> out;
  for (const auto& [canon, graph] : merged) {
    if (static_cast<int>(out.size()) >= cap) break;
    out.push_back(graph6_encode(graph));
  }
  return out;
}

ExtremalResult trivial_result(int n, const DoubleStarSpec& spec, Mode mode) {
  ExtremalResult r;
  r.n = n;
  r.p = spec.p;
  r.q = spec.q;
  r.mode = mode;
  Graph g(n);
  if (n == 2) g.add_edge(0, 1);  // K_2 holds no double star
  r.value = g.edge_count();
  r.witnesses = {graph6_encode(g)};
  r.mop_count = 0;
  return r;
}

}  // namespace

std::pair<long long, Graph> max_free_subgraph(const Graph& mop,
                                              const DoubleStarSpec& spec,
                                              bool require_connected,
                                              long long lower_bound_hint) {
  if (!is_maximal_outerplanar(mop))
    throw std::invalid_argument(
        "max_free_subgraph requires a maximal outerplanar host");
  if (lower_bound_hint > 2 * mop.vertex_count() - 3)
    throw std::invalid_argument("hint exceeds the outerplanar edge bound");
  SubgraphScan scan(mop, spec, require_connected);
  long long best = std::max<long long>(lower_bound_hint, -1);
  scan.improve(best, nullptr);
  if (best < 0) return {-1, Graph(0)};
  std::map<std::string, Graph> optima;
  scan.collect(best, kPerMopWitnessCap, optima);
  if (optima.empty())
    throw std::invalid_argument(
        "hint was not achievable inside this host; pass -1 when unsure");
  return {best, optima.begin()->second};
}

ExtremalResult ex_connected(int n, const DoubleStarSpec& spec,
                            const EngineOptions& opts) {
  check_search_cap(n, opts, kSearchCap, "connected search");
  if (opts.cache != nullptr)
    if (auto hit = opts.cache->lookup(n, spec.p, spec.q, Mode::kConnected))
      return *hit;

  const auto start = std::chrono::steady_clock::now();
  ExtremalResult result;
  if (n <= 2) {
    result = trivial_result(n, spec, Mode::kConnected);
  } else {
    result.n = n;
    result.p = spec.p;
    result.q = spec.q;
    result.mode = Mode::kConnected;

    const auto& codes = triangulations_for(n);
    const int count = static_cast<int>(codes.size());
    const int threads = thread_count(opts);
    std::atomic<long long> best{connected_seed(n, spec)};

#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 0; i < count; ++i) {
      SubgraphScan scan(codes[static_cast<std::size_t>(i)].graph(), spec,
                        /*require_connected=*/true);
      long long local = best.load(std::memory_order_relaxed);
      scan.improve(local, &best);
    }
    result.value = best.load();

    // The optimum is known; re-walk each triangulation independently so
    // the witness set does not depend on how phase 1 was scheduled.
    std::vector<std::map<std::string, Graph>> per_mop(
        static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 0; i < count; ++i) {
      SubgraphScan scan(codes[static_cast<std::size_t>(i)].graph(), spec,
                        /*require_connected=*/true);
      scan.collect(result.value, kPerMopWitnessCap,
                   per_mop[static_cast<std::size_t>(i)]);
    }
    result.witnesses = merged_witnesses(per_mop, opts.witness_cap);
    result.mop_count = count;
  }

  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (opts.cache != nullptr) opts.cache->store(result);
  return result;
}

namespace {

void enumerate_partitions(int remaining, int max_part, int parts_used,
                          long long sum_so_far,
                          const std::vector<long long>& conn_value,
                          const std::vector<long long>& best_total,
                          long long target, int target_parts,
                          std::vector<int>& parts,
                          std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    if (sum_so_far == target &&
        static_cast<int>(parts.size()) == target_parts)
      out.push_back(parts);
    return;
  }
  if (parts_used >= target_parts) return;
  if (sum_so_far + best_total[static_cast<std::size_t>(remaining)] < target)
    return;
  for (int part = std::min(max_part, remaining); part >= 1; --part) {
    parts.push_back(part);
    enumerate_partitions(remaining - part, part, parts_used + 1,
                         sum_so_far + conn_value[static_cast<std::size_t>(
                                          part)],
                         conn_value, best_total, target, target_parts, parts,
                         out);
    parts.pop_back();
  }
}

}  // namespace

ExtremalResult ex_general(int n, const DoubleStarSpec& spec,
                          const EngineOptions& opts) {
  check_search_cap(n, opts, kSearchCap, "general search");
  if (opts.cache != nullptr)
    if (auto hit = opts.cache->lookup(n, spec.p, spec.q, Mode::kGeneral))
      return *hit;

  const auto start = std::chrono::steady_clock::now();

  std::vector<ExtremalResult> conn(static_cast<std::size_t>(n) + 1);
  std::vector<long long> conn_value(static_cast<std::size_t>(n) + 1, 0);
  long long mops_scanned = 0;
  for (int k = 1; k <= n; ++k) {
    conn[static_cast<std::size_t>(k)] = ex_connected(k, spec, opts);
    conn_value[static_cast<std::size_t>(k)] =
        conn[static_cast<std::size_t>(k)].value;
    mops_scanned += conn[static_cast<std::size_t>(k)].mop_count;
  }

  // ex(k) = max(ex_c(k), max_j ex_c(j) + ex(k-j)); component counts
  // break value ties toward fewer parts.
  std::vector<long long> general(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> parts_needed(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 1; k <= n; ++k) {
    long long best = conn_value[static_cast<std::size_t>(k)];
    int parts = 1;
    for (int j = 1; j < k; ++j) {
      long long v = conn_value[static_cast<std::size_t>(j)] +
                    general[static_cast<std::size_t>(k - j)];
      int c = 1 + parts_needed[static_cast<std::size_t>(k - j)];
      if (v > best || (v == best && c < parts)) {
        best = v;
        parts = c;
      }
    }
    general[static_cast<std::size_t>(k)] = best;
    parts_needed[static_cast<std::size_t>(k)] = parts;
  }

  ExtremalResult result;
  result.n = n;
  result.p = spec.p;
  result.q = spec.q;
  result.mode = Mode::kGeneral;
  result.value = general[static_cast<std::size_t>(n)];
  result.mop_count = mops_scanned;

  // Witnesses: every partition of n whose parts' connected optima sum
  // to the maximum using the fewest components, each part contributing
  // its canonical-least connected witness.
  std::vector<std::vector<int>> partitions;
  std::vector<int> scratch;
  enumerate_partitions(n, n, 0, 0, conn_value, general, result.value,
                       parts_needed[static_cast<std::size_t>(n)], scratch,
                       partitions);
  std::map<std::string, Graph> assembled;
  for (const auto& parts : partitions) {
    Graph whole(0);
    for (int part : parts) {
      Graph piece =
          graph6_decode(conn[static_cast<std::size_t>(part)].witnesses.at(0));
      whole = whole.disjoint_union(piece);
    }
    assembled.emplace(canonical_form(whole), canonical_graph(whole));
  }
  for (const auto& [canon, graph] : assembled) {
    if (static_cast<int>(result.witnesses.size()) >= opts.witness_cap) break;
    result.witnesses.push_back(graph6_encode(graph));
  }

  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (opts.cache != nullptr) opts.cache->store(result);
  return result;
}

VerifyReport verify_theorems(int n_max, const EngineOptions& opts) {
  if (n_max < 1)
    throw std::invalid_argument("verify_theorems requires n_max >= 1");
  {
    int cap = opts.override_cap ? kEnumerationCap
                                : std::min(opts.cap, kVerifyCap);
    if (n_max > cap)
      throw ResourceCapError("verification refused at n_max = " +
                             std::to_string(n_max) + " (cap " +
                             std::to_string(cap) + ")");
  }

  VerifyReport report;
  report.n_max = n_max;
  for (int p = 1; p <= n_max; ++p)
    for (int q = p; p + q <= n_max; ++q) {
      DoubleStarSpec spec(p, q);
      for (int n = 1; n <= n_max; ++n)
        for (Mode mode : {Mode::kConnected, Mode::kGeneral}) {
          TuranBound bound = turan_formula(n, spec, mode);
          if (bound.kind != TuranBound::Kind::kExact) continue;
          ExtremalResult r = mode == Mode::kConnected
                                 ? ex_connected(n, spec, opts)
                                 : ex_general(n, spec, opts);
          VerifyRow row{n,       p,
                        q,       mode,
                        bound.value, r.value,
                        bound.value == r.value, bound.rule};
          report.all_match = report.all_match && row.match;
          report.rows.push_back(std::move(row));
        }
    }
  return report;
}

ProbeReport probe_conjecture(int from, int to, const EngineOptions& opts) {
  if (from < 1 || to < from)
    throw std::invalid_argument("probe range must satisfy 1 <= from <= to");
  DoubleStarSpec spec(2, 3);
  ProbeReport report;
  for (int n = from; n <= to; ++n) {
    ExtremalResult conn = ex_connected(n, spec, opts);
    ExtremalResult gen = ex_general(n, spec, opts);
    ProbeRow row;
    row.n = n;
    row.connected_value = conn.value;
    row.general_value = gen.value;
    row.formula_value = n >= 6 ? f_formula(n) : -1;
    row.meets_lower_bound =
        n < 7 || (conn.value >= row.formula_value &&
                  gen.value >= row.formula_value);
    row.modes_equal = conn.value == gen.value;
    row.matches_formula = row.formula_value >= 0 &&
                          conn.value == row.formula_value &&
                          gen.value == row.formula_value;
    row.witness_connected =
        conn.witnesses.empty() ? "" : conn.witnesses.front();
    row.witness_general = gen.witnesses.empty() ? "" : gen.witnesses.front();
    report.lower_bounds_ok =
        report.lower_bounds_ok && row.meets_lower_bound;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace opturan
