#pragma once

// Exact solvers: branch and bound for the linear and circular q-backbone
// chromatic numbers, exhaustive oracles for tiny instances, and the maximum
// average degree via a max-flow densest-subgraph test.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bbc/chordal.hpp"
#include "bbc/graph.hpp"
#include "bbc/maxflow.hpp"
#include "bbc/rational.hpp"
#include "bbc/structure.hpp"
#include "bbc/verify.hpp"

namespace bbc {

enum class Metric { linear, circular };

struct ExactResult {
  /// The optimum when `exact`; otherwise the best span found (== upper_bound).
  int optimum = 0;
  int lower_bound = 0;
  int upper_bound = 0;
  bool exact = false;
  /// Colouring achieving `upper_bound` (circular colourings use colours 1..k).
  Colouring witness;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

struct SolverOptions {
  /// Wall-clock budget in seconds; <= 0 means unlimited.
  double budget_seconds = 10.0;
};

namespace detail {

class BudgetExceeded {};

/// Greedy clique lower bound (exact for chordal graphs).
inline int clique_lower_bound(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  if (is_chordal(g)) return chordal_clique_number(g);
  int best = 1;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    std::vector<Vertex> clique{s};
    for (Vertex w : g.neighbours(s))
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex x) { return g.has_edge(x, w); }))
        clique.push_back(w);
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

/// Static branching priority: reverse PEO for chordal hosts, otherwise
/// reverse smallest-last (degeneracy) order.
inline std::vector<int> static_rank(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Vertex> order;
  auto mcs = mcs_ordering(g);
  if (check_peo(g, mcs)) {
    order.assign(mcs.order.rbegin(), mcs.order.rend());
  } else {
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<bool> gone(static_cast<std::size_t>(n), false);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int i = 0; i < n; ++i) {
      Vertex best = -1;
      for (Vertex v = 0; v < n; ++v)
        if (!gone[v] && (best < 0 || deg[v] < deg[best])) best = v;
      gone[best] = true;
      order.push_back(best);
      for (Vertex w : g.neighbours(best))
        if (!gone[w]) --deg[w];
    }
    std::reverse(order.begin(), order.end());
  }
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  return rank;
}

/// Decides whether a colouring with colours 1..k exists.
class FixedSpanSearch {
 public:
  FixedSpanSearch(const BackboneInstance& inst, Metric metric, int k,
                  const std::vector<int>& rank, std::uint64_t& nodes,
                  std::chrono::steady_clock::time_point deadline, bool has_deadline)
      : inst_(inst),
        metric_(metric),
        k_(k),
        n_(inst.vertex_count()),
        rank_(rank),
        nodes_(nodes),
        deadline_(deadline),
        has_deadline_(has_deadline),
        forbid_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(k + 1), 0),
        free_(static_cast<std::size_t>(n_), k),
        col_(n_) {}

  std::optional<Colouring> run() {
    if (n_ == 0) return col_;
    if (k_ < 1) return std::nullopt;
    if (search(0)) return col_;
    return std::nullopt;
  }

 private:
  int& f(Vertex v, Colour c) { return forbid_[static_cast<std::size_t>(v) * (k_ + 1) + c]; }

  bool blocked_by_backbone(Colour a, Colour b) const {
    int d = a > b ? a - b : b - a;
    if (metric_ == Metric::linear) return d < inst_.q();
    return d < inst_.q() || d > k_ - inst_.q();
  }

  void apply(Vertex v, Colour c, int delta) {
    auto touch = [&](Vertex u, Colour x) {
      int& cell = f(u, x);
      if (delta > 0 && cell++ == 0) --free_[u];
      if (delta < 0 && --cell == 0) ++free_[u];
    };
    for (Vertex u : inst_.host().neighbours(v)) touch(u, c);
    for (Vertex u : inst_.backbone().neighbours(v))
      for (Colour x = 1; x <= k_; ++x)
        if (x != c && blocked_by_backbone(c, x)) touch(u, x);
  }

  bool search(int depth) {
    if (depth == n_) return true;
    if ((++nodes_ & 1023u) == 0 && has_deadline_ && std::chrono::steady_clock::now() > deadline_)
      throw BudgetExceeded{};
    // Most constrained uncoloured vertex; ties by static rank.
    Vertex v = -1;
    for (Vertex u = 0; u < n_; ++u) {
      if (col_[u] != 0) continue;
      if (free_[u] == 0) return false;
      if (v < 0 || free_[u] < free_[v] || (free_[u] == free_[v] && rank_[u] < rank_[v])) v = u;
    }
    // Symmetry: c -> k+1-c preserves both metrics, and rotation preserves the
    // circular one, so the first vertex can be restricted.
    Colour hi = k_;
    if (depth == 0) hi = metric_ == Metric::circular ? 1 : (k_ + 1) / 2;
    for (Colour c = 1; c <= hi; ++c) {
      if (f(v, c) != 0) continue;
      col_.set(v, c);
      apply(v, c, +1);
      if (search(depth + 1)) return true;
      apply(v, c, -1);
      col_.set(v, 0);
    }
    return false;
  }

  const BackboneInstance& inst_;
  Metric metric_;
  int k_;
  int n_;
  const std::vector<int>& rank_;
  std::uint64_t& nodes_;
  std::chrono::steady_clock::time_point deadline_;
  bool has_deadline_;
  std::vector<int> forbid_;
  std::vector<int> free_;
  Colouring col_;
};

inline Colouring greedy_proper_colouring(const Graph& g, const std::vector<int>& rank) {
  const int n = g.vertex_count();
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[rank[v]] = v;
  Colouring col(n);
  std::vector<int> mark(static_cast<std::size_t>(n) + 2, -1);
  for (Vertex v : order) {
    for (Vertex w : g.neighbours(v))
      if (col[w] > 0) mark[col[w]] = v;
    Colour c = 1;
    while (mark[c] == v) ++c;
    col.set(v, c);
  }
  return col;
}

inline ExactResult solve(const BackboneInstance& inst, Metric metric, const SolverOptions& opt);

/// Lower bound from cliques and the backbone's chromatic number.
inline int initial_lower_bound(const BackboneInstance& inst, Metric metric,
                               const SolverOptions& opt) {
  const int n = inst.vertex_count();
  if (n == 0) return 0;
  const int q = inst.q();
  int lb = std::max(1, clique_lower_bound(inst.host()));
  const Graph& h = inst.backbone();
  if (h.edge_count() > 0) {
    int chi_h = 2;
    if (!is_bipartite(h)) {
      // chi(H) = BBC_1(H, edgeless); the recursion stops because the inner
      // instance has no backbone edges.
      BackboneInstance plain(h, Graph(n), 1);
      chi_h = solve(plain, Metric::linear, opt).lower_bound;
    }
    lb = std::max(lb, q * chi_h - q + 1);
    if (metric == Metric::circular) lb = std::max(lb, 2 * q);
  }
  return lb;
}

inline ExactResult solve(const BackboneInstance& inst, Metric metric, const SolverOptions& opt) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const bool has_deadline = opt.budget_seconds > 0;
  const auto deadline =
      start + std::chrono::duration_cast<clock::duration>(
                  std::chrono::duration<double>(has_deadline ? opt.budget_seconds : 0.0));
  ExactResult res;
  const int n = inst.vertex_count();
  const int q = inst.q();
  if (n == 0) {
    res.exact = true;
    return res;
  }
  const auto rank = static_rank(inst.host());

  // Upper bound: stretch a proper colouring f to q*f - q + 1.
  Colouring f = greedy_proper_colouring(inst.host(), rank);
  Colouring stretched(n);
  for (Vertex v = 0; v < n; ++v) stretched.set(v, q * f[v] - q + 1);
  int ub = stretched.span();
  if (metric == Metric::circular && inst.backbone().edge_count() > 0) ub += q - 1;
  res.witness = stretched;
  res.upper_bound = ub;
  res.optimum = ub;

  int lb = initial_lower_bound(inst, metric, opt);
  res.lower_bound = std::min(lb, ub);
  try {
    for (int k = res.lower_bound; k < ub; ++k) {
      FixedSpanSearch search(inst, metric, k, rank, res.nodes, deadline, has_deadline);
      if (auto found = search.run()) {
        res.witness = *found;
        res.upper_bound = res.optimum = k;
        break;
      }
      res.lower_bound = k + 1;
    }
    res.lower_bound = res.upper_bound;
    res.exact = true;
  } catch (const BudgetExceeded&) {
    res.exact = false;
  }
  res.seconds = std::chrono::duration<double>(clock::now() - start).count();
  return res;
}

}  // namespace detail

/// BBC_q(G, H) by bottom-up k with a DSATUR-style search per k.
inline ExactResult exact_bbc(const BackboneInstance& inst, const SolverOptions& opt = {}) {
  return detail::solve(inst, Metric::linear, opt);
}

/// CBC_q(G, H): same search with the circular gap constraint.
inline ExactResult exact_cbc(const BackboneInstance& inst, const SolverOptions& opt = {}) {
  return detail::solve(inst, Metric::circular, opt);
}

/// Exact chromatic number (BBC_1 with an edgeless backbone).
inline ExactResult exact_chromatic_number(const Graph& g, const SolverOptions& opt = {}) {
  return exact_bbc(BackboneInstance(g, Graph(g.vertex_count()), 1), opt);
}

namespace detail {

template <typename Valid>
int brute_force_min_span(const BackboneInstance& inst, int cap, Valid valid) {
  const int n = inst.vertex_count();
  if (n > cap) throw PreconditionError("brute force limited to n <= " + std::to_string(cap));
  if (n == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<Colour> c(static_cast<std::size_t>(n), 1);
    while (true) {
      Colouring col(c);
      if (valid(col, k)) return k;
      int i = 0;
      while (i < n && c[i] == k) c[i++] = 1;
      if (i == n) break;
      ++c[i];
    }
  }
}

}  // namespace detail

/// Reference semantics for exact_bbc: enumerate all k^n assignments.
inline int brute_force_bbc(const BackboneInstance& inst) {
  return detail::brute_force_min_span(inst, 8, [&](const Colouring& col, int) {
    return verify_backbone_colouring(inst, col).valid;
  });
}

/// Reference semantics for exact_cbc.
inline int brute_force_cbc(const BackboneInstance& inst) {
  return detail::brute_force_min_span(inst, 8, [&](const Colouring& col, int k) {
    return verify_circular_colouring(inst, col, k).valid;
  });
}

// ---------------------------------------------------------------------------
// Maximum average degree

struct MadResult {
  /// Mad(H) = max over subgraphs of 2|E'|/|V'|.
  Rational value;
  std::vector<Vertex> witness;
};

inline Rational average_degree(const Graph& h, const std::vector<Vertex>& vertices) {
  if (vertices.empty()) return Rational(0);
  std::vector<bool> in(static_cast<std::size_t>(h.vertex_count()), false);
  for (Vertex v : vertices) in.at(v) = true;
  std::int64_t edges = 0;
  for (auto [u, v] : h.edges()) edges += in[u] && in[v];
  return Rational(2 * edges, static_cast<std::int64_t>(vertices.size()));
}

namespace detail {

/// Maximises den*|E(S)| - num*|S| by a closure cut; returns S when positive.
inline std::optional<std::vector<Vertex>> denser_than(const Graph& h, std::int64_t num,
                                                      std::int64_t den) {
  const int n = h.vertex_count();
  const int m = static_cast<int>(h.edge_count());
  const int s = 0, t = 1, first_edge = 2, first_vertex = 2 + m;
  FlowNetwork net(2 + m + n);
  for (int i = 0; i < m; ++i) {
    auto [u, v] = h.edges()[i];
    net.add_edge(s, first_edge + i, den);
    net.add_edge(first_edge + i, first_vertex + u, FlowNetwork::infinity);
    net.add_edge(first_edge + i, first_vertex + v, FlowNetwork::infinity);
  }
  for (Vertex v = 0; v < n; ++v) net.add_edge(first_vertex + v, t, num);
  const std::int64_t flow = net.max_flow(s, t);
  if (den * m - flow <= 0) return std::nullopt;
  auto side = net.source_side(s);
  std::vector<Vertex> set;
  for (Vertex v = 0; v < n; ++v)
    if (side[first_vertex + v]) set.push_back(v);
  return set;
}

}  // namespace detail

/// Exact Mad. Binary search over dyadic thresholds g for "some S has
/// |E(S)|/|S| > g" until the bracket is narrower than 1/n^2; distinct
/// densities with denominators <= n are at least that far apart, so the best
/// witness found is optimal.
inline MadResult exact_mad(const Graph& h) {
  const int n = h.vertex_count();
  if (n == 0) return {Rational(0), {}};
  if (h.edge_count() == 0) return {Rational(0), {0}};
  std::vector<Vertex> best = *detail::denser_than(h, 0, 1);
  Rational best_value = average_degree(h, best);
  std::int64_t lo = 0, hi = static_cast<std::int64_t>(h.edge_count()), den = 1;
  const std::int64_t n2 = static_cast<std::int64_t>(n) * n;
  while ((hi - lo) * n2 >= den) {
    lo *= 2;
    hi *= 2;
    den *= 2;
    const std::int64_t mid = (lo + hi) / 2;
    if (auto s = detail::denser_than(h, mid, den)) {
      lo = mid;
      Rational value = average_degree(h, *s);
      if (value > best_value) {
        best_value = value;
        best = std::move(*s);
      }
    } else {
      hi = mid;
    }
  }
  return {best_value, best};
}

/// Oracle: all non-empty vertex subsets (n <= 15). Ties prefer larger sets.
inline MadResult brute_force_mad(const Graph& h) {
  const int n = h.vertex_count();
  if (n > 15) throw PreconditionError("brute force limited to n <= 15");
  if (n == 0) return {Rational(0), {}};
  Rational best(-1);
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::int64_t edges = 0;
    for (auto [u, v] : h.edges()) edges += ((mask >> u) & 1u) && ((mask >> v) & 1u);
    const int size = __builtin_popcount(mask);
    Rational value(2 * edges, size);
    if (value > best || (value == best && size > __builtin_popcount(best_mask))) {
      best = value;
      best_mask = mask;
    }
  }
  std::vector<Vertex> witness;
  for (Vertex v = 0; v < n; ++v)
    if ((best_mask >> v) & 1u) witness.push_back(v);
  return {best, witness};
}

}  // namespace bbc
