#pragma once

// 2-backbone colouring of a chordal host with a C4-free backbone using at
// most (3 omega + 7)/2 colours (odd omega) or (3 omega + 8)/2 (even omega).
//
// The vertex set is split into k = (omega+3)/2 classes so that every bag of a
// smooth tree decomposition holds at most two vertices of each class and no
// backbone edge stays inside a class. Restricting the decomposition to one
// class gives bags of size <= 2, so each class induces a forest. Class i is
// then 2-coloured with {3i-2, 3i-1}; different classes are at least two
// colours apart, which covers every backbone edge.

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bbc/algorithms/double_spaced.hpp"
#include "bbc/chordal.hpp"
#include "bbc/report.hpp"
#include "bbc/structure.hpp"
#include "bbc/verify.hpp"

namespace bbc {

struct ForestPartition {
  std::vector<std::vector<Vertex>> classes;
  std::vector<int> class_of;  // 0-based class index per vertex
};

/// Greedy search ran out of moves. Callers fall back to another algorithm.
class PartitionDeadlock : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ForestPartitionOptions {
  /// How many earlier placements a deadlock may revisit.
  int backtrack_window = 8;
  /// Cap on placements tried during one backtracking episode.
  int backtrack_budget = 20000;
};

/// Empty when `p` satisfies every partition invariant for (g, s, h).
inline std::optional<std::string> forest_partition_error(const Graph& g,
                                                         const SmoothTreeDecomposition& s,
                                                         const Graph& h, const ForestPartition& p) {
  const int n = g.vertex_count();
  if (static_cast<int>(p.class_of.size()) != n) return "class_of has the wrong size";
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (std::size_t c = 0; c < p.classes.size(); ++c)
    for (Vertex v : p.classes[c]) {
      if (v < 0 || v >= n || p.class_of[v] != static_cast<int>(c)) return "classes and class_of disagree";
      ++seen[v];
    }
  for (Vertex v = 0; v < n; ++v)
    if (seen[v] != 1) return "vertex " + std::to_string(v + 1) + " is not in exactly one class";
  for (std::size_t c = 0; c < p.classes.size(); ++c)
    if (!is_forest(induced_subgraph(g, p.classes[c])))
      return "class " + std::to_string(c + 1) + " contains a cycle";
  for (auto [u, v] : h.edges())
    if (p.class_of[u] == p.class_of[v])
      return "backbone edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) + " inside a class";
  std::vector<int> count(p.classes.size(), 0);
  for (int t = 0; t < s.size(); ++t) {
    std::fill(count.begin(), count.end(), 0);
    for (Vertex v : s.bags[t])
      if (++count[p.class_of[v]] > 2) return "bag " + std::to_string(t) + " holds a class three times";
  }
  return std::nullopt;
}

namespace detail {

/// One placement: vertex `v` receives a class, judged against bag `node`.
struct Placement {
  Vertex v;
  int node;
};

class ForestPartitioner {
 public:
  ForestPartitioner(const Graph& g, const SmoothTreeDecomposition& s, const Graph& h,
                    const ForestPartitionOptions& opt)
      : g_(g), s_(s), h_(h), opt_(opt), k_((s.width + 3) / 2) {
    const int n = g.vertex_count();
    class_of_.assign(static_cast<std::size_t>(n), -1);
    holders_.resize(static_cast<std::size_t>(n));
    for (int t = 0; t < s.size(); ++t)
      for (Vertex v : s.bags[t]) holders_[v].push_back(t);
    if (s.size() == 0) return;
    // Root vertices first, most backbone-constrained first, then one
    // placement per entering vertex in node order (parents precede children).
    std::vector<Vertex> root = s.bags[0];
    std::stable_sort(root.begin(), root.end(),
                     [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
    for (Vertex v : root) steps_.push_back({v, 0});
    for (int t = 1; t < s.size(); ++t) steps_.push_back({s.entering[t], t});
  }

  ForestPartition run() {
    const int total = static_cast<int>(steps_.size());
    std::vector<int> tried(static_cast<std::size_t>(total), 0);  // candidate rank per step
    int i = 0;
    int floor = 0, deadlock_at = -1, budget = 0;
    while (i < total) {
      if (place(i, tried[i])) {
        if (i == deadlock_at) deadlock_at = -1;
        ++i;
        if (i < total) tried[i] = 0;
        continue;
      }
      if (deadlock_at < 0 && repair_one_mate(i)) {
        ++repairs_;
        ++i;
        if (i < total) tried[i] = 0;
        continue;
      }
      // Chronological backtracking, at most `backtrack_window` steps back.
      if (deadlock_at < 0) {
        deadlock_at = i;
        floor = std::max(0, i - opt_.backtrack_window);
        budget = opt_.backtrack_budget;
        ++backtracks_;
      }
      if (i <= floor || --budget < 0)
        throw PartitionDeadlock("no class available for vertex " + std::to_string(steps_[deadlock_at].v + 1));
      class_of_[steps_[i].v] = -1;
      --i;
      class_of_[steps_[i].v] = -1;
      ++tried[i];
    }
    ForestPartition out;
    out.class_of = class_of_;
    out.classes.resize(static_cast<std::size_t>(k_));
    for (Vertex v = 0; v < g_.vertex_count(); ++v) out.classes[class_of_[v]].push_back(v);
    return out;
  }

  int repairs() const { return repairs_; }
  int backtracks() const { return backtracks_; }

 private:
  /// Classes allowed for v against bag `node`, best first: classes with one
  /// member in the bag (pairing keeps empty classes in reserve), then empty.
  std::vector<int> candidates(Vertex v, int node) const {
    std::vector<int> count(static_cast<std::size_t>(k_), 0);
    for (Vertex u : s_.bags[node])
      if (u != v && class_of_[u] >= 0) ++count[class_of_[u]];
    std::vector<bool> banned(static_cast<std::size_t>(k_), false);
    for (Vertex u : h_.neighbours(v))
      if (class_of_[u] >= 0) banned[class_of_[u]] = true;
    std::vector<int> out;
    for (int want : {1, 0})
      for (int c = 0; c < k_; ++c)
        if (!banned[c] && count[c] == want) out.push_back(c);
    return out;
  }

  bool place(int step, int rank) {
    const auto [v, node] = steps_[step];
    auto cand = candidates(v, node);
    if (rank >= static_cast<int>(cand.size())) return false;
    class_of_[v] = cand[rank];
    return true;
  }

  /// Would v fit class c in every bag already touched by the search?
  bool fits_everywhere(Vertex v, int c, int upto_node) const {
    for (Vertex u : h_.neighbours(v))
      if (class_of_[u] == c) return false;
    for (int t : holders_[v]) {
      if (t > upto_node) continue;
      int count = 0;
      for (Vertex u : s_.bags[t])
        if (u != v && class_of_[u] == c) ++count;
      if (count >= 2) return false;
    }
    return true;
  }

  /// Move one already placed bag-mate to another class so that step i fits.
  bool repair_one_mate(int i) {
    const auto [v, node] = steps_[i];
    for (Vertex x : s_.bags[node]) {
      if (x == v || class_of_[x] < 0) continue;
      const int old = class_of_[x];
      for (int c = 0; c < k_; ++c) {
        if (c == old) continue;
        class_of_[x] = -1;
        if (!fits_everywhere(x, c, node)) {
          class_of_[x] = old;
          continue;
        }
        class_of_[x] = c;
        if (place(i, 0)) return true;
        class_of_[x] = old;
      }
    }
    return false;
  }

  const Graph& g_;
  const SmoothTreeDecomposition& s_;
  const Graph& h_;
  ForestPartitionOptions opt_;
  int k_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> holders_;
  std::vector<Placement> steps_;
  int repairs_ = 0;
  int backtracks_ = 0;
};

}  // namespace detail

/// Partition into (omega+3)/2 classes; omega = s.width must be odd and the
/// backbone C4-free. Throws PartitionDeadlock when the search gives up.
inline ForestPartition partition_into_forests(const Graph& g, const SmoothTreeDecomposition& s,
                                              const Graph& h, const ForestPartitionOptions& opt = {}) {
  if (g.vertex_count() > 0 && s.width % 2 == 0) throw PreconditionError("odd omega");
  if (auto c4 = is_c4_free(h); !c4) {
    const auto& w = *c4.witness;
    throw PreconditionError("C4-free backbone", "4-cycle " + std::to_string(w[0] + 1) + "-" +
                                                    std::to_string(w[1] + 1) + "-" + std::to_string(w[2] + 1) +
                                                    "-" + std::to_string(w[3] + 1));
  }
  detail::ForestPartitioner search(g, s, h, opt);
  ForestPartition p = search.run();
  if (auto err = forest_partition_error(g, s, h, p)) throw InternalError("forest partition: " + *err);
  return p;
}

struct ForestColouringDetail {
  int classes = 0;
  /// Size of the independent set set aside when omega is even.
  int transversal = 0;
};

namespace detail {

/// Odd-omega case: class i gets colours {3i-2, 3i-1} (1-based i).
inline Colouring colour_odd_forest_partition(const BackboneInstance& inst, const ForestPartitionOptions& opt,
                                             int* classes) {
  const Graph& g = inst.host();
  const auto s = smooth_tree_decomposition(g);
  const ForestPartition p = partition_into_forests(g, s, inst.backbone(), opt);
  if (classes) *classes = static_cast<int>(p.classes.size());
  Colouring out(g.vertex_count());
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    const auto& cls = p.classes[i];
    const Graph forest = induced_subgraph(g, cls);
    auto two = is_bipartite(forest);
    if (!two) throw InternalError("forest class is not bipartite");
    const int low = 3 * static_cast<int>(i + 1) - 2;
    for (std::size_t j = 0; j < cls.size(); ++j) out.set(cls[j], low + two.partition->side[j]);
  }
  return out;
}

}  // namespace detail

/// Span <= (3 omega + 7)/2 for odd omega, (3 omega + 8)/2 for even omega.
/// Throws PartitionDeadlock if the class search fails (see run_forest_partition).
inline Colouring colour_forest_partition(const BackboneInstance& inst, const ForestPartitionOptions& opt = {},
                                         ForestColouringDetail* info = nullptr) {
  if (inst.q() != 2) throw PreconditionError("q = 2");
  const Graph& g = inst.host();
  if (!is_chordal(g)) throw PreconditionError("chordal host");
  if (auto c4 = is_c4_free(inst.backbone()); !c4) throw PreconditionError("C4-free backbone");
  const int n = g.vertex_count();
  const int omega = chordal_clique_number(g);
  ForestColouringDetail local;
  Colouring out(n);
  if (n == 0) return out;
  if (omega % 2 == 1) {
    out = detail::colour_odd_forest_partition(inst, opt, &local.classes);
  } else {
    // Remove an independent set meeting every maximum clique, solve the odd
    // case on the rest, give the removed vertices one colour two above it.
    const auto removed = transversal_independent_set(g);
    std::vector<bool> in_i(static_cast<std::size_t>(n), false);
    for (Vertex v : removed) in_i[v] = true;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
      if (!in_i[v]) rest.push_back(v);
    const auto sub = inst.induced(rest);
    if (!rest.empty() && chordal_clique_number(sub.host()) != omega - 1)
      throw InternalError("transversal set did not lower omega by one");
    const Colouring part = detail::colour_odd_forest_partition(sub, opt, &local.classes);
    for (std::size_t i = 0; i < rest.size(); ++i) out.set(rest[i], part[static_cast<Vertex>(i)]);
    const int top = (3 * (omega - 1) + 7) / 2 + 2;
    for (Vertex v : removed) out.set(v, top);
    local.transversal = static_cast<int>(removed.size());
  }
  require_valid(inst, out, "colour_forest_partition");
  const int bound = omega % 2 == 1 ? (3 * omega + 7) / 2 : (3 * omega + 8) / 2;
  if (out.span() > bound) throw InternalError("forest partition colouring exceeds its bound");
  if (info) *info = local;
  return out;
}

/// Runs the forest-partition algorithm; on a search deadlock returns the
/// double-spaced colouring instead, marked as not certified.
inline ColouringResult run_forest_partition(const BackboneInstance& inst, const ForestPartitionOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  ColouringResult res;
  auto& r = res.report;
  r.algorithm = "c4free";
  r.n = inst.vertex_count();
  r.omega = is_chordal(inst.host()) ? chordal_clique_number(inst.host()) : 0;
  r.bound = r.omega % 2 == 1 ? (3 * r.omega + 7) / 2 : (3 * r.omega + 8) / 2;
  try {
    res.colouring = colour_forest_partition(inst, opt);
    r.certified = true;
  } catch (const PartitionDeadlock& e) {
    res.colouring = double_spaced_colouring(inst);
    r.certified = false;
    r.note = std::string("fallback=double: ") + e.what();
  }
  r.valid = true;
  r.span = res.colouring.span();
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace bbc
