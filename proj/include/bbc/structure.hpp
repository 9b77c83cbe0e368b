#pragma once

// Structural recognisers used as algorithm preconditions: components,
// bipartiteness (with odd-cycle witness), C4-freeness, acyclicity, degeneracy.

#include <algorithm>
#include <array>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "bbc/graph.hpp"

namespace bbc {

/// Components in order of their smallest vertex; each component sorted.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> parts;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(parts.size());
    parts.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      parts.back().push_back(v);
      for (Vertex w : g.neighbours(v))
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(parts.back().begin(), parts.back().end());
  }
  return parts;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

struct Bipartition {
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  /// side[v] is 0 for A, 1 for B.
  std::vector<int> side;
};

struct BipartiteResult {
  std::optional<Bipartition> partition;
  /// Odd cycle (closed walk without the repeated endpoint) when not bipartite.
  std::vector<Vertex> odd_cycle;

  explicit operator bool() const { return partition.has_value(); }
};

/// BFS 2-colouring. The smallest vertex of every component goes to side A,
/// so an edgeless graph has everything in A.
inline BipartiteResult is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (Vertex w : g.neighbours(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push(w);
        } else if (side[w] == side[v]) {
          // Same BFS level parity: climb both tree paths to their meeting point.
          std::vector<Vertex> left{v}, right{w};
          Vertex a = v, b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          std::reverse(right.begin(), right.end());
          BipartiteResult r;
          r.odd_cycle = std::move(left);
          r.odd_cycle.insert(r.odd_cycle.end(), right.begin(), right.end());
          return r;
        }
      }
    }
  }
  Bipartition p;
  p.side = side;
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? p.side_a : p.side_b).push_back(v);
  return BipartiteResult{std::move(p), {}};
}

struct C4Result {
  bool free = true;
  /// Cycle u-a-v-b when not C4-free.
  std::optional<std::array<Vertex, 4>> witness;

  explicit operator bool() const { return free; }
};

/// A graph contains C4 as a (not necessarily induced) subgraph exactly when
/// two vertices share two neighbours.
inline C4Result is_c4_free(const Graph& g) {
  const int n = g.vertex_count();
  // via[w] = the neighbour of u through which w was first reached.
  std::vector<Vertex> via(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> touched;
  for (Vertex u = 0; u < n; ++u) {
    touched.clear();
    for (Vertex a : g.neighbours(u)) {
      for (Vertex w : g.neighbours(a)) {
        if (w == u) continue;
        if (via[w] >= 0) {
          std::array<Vertex, 4> cycle{u, via[w], w, a};
          for (Vertex t : touched) via[t] = -1;
          return C4Result{false, cycle};
        }
        via[w] = a;
        touched.push_back(w);
      }
    }
    for (Vertex t : touched) via[t] = -1;
  }
  return {};
}

/// True when g has no cycle.
inline bool is_forest(const Graph& g) {
  return g.edge_count() + connected_components(g).size() == static_cast<std::size_t>(g.vertex_count());
}

/// Smallest d such that every subgraph has a vertex of degree <= d.
inline int degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.insert({deg[v], v});
  }
  std::vector<bool> gone(static_cast<std::size_t>(n), false);
  int best = 0;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    best = std::max(best, d);
    gone[v] = true;
    for (Vertex w : g.neighbours(v))
      if (!gone[w]) {
        queue.erase({deg[w], w});
        queue.insert({--deg[w], w});
      }
  }
  return best;
}

}  // namespace bbc
