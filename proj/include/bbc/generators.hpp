#pragma once

// Seeded instance generators. The same GeneratorSpec always produces the same
// instance, byte for byte.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "bbc/chordal.hpp"
#include "bbc/graph.hpp"
#include "bbc/random.hpp"
#include "bbc/structure.hpp"

namespace bbc {

namespace detail {

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.vertex_count(), edges);
}

inline std::vector<Vertex> random_permutation(int n, SplitMix64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  return perm;
}

inline std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace detail

/// Core clique K of size 3r; for every r-subset X of K a fresh clique K_X of
/// 2r vertices joined to X. The backbone is every K–K_X edge. Forces
/// BBC_2 >= 5r while omega = 3r.
inline BackboneInstance gen_lower_bound_family(int r, int max_r = 5) {
  if (r < 1) throw PreconditionError("r >= 1");
  if (r > max_r) throw PreconditionError("r <= " + std::to_string(max_r), "family grows as C(3r, r)");
  const int core = 3 * r;
  const auto subsets = detail::binomial(core, r);
  const int n = core + static_cast<int>(subsets) * 2 * r;
  std::vector<Edge> host, backbone;
  for (Vertex a = 0; a < core; ++a)
    for (Vertex b = a + 1; b < core; ++b) host.emplace_back(a, b);
  std::vector<int> pick(static_cast<std::size_t>(r));
  std::iota(pick.begin(), pick.end(), 0);
  Vertex next = core;
  while (true) {
    const Vertex first = next;
    next += 2 * r;
    for (Vertex a = first; a < next; ++a) {
      for (Vertex b = a + 1; b < next; ++b) host.emplace_back(a, b);
      for (int x : pick) {
        host.emplace_back(x, a);
        backbone.emplace_back(x, a);
      }
    }
    // Next r-subset of {0..core-1} in lexicographic order.
    int i = r - 1;
    while (i >= 0 && pick[i] == core - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  Graph g(n, host);
  return BackboneInstance(g, Graph(n, backbone), 2);
}

/// Random connected chordal graph with clique number exactly `omega`: a
/// full-size first bag, then each new vertex is joined to a random non-empty
/// proper subset of a random existing bag. Labels are shuffled.
inline Graph gen_random_chordal(int n, int omega, std::uint64_t seed) {
  if (omega < 2 || omega > n) throw PreconditionError("2 <= omega <= n");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> bags;
  bags.emplace_back(static_cast<std::size_t>(omega));
  std::iota(bags[0].begin(), bags[0].end(), 0);
  for (Vertex a = 0; a < omega; ++a)
    for (Vertex b = a + 1; b < omega; ++b) edges.emplace_back(a, b);
  for (Vertex v = omega; v < n; ++v) {
    auto pool = bags[rng.below(bags.size())];
    const int size = rng.between(1, std::min(static_cast<int>(pool.size()), omega - 1));
    rng.shuffle(pool);
    pool.resize(static_cast<std::size_t>(size));
    for (Vertex u : pool) edges.emplace_back(u, v);
    pool.push_back(v);
    bags.push_back(std::move(pool));
  }
  Graph g = detail::relabel(Graph(n, edges), detail::random_permutation(n, rng));
  if (!is_chordal(g) || chordal_clique_number(g) != omega)
    throw InternalError("random chordal generator produced a graph outside its contract");
  return g;
}

/// Clique path X1..Xl of omega-cliques with random consecutive overlaps in
/// [1, omega-1] and disjoint left/right overlaps inside every bag, so every
/// vertex lies in at most two maximal cliques. Labels are shuffled.
inline Graph gen_random_interval_two_clique(int length, int omega, std::uint64_t seed) {
  if (length < 1) throw PreconditionError("length >= 1");
  if (omega < 2 && length > 1) throw PreconditionError("omega >= 2");
  if (omega < 1) throw PreconditionError("omega >= 1");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  std::vector<Vertex> prev;  // vertices of X(i-1) shared with X(i)
  Vertex next = 0;
  int left = 0;
  for (int i = 0; i < length; ++i) {
    std::vector<Vertex> bag(prev);
    while (static_cast<int>(bag.size()) < omega) bag.push_back(next++);
    for (std::size_t a = 0; a < bag.size(); ++a)
      for (std::size_t b = a + 1; b < bag.size(); ++b)
        if (a >= prev.size() || b >= prev.size()) edges.emplace_back(bag[a], bag[b]);
    if (i + 1 == length) break;
    const int right = rng.between(1, std::min(omega - 1, omega - left));
    // The right overlap comes from the vertices not shared on the left.
    std::vector<Vertex> fresh(bag.begin() + left, bag.end());
    rng.shuffle(fresh);
    prev.assign(fresh.begin(), fresh.begin() + right);
    std::sort(prev.begin(), prev.end());
    left = right;
  }
  const int n = next;
  return detail::relabel(Graph(n, edges), detail::random_permutation(n, rng));
}

/// Random spanning forest: random edge order, cycle-rejecting union-find.
inline std::vector<Edge> extract_spanning_forest(const Graph& g, std::uint64_t seed) {
  SplitMix64 rng(seed);
  auto order = g.edges();
  rng.shuffle(order);
  std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Edge> out;
  for (auto [u, v] : order) {
    Vertex a = find(u), b = find(v);
    if (a == b) continue;
    parent[a] = b;
    out.push_back(normalized(u, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Random vertex 2-partition; keeps every host edge crossing it.
inline std::vector<Edge> extract_bipartite_backbone(const Graph& g, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<bool> side(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) side[v] = rng.coin();
  std::vector<Edge> out;
  for (auto e : g.edges())
    if (side[e.first] != side[e.second]) out.push_back(e);
  return out;
}

/// Random edge order; an edge uv is kept unless the partial backbone already
/// has a path u-a-b-v, which would close a 4-cycle.
inline std::vector<Edge> extract_c4free_backbone(const Graph& g, std::uint64_t seed) {
  SplitMix64 rng(seed);
  auto order = g.edges();
  rng.shuffle(order);
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  auto adjacent = [&](Vertex x, Vertex y) {
    return std::find(adj[x].begin(), adj[x].end(), y) != adj[x].end();
  };
  std::vector<Edge> out;
  for (auto [u, v] : order) {
    bool closes = false;
    for (Vertex a : adj[u]) {
      if (a == v) continue;
      for (Vertex b : adj[a])
        if (b != u && b != v && adjacent(b, v)) {
          closes = true;
          break;
        }
      if (closes) break;
    }
    if (closes) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
    out.push_back(normalized(u, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

enum class HostKind { lower_bound, chordal, interval2 };
enum class BackboneKind { none, full, forest, bipartite, c4free };

inline const char* to_string(HostKind k) {
  switch (k) {
    case HostKind::lower_bound: return "lower-bound";
    case HostKind::chordal: return "chordal";
    case HostKind::interval2: return "interval2";
  }
  return "?";
}

inline const char* to_string(BackboneKind k) {
  switch (k) {
    case BackboneKind::none: return "none";
    case BackboneKind::full: return "full";
    case BackboneKind::forest: return "forest";
    case BackboneKind::bipartite: return "bipartite";
    case BackboneKind::c4free: return "c4free";
  }
  return "?";
}

struct GeneratorSpec {
  HostKind kind = HostKind::chordal;
  int n = 20;
  int omega = 4;
  int length = 5;
  int r = 1;
  int q = 2;
  BackboneKind backbone = BackboneKind::forest;
  std::uint64_t seed = 1;

  std::string describe() const {
    std::ostringstream s;
    s << "kind=" << to_string(kind);
    switch (kind) {
      case HostKind::lower_bound: s << " r=" << r; break;
      case HostKind::chordal: s << " n=" << n << " omega=" << omega; break;
      case HostKind::interval2: s << " length=" << length << " omega=" << omega; break;
    }
    if (kind != HostKind::lower_bound) s << " backbone=" << to_string(backbone) << " q=" << q;
    s << " seed=" << seed;
    return s.str();
  }
};

/// The lower-bound family keeps its own backbone and q = 2; other kinds draw
/// the host from `seed` and the backbone from an independent split stream.
inline BackboneInstance generate(const GeneratorSpec& spec) {
  if (spec.kind == HostKind::lower_bound) return gen_lower_bound_family(spec.r);
  SplitMix64 root(spec.seed);
  const std::uint64_t host_seed = root.split(1).next();
  const std::uint64_t backbone_seed = root.split(2).next();
  Graph g = spec.kind == HostKind::chordal
                ? gen_random_chordal(spec.n, spec.omega, host_seed)
                : gen_random_interval_two_clique(spec.length, spec.omega, host_seed);
  std::vector<Edge> h;
  switch (spec.backbone) {
    case BackboneKind::none: break;
    case BackboneKind::full: h = g.edges(); break;
    case BackboneKind::forest: h = extract_spanning_forest(g, backbone_seed); break;
    case BackboneKind::bipartite: h = extract_bipartite_backbone(g, backbone_seed); break;
    case BackboneKind::c4free: h = extract_c4free_backbone(g, backbone_seed); break;
  }
  return BackboneInstance(g, h, spec.q);
}

}  // namespace bbc
