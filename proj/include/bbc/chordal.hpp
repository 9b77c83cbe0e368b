#pragma once

// Chordal-graph machinery: maximum cardinality search, perfect elimination
// orderings, maximal cliques, clique trees, clique paths for the class where
// every vertex lies in at most two maximal cliques, and smooth tree
// decompositions (all bags of size omega, neighbouring bags differing in one
// vertex each way).

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bbc/graph.hpp"
#include "bbc/structure.hpp"

namespace bbc {

/// Vertex order v1..vn read as an elimination order: a perfect elimination
/// ordering has the later neighbours of every vertex pairwise adjacent.
struct EliminationOrdering {
  std::vector<Vertex> order;

  std::vector<int> positions() const {
    std::vector<int> pos(order.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) pos.at(order[i]) = static_cast<int>(i);
    return pos;
  }
};

namespace detail {

/// MCS visit sequence; ties go to the smallest vertex id.
inline std::vector<Vertex> mcs_visit_sequence(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  // Ordered by (-weight, id) so begin() is the heaviest, smallest-id vertex.
  std::set<std::pair<int, Vertex>> frontier;
  for (Vertex v = 0; v < n; ++v) frontier.insert({0, v});
  std::vector<Vertex> seq;
  seq.reserve(static_cast<std::size_t>(n));
  while (!frontier.empty()) {
    Vertex v = frontier.begin()->second;
    frontier.erase(frontier.begin());
    visited[v] = true;
    seq.push_back(v);
    for (Vertex w : g.neighbours(v)) {
      if (visited[w]) continue;
      frontier.erase({-weight[w], w});
      ++weight[w];
      frontier.insert({-weight[w], w});
    }
  }
  return seq;
}

inline void require_permutation(const Graph& g, const EliminationOrdering& ord) {
  if (static_cast<int>(ord.order.size()) != g.vertex_count())
    throw std::invalid_argument("ordering is not a permutation of the vertex set");
  std::vector<bool> seen(ord.order.size(), false);
  for (Vertex v : ord.order) {
    if (v < 0 || v >= g.vertex_count() || seen[v])
      throw std::invalid_argument("ordering is not a permutation of the vertex set");
    seen[v] = true;
  }
}

/// Later neighbours of every vertex, sorted by position.
inline std::vector<std::vector<Vertex>> later_neighbours(const Graph& g,
                                                         const std::vector<int>& pos) {
  std::vector<std::vector<Vertex>> later(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.neighbours(v))
      if (pos[w] > pos[v]) later[v].push_back(w);
    std::sort(later[v].begin(), later[v].end(),
              [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
  }
  return later;
}

}  // namespace detail

/// Maximum cardinality search, returned as an elimination ordering (the
/// reverse of the visit sequence). For chordal graphs the result is a PEO.
inline EliminationOrdering mcs_ordering(const Graph& g) {
  auto seq = detail::mcs_visit_sequence(g);
  std::reverse(seq.begin(), seq.end());
  return {std::move(seq)};
}

struct PeoCheck {
  bool perfect = true;
  /// On failure: the vertex whose later neighbourhood is not a clique and two
  /// non-adjacent later neighbours of it (a chordless-cycle witness).
  Vertex at = -1;
  std::optional<Edge> non_adjacent_pair;

  explicit operator bool() const { return perfect; }
};

/// Linear-style PEO test: every later neighbour of v other than the first
/// must be adjacent to that first later neighbour.
inline PeoCheck check_peo(const Graph& g, const EliminationOrdering& ord) {
  detail::require_permutation(g, ord);
  const auto pos = ord.positions();
  const auto later = detail::later_neighbours(g, pos);
  for (Vertex v : ord.order) {
    if (later[v].size() < 2) continue;
    Vertex first = later[v].front();
    for (std::size_t i = 1; i < later[v].size(); ++i)
      if (!g.has_edge(first, later[v][i]))
        return PeoCheck{false, v, Edge{first, later[v][i]}};
  }
  return {};
}

inline bool is_chordal(const Graph& g) { return check_peo(g, mcs_ordering(g)).perfect; }

/// Maximal cliques of a chordal graph from one of its PEOs, each sorted,
/// listed in elimination order of their earliest vertex.
inline std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g,
                                                        const EliminationOrdering& ord) {
  if (!check_peo(g, ord)) throw PreconditionError("perfect elimination ordering");
  const auto pos = ord.positions();
  const auto later = detail::later_neighbours(g, pos);
  const int n = g.vertex_count();
  // {v} ∪ later(v) is contained in {u} ∪ later(u) exactly when some u has v as
  // its first later neighbour and one more later neighbour than v.
  std::vector<bool> absorbed(static_cast<std::size_t>(n), false);
  for (Vertex u = 0; u < n; ++u)
    if (!later[u].empty()) {
      Vertex p = later[u].front();
      if (later[u].size() == later[p].size() + 1) absorbed[p] = true;
    }
  std::vector<std::vector<Vertex>> cliques;
  for (Vertex v : ord.order) {
    if (absorbed[v]) continue;
    std::vector<Vertex> c(later[v]);
    c.push_back(v);
    std::sort(c.begin(), c.end());
    cliques.push_back(std::move(c));
  }
  return cliques;
}

/// Clique number of a chordal graph (0 for the empty graph).
inline int chordal_clique_number(const Graph& g) {
  std::size_t best = 0;
  for (const auto& c : maximal_cliques(g, mcs_ordering(g))) best = std::max(best, c.size());
  return static_cast<int>(best);
}

/// Greedy colouring along the reverse of a PEO; uses exactly omega colours.
inline Colouring greedy_omega_colouring(const Graph& g, const EliminationOrdering& ord) {
  if (!check_peo(g, ord)) throw PreconditionError("perfect elimination ordering");
  Colouring col(g.vertex_count());
  std::vector<int> mark(static_cast<std::size_t>(g.vertex_count()) + 2, -1);
  for (auto it = ord.order.rbegin(); it != ord.order.rend(); ++it) {
    Vertex v = *it;
    for (Vertex w : g.neighbours(v))
      if (col[w] > 0) mark[col[w]] = v;
    Colour c = 1;
    while (mark[c] == v) ++c;
    col.set(v, c);
  }
  return col;
}

inline Colouring greedy_omega_colouring(const Graph& g) {
  return greedy_omega_colouring(g, mcs_ordering(g));
}

/// Independent set meeting every maximum clique: the colour-1 class of the
/// greedy omega-colouring. Removing it lowers the clique number by one.
inline std::vector<Vertex> transversal_independent_set(const Graph& g) {
  auto col = greedy_omega_colouring(g);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (col[v] == 1) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// Tree decompositions

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<int, int>> tree_edges;
};

/// Returns an explanation when (bags, tree_edges) is not a tree decomposition
/// of g: the tree must be a tree, every vertex covered, every edge inside a
/// bag, and the bags holding any one vertex must be connected in the tree.
inline std::optional<std::string> tree_decomposition_error(const Graph& g,
                                                           const TreeDecomposition& td) {
  const int nodes = static_cast<int>(td.bags.size());
  const int n = g.vertex_count();
  if (nodes == 0) return n == 0 ? std::nullopt : std::optional<std::string>("no bags");
  if (static_cast<int>(td.tree_edges.size()) != nodes - 1) return "tree has wrong edge count";
  std::vector<std::vector<int>> tadj(static_cast<std::size_t>(nodes));
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) return "bad tree edge";
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  {
    std::vector<bool> seen(static_cast<std::size_t>(nodes), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : tadj[x])
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
    }
    if (count != nodes) return "decomposition tree is disconnected";
  }
  std::vector<std::vector<int>> holders(static_cast<std::size_t>(n));
  std::vector<std::vector<bool>> in_bag(static_cast<std::size_t>(nodes));
  for (int b = 0; b < nodes; ++b) {
    in_bag[b].assign(static_cast<std::size_t>(n), false);
    for (Vertex v : td.bags[b]) {
      if (v < 0 || v >= n) return "bag holds an unknown vertex";
      if (in_bag[b][v]) return "bag repeats a vertex";
      in_bag[b][v] = true;
      holders[v].push_back(b);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (holders[v].empty()) return "vertex " + std::to_string(v + 1) + " is in no bag";
  for (auto [u, v] : g.edges()) {
    bool covered = std::any_of(holders[u].begin(), holders[u].end(),
                               [&](int b) { return in_bag[b][v]; });
    if (!covered)
      return "edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) + " is in no bag";
  }
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> stack{holders[v].front()};
    std::set<int> seen{holders[v].front()};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : tadj[x])
        if (in_bag[y][v] && seen.insert(y).second) stack.push_back(y);
    }
    if (seen.size() != holders[v].size())
      return "bags holding vertex " + std::to_string(v + 1) + " do not form a subtree";
  }
  return std::nullopt;
}

/// Clique tree: bags are the maximal cliques, tree edges from the MCS-based
/// construction (a maximum-weight spanning tree of the clique intersection
/// graph). Components of a disconnected graph are chained by empty
/// separators so the result is always a single tree.
inline TreeDecomposition build_clique_tree(const Graph& g) {
  const int n = g.vertex_count();
  auto seq = detail::mcs_visit_sequence(g);
  {
    EliminationOrdering peo{std::vector<Vertex>(seq.rbegin(), seq.rend())};
    if (!check_peo(g, peo)) throw PreconditionError("chordal host");
  }
  std::vector<int> visit_time(static_cast<std::size_t>(n), -1);
  std::vector<int> clique_of(static_cast<std::size_t>(n), -1);
  TreeDecomposition td;
  int prev_card = 0;
  for (int i = 0; i < n; ++i) {
    Vertex v = seq[i];
    std::vector<Vertex> visited_nbrs;
    Vertex last = -1;
    for (Vertex w : g.neighbours(v))
      if (visit_time[w] >= 0) {
        visited_nbrs.push_back(w);
        if (last < 0 || visit_time[w] > visit_time[last]) last = w;
      }
    const int card = static_cast<int>(visited_nbrs.size());
    if (i == 0 || card <= prev_card) {
      td.bags.push_back(visited_nbrs);
      const int s = static_cast<int>(td.bags.size()) - 1;
      if (card > 0)
        td.tree_edges.emplace_back(clique_of[last], s);
      else if (s > 0)
        td.tree_edges.emplace_back(s - 1, s);
    }
    td.bags.back().push_back(v);
    clique_of[v] = static_cast<int>(td.bags.size()) - 1;
    visit_time[v] = i;
    prev_card = card;
  }
  for (auto& b : td.bags) std::sort(b.begin(), b.end());
  return td;
}

// ---------------------------------------------------------------------------
// Clique paths

struct CliquePath {
  /// Maximal cliques X1..Xl in path order.
  std::vector<std::vector<Vertex>> bags;
  /// Same bags padded to `width` vertices; padding uses ids >= vertex_count.
  std::vector<std::vector<Vertex>> padded_bags;
  int width = 0;
  int vertex_count = 0;
  int synthetic_count = 0;

  bool is_synthetic(Vertex v) const { return v >= vertex_count; }
};

enum class CliquePathRejection {
  none,
  not_connected,
  not_chordal,
  vertex_in_three_cliques,
  intersection_not_path,
  validation_failed,
};

inline const char* to_string(CliquePathRejection r) {
  switch (r) {
    case CliquePathRejection::none: return "accepted";
    case CliquePathRejection::not_connected: return "graph not connected";
    case CliquePathRejection::not_chordal: return "graph not chordal";
    case CliquePathRejection::vertex_in_three_cliques:
      return "some vertex lies in three or more maximal cliques";
    case CliquePathRejection::intersection_not_path: return "clique intersection graph not a path";
    case CliquePathRejection::validation_failed: return "subtree-contiguity validation failure";
  }
  return "?";
}

struct CliquePathResult {
  std::optional<CliquePath> path;
  CliquePathRejection rejection = CliquePathRejection::none;
  std::string detail;

  explicit operator bool() const { return path.has_value(); }
};

/// Violations of the clique-path contract: valid path decomposition and
/// X(i-1) ∩ X(i+1) = ∅ for interior bags.
inline std::optional<std::string> clique_path_error(const Graph& g,
                                                    const std::vector<std::vector<Vertex>>& bags) {
  TreeDecomposition td{bags, {}};
  for (int i = 1; i < static_cast<int>(bags.size()); ++i) td.tree_edges.emplace_back(i - 1, i);
  if (auto err = tree_decomposition_error(g, td)) return err;
  for (std::size_t i = 1; i + 1 < bags.size(); ++i) {
    std::vector<Vertex> common;
    std::set_intersection(bags[i - 1].begin(), bags[i - 1].end(), bags[i + 1].begin(),
                          bags[i + 1].end(), std::back_inserter(common));
    if (!common.empty())
      return "bags " + std::to_string(i) + " and " + std::to_string(i + 2) + " intersect";
  }
  return std::nullopt;
}

/// Clique path of a connected chordal graph in which every vertex lies in at
/// most two maximal cliques and the clique intersection graph is a path.
/// Bags are padded with fresh vertices up to `pad_to` (default: omega).
inline CliquePathResult clique_path_restricted(const Graph& g, int pad_to = 0) {
  CliquePathResult res;
  auto reject = [&](CliquePathRejection r, std::string detail = {}) {
    res.rejection = r;
    res.detail = std::move(detail);
    return res;
  };
  const int n = g.vertex_count();
  if (n == 0) {
    res.path = CliquePath{};
    return res;
  }
  if (!is_connected(g)) return reject(CliquePathRejection::not_connected);
  auto ord = mcs_ordering(g);
  if (!check_peo(g, ord)) return reject(CliquePathRejection::not_chordal);
  auto cliques = maximal_cliques(g, ord);
  const int k = static_cast<int>(cliques.size());

  std::vector<std::vector<int>> member(static_cast<std::size_t>(n));
  for (int c = 0; c < k; ++c)
    for (Vertex v : cliques[c]) member[v].push_back(c);
  std::set<std::pair<int, int>> links;
  for (Vertex v = 0; v < n; ++v) {
    if (member[v].size() >= 3)
      return reject(CliquePathRejection::vertex_in_three_cliques,
                    "vertex " + std::to_string(v + 1));
    if (member[v].size() == 2) links.insert({member[v][0], member[v][1]});
  }
  std::vector<std::vector<int>> ladj(static_cast<std::size_t>(k));
  for (auto [a, b] : links) {
    ladj[a].push_back(b);
    ladj[b].push_back(a);
  }
  const bool degrees_ok =
      std::all_of(ladj.begin(), ladj.end(), [](const auto& a) { return a.size() <= 2; });
  if (!degrees_ok || static_cast<int>(links.size()) != k - 1)
    return reject(CliquePathRejection::intersection_not_path);

  int start = 0;
  for (int c = 0; c < k; ++c)
    if (ladj[c].size() <= 1) {
      start = c;
      break;
    }
  CliquePath path;
  path.vertex_count = n;
  std::vector<bool> used(static_cast<std::size_t>(k), false);
  for (int cur = start, prev = -1; cur >= 0;) {
    used[cur] = true;
    path.bags.push_back(cliques[cur]);
    int next = -1;
    for (int y : ladj[cur])
      if (y != prev && !used[y]) next = y;
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(path.bags.size()) != k)
    return reject(CliquePathRejection::intersection_not_path);
  if (auto err = clique_path_error(g, path.bags))
    return reject(CliquePathRejection::validation_failed, *err);

  int omega = 0;
  for (const auto& b : path.bags) omega = std::max(omega, static_cast<int>(b.size()));
  path.width = std::max(omega, pad_to);
  Vertex next_fresh = n;
  for (const auto& b : path.bags) {
    auto padded = b;
    while (static_cast<int>(padded.size()) < path.width) padded.push_back(next_fresh++);
    path.padded_bags.push_back(std::move(padded));
  }
  path.synthetic_count = next_fresh - n;
  res.path = std::move(path);
  return res;
}

// ---------------------------------------------------------------------------
// Smooth tree decompositions

struct SmoothTreeDecomposition {
  /// Node 0 is the root. Every bag is sorted and has exactly `width` vertices.
  std::vector<std::vector<Vertex>> bags;
  std::vector<int> parent;
  /// For non-root nodes: the one vertex of the bag not in the parent bag, and
  /// the one vertex of the parent bag not in this bag. -1 at the root.
  std::vector<Vertex> entering;
  std::vector<Vertex> leaving;
  int width = 0;

  int size() const { return static_cast<int>(bags.size()); }

  TreeDecomposition as_tree_decomposition() const {
    TreeDecomposition td{bags, {}};
    for (int v = 1; v < size(); ++v) td.tree_edges.emplace_back(parent[v], v);
    return td;
  }
};

/// Checks the three smooth-decomposition invariants.
inline std::optional<std::string> smooth_decomposition_error(const Graph& g,
                                                             const SmoothTreeDecomposition& s) {
  const int nodes = s.size();
  if (static_cast<int>(s.parent.size()) != nodes || static_cast<int>(s.entering.size()) != nodes ||
      static_cast<int>(s.leaving.size()) != nodes)
    return "inconsistent array sizes";
  if (nodes > 0 && s.parent[0] != -1) return "node 0 is not the root";
  for (int v = 1; v < nodes; ++v)
    if (s.parent[v] < 0 || s.parent[v] >= v) return "parents must precede children";
  if (auto err = tree_decomposition_error(g, s.as_tree_decomposition())) return err;
  for (int v = 0; v < nodes; ++v)
    if (static_cast<int>(s.bags[v].size()) != s.width)
      return "bag " + std::to_string(v) + " has size " + std::to_string(s.bags[v].size());
  for (int v = 1; v < nodes; ++v) {
    const auto& mine = s.bags[v];
    const auto& up = s.bags[s.parent[v]];
    std::vector<Vertex> in, out;
    std::set_difference(mine.begin(), mine.end(), up.begin(), up.end(), std::back_inserter(in));
    std::set_difference(up.begin(), up.end(), mine.begin(), mine.end(), std::back_inserter(out));
    if (in.size() != 1 || out.size() != 1)
      return "node " + std::to_string(v) + " differs from its parent by more than one vertex";
    if (in[0] != s.entering[v] || out[0] != s.leaving[v])
      return "node " + std::to_string(v) + " records the wrong entering/leaving vertex";
  }
  return std::nullopt;
}

/// Smooth tree decomposition of a chordal graph: start from the clique tree,
/// pad every bag to omega with vertices of its parent, subdivide edges whose
/// bags differ by more than one vertex, and contract equal neighbours.
inline SmoothTreeDecomposition smooth_tree_decomposition(const Graph& g) {
  SmoothTreeDecomposition out;
  if (g.vertex_count() == 0) return out;
  auto ct = build_clique_tree(g);
  const int k = static_cast<int>(ct.bags.size());
  int root = 0;
  for (int c = 0; c < k; ++c)
    if (ct.bags[c].size() > ct.bags[root].size()) root = c;
  const int omega = static_cast<int>(ct.bags[root].size());
  out.width = omega;

  std::vector<std::vector<int>> tadj(static_cast<std::size_t>(k));
  for (auto [a, b] : ct.tree_edges) {
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  std::vector<int> bfs{root}, tparent(static_cast<std::size_t>(k), -1);
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  seen[root] = true;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (int y : tadj[bfs[i]])
      if (!seen[y]) {
        seen[y] = true;
        tparent[y] = bfs[i];
        bfs.push_back(y);
      }

  auto padded = ct.bags;
  for (int c : bfs) {
    if (tparent[c] < 0) continue;
    const auto& up = padded[tparent[c]];
    auto& bag = padded[c];
    std::vector<Vertex> extra;
    std::set_difference(up.begin(), up.end(), bag.begin(), bag.end(), std::back_inserter(extra));
    for (std::size_t i = 0; static_cast<int>(bag.size()) < omega; ++i) bag.push_back(extra.at(i));
    std::sort(bag.begin(), bag.end());
  }

  std::vector<int> node_of(static_cast<std::size_t>(k), -1);
  out.bags.push_back(padded[root]);
  out.parent.push_back(-1);
  out.entering.push_back(-1);
  out.leaving.push_back(-1);
  node_of[root] = 0;
  for (int c : bfs) {
    if (tparent[c] < 0) continue;
    int at = node_of[tparent[c]];
    const auto& up = padded[tparent[c]];
    const auto& bag = padded[c];
    std::vector<Vertex> in, gone;
    std::set_difference(bag.begin(), bag.end(), up.begin(), up.end(), std::back_inserter(in));
    std::set_difference(up.begin(), up.end(), bag.begin(), bag.end(), std::back_inserter(gone));
    auto cur = up;
    for (std::size_t j = 0; j < in.size(); ++j) {
      cur.erase(std::find(cur.begin(), cur.end(), gone[j]));
      cur.insert(std::upper_bound(cur.begin(), cur.end(), in[j]), in[j]);
      out.bags.push_back(cur);
      out.parent.push_back(at);
      out.entering.push_back(in[j]);
      out.leaving.push_back(gone[j]);
      at = out.size() - 1;
    }
    node_of[c] = at;  // equal bags contract onto the parent node
  }
  return out;
}

}  // namespace bbc
