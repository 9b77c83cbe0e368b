#pragma once

// 2-backbone colouring with at most omega + 3 colours when the host is a
// chordal graph whose vertices each lie in at most two maximal cliques (its
// clique intersection graph being a path) and the backbone is bipartite.
//
// Outline, per connected component:
//  1. bipartition (A, B) of the backbone; padding vertices join A;
//  2. clique path X1..Xl, every bag padded to omega;
//  3. a proper omega-colouring phi over Z_omega built bag by bag so that in
//     every bag phi(A ∩ Xi) and phi(B ∩ Xi) are complementary circular
//     intervals;
//  4. the A-vertices at the two ends of each A-interval are the only ones
//     that can sit next to a B-colour, so they are moved to two fresh colours
//     omega+1, omega+2 (0-based), leaving colour omega unused as a buffer.

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "bbc/chordal.hpp"
#include "bbc/report.hpp"
#include "bbc/structure.hpp"
#include "bbc/verify.hpp"

namespace bbc {

/// Per-bag record of the circular construction (colours 0-based mod omega).
struct CircularIntervalState {
  /// Inherited interval [x, y] = phi(X(i-1) ∩ Xi) and its split point c:
  /// A-first means phi(Ai) = [x, c], phi(Bi) = [c+1, y]; B-first means
  /// phi(Bi) = [x, c-1], phi(Ai) = [c, y]. Unused for the first bag.
  int x = -1;
  int y = -1;
  int split = -1;
  bool a_first = true;
  /// phi(A ∩ Xi) = [alpha, beta]; -1 when A ∩ Xi or B ∩ Xi is empty.
  int alpha = -1;
  int beta = -1;
  Vertex alpha_vertex = -1;
  Vertex beta_vertex = -1;
};

struct CircularColouring {
  int omega = 0;
  /// Indexed by clique-path vertex id (real vertices, then padding).
  std::vector<int> phi;
  std::vector<CircularIntervalState> bags;
};

namespace detail {

inline int mod(int a, int m) { return ((a % m) + m) % m; }

/// Number of maximal runs of `in` around the cycle Z_m; 0 for empty or full.
inline int circular_runs(const std::vector<bool>& in) {
  const int m = static_cast<int>(in.size());
  int runs = 0;
  for (int c = 0; c < m; ++c)
    if (in[c] && !in[mod(c - 1, m)]) ++runs;
  return runs;
}

}  // namespace detail

/// Builds phi bag by bag along the padded clique path. `side[v]` is 0 for A
/// and 1 for B, for every clique-path vertex including padding. Throws
/// InternalError if any per-bag invariant fails.
inline CircularColouring circular_interval_colouring(const CliquePath& path,
                                                     const std::vector<int>& side) {
  using detail::mod;
  const int w = path.width;
  const int bag_count = static_cast<int>(path.padded_bags.size());
  const int total = path.vertex_count + path.synthetic_count;
  CircularColouring out;
  out.omega = w;
  out.phi.assign(static_cast<std::size_t>(total), -1);
  out.bags.resize(static_cast<std::size_t>(bag_count));
  if (w == 0) return out;

  std::vector<std::vector<int>> holders(static_cast<std::size_t>(total));
  for (int i = 0; i < bag_count; ++i)
    for (Vertex v : path.padded_bags[i]) holders[v].push_back(i);

  int carried_x = 0;
  bool carried_a_first = true;
  for (int i = 0; i < bag_count; ++i) {
    const auto& bag = path.padded_bags[i];
    std::vector<Vertex> a_prev, b_prev, a_own, b_own, a_next, b_next;
    for (Vertex v : bag) {
      bool in_prev = false, in_next = false;
      for (int j : holders[v]) {
        in_prev |= j == i - 1;
        in_next |= j == i + 1;
      }
      const bool is_a = side[v] == 0;
      auto& target = in_prev ? (is_a ? a_prev : b_prev)
                             : in_next ? (is_a ? a_next : b_next) : (is_a ? a_own : b_own);
      target.push_back(v);
    }
    int at = 0;
    auto paint = [&](const std::vector<Vertex>& part) {
      for (Vertex v : part) out.phi[v] = mod(at++, w);
    };
    auto first_colour = [&](const std::vector<Vertex>& first, const std::vector<Vertex>& second) {
      return out.phi[first.empty() ? second.front() : first.front()];
    };
    auto& st = out.bags[i];
    const bool new_a = !a_own.empty() || !a_next.empty();

    if (i == 0) {
      if (a_own.empty() && a_next.empty()) {
        paint(b_own);
        paint(b_next);
      } else {
        paint(a_own);
        paint(a_next);
        paint(b_next);
        paint(b_own);
      }
      if (!a_next.empty() || !b_next.empty()) carried_x = first_colour(a_next, b_next);
      carried_a_first = true;
    } else {
      const int shared = static_cast<int>(a_prev.size() + b_prev.size());
      if (shared == 0) throw InternalError("consecutive bags share no vertex");
      st.x = carried_x;
      st.y = mod(carried_x + shared - 1, w);
      st.a_first = carried_a_first;
      st.split = st.a_first ? mod(st.x + static_cast<int>(a_prev.size()) - 1, w)
                            : mod(st.x + static_cast<int>(b_prev.size()), w);
      // The inherited colours must really be laid out as claimed.
      const auto& lead = st.a_first ? a_prev : b_prev;
      const auto& tail = st.a_first ? b_prev : a_prev;
      std::vector<bool> lead_colours(static_cast<std::size_t>(w), false);
      std::vector<bool> tail_colours(static_cast<std::size_t>(w), false);
      for (Vertex v : lead) lead_colours[out.phi[v]] = true;
      for (Vertex v : tail) tail_colours[out.phi[v]] = true;
      for (int k = 0; k < static_cast<int>(lead.size()); ++k)
        if (!lead_colours[mod(st.x + k, w)]) throw InternalError("inherited interval mismatch");
      for (int k = 0; k < static_cast<int>(tail.size()); ++k)
        if (!tail_colours[mod(st.x + static_cast<int>(lead.size()) + k, w)])
          throw InternalError("inherited interval mismatch");

      at = st.y + 1;
      if (!new_a) {
        if (st.a_first) {
          paint(b_own);
          paint(b_next);
        } else {
          paint(b_next);
          paint(b_own);
        }
        if (!b_next.empty()) carried_x = out.phi[b_next.front()];
        carried_a_first = true;
      } else if (st.a_first) {
        paint(b_own);
        paint(b_next);
        paint(a_next);
        paint(a_own);
        if (!a_next.empty() || !b_next.empty()) carried_x = first_colour(b_next, a_next);
        carried_a_first = a_next.empty() || b_next.empty();
      } else {
        paint(a_own);
        paint(a_next);
        paint(b_next);
        paint(b_own);
        if (!a_next.empty() || !b_next.empty()) carried_x = first_colour(a_next, b_next);
        carried_a_first = true;
      }
      if (mod(at, w) != st.x) throw InternalError("bag colouring does not close the circle");
    }

    // phi(Xi) = Z_w and the A-part is a circular interval.
    std::vector<Vertex> by_colour(static_cast<std::size_t>(w), -1);
    std::vector<bool> a_colours(static_cast<std::size_t>(w), false);
    bool any_b = false;
    for (Vertex v : bag) {
      const int c = out.phi[v];
      if (c < 0 || by_colour[c] >= 0) throw InternalError("bag is not rainbow");
      by_colour[c] = v;
      if (side[v] == 0)
        a_colours[c] = true;
      else
        any_b = true;
    }
    const int runs = detail::circular_runs(a_colours);
    if (runs > 1) throw InternalError("A-colours of a bag are not a circular interval");
    if (runs == 1 && any_b) {
      for (int c = 0; c < w; ++c) {
        if (a_colours[c] && !a_colours[mod(c - 1, w)]) st.alpha = c;
        if (a_colours[c] && !a_colours[mod(c + 1, w)]) st.beta = c;
      }
      st.alpha_vertex = by_colour[st.alpha];
      st.beta_vertex = by_colour[st.beta];
    }
  }
  return out;
}

namespace detail {

/// Recolours the vertices of `region` with colours 1..span so that `col`
/// (1-based, other entries fixed) becomes a valid 2-backbone colouring.
/// Pieces of the region that touch neither through G nor H are solved
/// independently, each by DSATUR-style backtracking of at most `budget` nodes.
inline bool repair_region(const Graph& g, const Graph& h, std::vector<Colour>& col,
                          const std::vector<Vertex>& region, int span, std::size_t budget) {
  std::vector<int> piece(col.size(), -1);
  for (Vertex v : region) {
    col[v] = 0;
    piece[v] = -2;
  }
  std::vector<std::vector<Vertex>> pieces;
  for (Vertex root : region) {
    if (piece[root] != -2) continue;
    const int id = static_cast<int>(pieces.size());
    pieces.push_back({root});
    piece[root] = id;
    for (std::size_t i = 0; i < pieces[id].size(); ++i) {
      const Vertex v = pieces[id][i];
      for (const Graph* adj : {&g, &h})
        for (Vertex u : adj->neighbours(v))
          if (piece[u] == -2) {
            piece[u] = id;
            pieces[id].push_back(u);
          }
    }
  }
  auto feasible = [&](Vertex v, Colour c) {
    for (Vertex u : g.neighbours(v))
      if (col[u] == c) return false;
    for (Vertex u : h.neighbours(v))
      if (col[u] != 0 && std::abs(col[u] - c) < 2) return false;
    return true;
  };
  for (const auto& part : pieces) {
    std::size_t left = budget;
    auto rec = [&](auto&& self, std::size_t placed) -> bool {
      if (placed == part.size()) return true;
      if (left == 0) return false;
      --left;
      Vertex pick = -1;
      int fewest = span + 1;
      for (Vertex v : part) {
        if (col[v] != 0) continue;
        int options = 0;
        for (Colour c = 1; c <= span; ++c) options += feasible(v, c);
        if (options < fewest) {
          fewest = options;
          pick = v;
        }
      }
      if (fewest == 0) return false;
      for (Colour c = 1; c <= span; ++c) {
        if (!feasible(pick, c)) continue;
        col[pick] = c;
        if (self(self, placed + 1)) return true;
        col[pick] = 0;
      }
      return false;
    };
    if (!rec(rec, 0)) return false;
  }
  return true;
}

inline bool induces_disjoint_paths(const Graph& g, const std::vector<Vertex>& subset) {
  std::vector<bool> in(static_cast<std::size_t>(g.vertex_count()), false);
  for (Vertex v : subset) in[v] = true;
  std::size_t edges = 0;
  for (Vertex v : subset) {
    int d = 0;
    for (Vertex u : g.neighbours(v)) d += in[u];
    if (d > 2) return false;
    edges += static_cast<std::size_t>(d);
  }
  edges /= 2;
  Graph sub = induced_subgraph(g, subset);
  return edges + connected_components(sub).size() == subset.size();
}

}  // namespace detail

/// How the endpoint recolouring was completed on a component.
enum class RecolourStage {
  /// X = all interval endpoints, induced paths alternated on {w+1, w+2}.
  endpoint_paths,
  /// Only endpoints actually at distance 1 from a backbone neighbour, 2-coloured.
  conflicting_endpoints,
  /// As above after rotating phi by a constant.
  rotated,
  /// Constraint search recolouring both ends of every conflicting backbone
  /// edge over the full palette 1..w+3.
  local_repair,
};

inline const char* to_string(RecolourStage s) {
  switch (s) {
    case RecolourStage::endpoint_paths: return "endpoint-paths";
    case RecolourStage::conflicting_endpoints: return "conflicting-endpoints";
    case RecolourStage::rotated: return "rotated";
    case RecolourStage::local_repair: return "local-repair";
  }
  return "?";
}

struct IntervalBipartiteDetail {
  std::vector<RecolourStage> stages;  // one per component
};

/// Colours (G, H) with span <= omega(G) + 3. Preconditions: q = 2, host
/// chordal with every component accepted by clique_path_restricted, backbone
/// bipartite. Every output is verifier-gated.
inline Colouring colour_interval_bipartite(const BackboneInstance& inst,
                                           IntervalBipartiteDetail* info = nullptr) {
  using detail::mod;
  if (inst.q() != 2) throw PreconditionError("q = 2");
  const Graph& g = inst.host();
  const Graph& h = inst.backbone();
  if (!is_chordal(g)) throw PreconditionError("chordal host");
  auto bip = is_bipartite(h);
  if (!bip) throw PreconditionError("bipartite backbone");
  const int omega = chordal_clique_number(g);
  const auto& global_side = bip.partition->side;

  Colouring result(g.vertex_count());
  for (const auto& comp : connected_components(g)) {
    const Graph sub = induced_subgraph(g, comp);
    const Graph sub_h = induced_subgraph(h, comp);
    auto cp = clique_path_restricted(sub, omega);
    if (!cp) throw PreconditionError(to_string(cp.rejection), cp.detail);
    const CliquePath& path = *cp.path;
    const int real = path.vertex_count;
    const int total = real + path.synthetic_count;
    std::vector<int> side(static_cast<std::size_t>(total), 0);
    for (int i = 0; i < real; ++i) side[i] = global_side[comp[i]];

    const CircularColouring base = circular_interval_colouring(path, side);
    const int w = base.omega;

    // Real vertices only: padding is isolated in H and stripped afterwards.
    auto finish = [&](const std::vector<int>& phi, const std::vector<Vertex>& moved,
                      const std::vector<int>& fresh) {
      std::vector<Colour> col(static_cast<std::size_t>(real));
      for (int v = 0; v < real; ++v) col[v] = phi[v] + 1;
      for (std::size_t i = 0; i < moved.size(); ++i) col[moved[i]] = w + 1 + fresh[i];
      return Colouring(col);
    };
    const BackboneInstance local(sub, sub_h, 2);
    auto ok = [&](const Colouring& c) { return verify_backbone_colouring(local, c).valid; };

    // Stage 1: every interval endpoint, 2-coloured along its induced paths.
    std::vector<Vertex> endpoints;
    for (const auto& st : base.bags)
      for (Vertex v : {st.alpha_vertex, st.beta_vertex})
        if (v >= 0 && v < real) endpoints.push_back(v);
    std::sort(endpoints.begin(), endpoints.end());
    endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());

    std::optional<Colouring> chosen;
    RecolourStage stage = RecolourStage::endpoint_paths;
    // Alternating colours {0, 1} on g[set], or nothing if g[set] has an odd cycle.
    auto two_colour = [&](const std::vector<Vertex>& set) -> std::optional<std::vector<int>> {
      auto bp = is_bipartite(induced_subgraph(sub, set));
      if (!bp) return std::nullopt;
      return bp.partition->side;
    };
    if (detail::induces_disjoint_paths(sub, endpoints)) {
      if (auto c = two_colour(endpoints)) {
        std::vector<int> fresh(c->begin(), c->end());
        for (auto& f : fresh) f += 1;  // {w+1, w+2} in 0-based terms
        Colouring cand = finish(base.phi, endpoints, fresh);
        if (ok(cand)) chosen = cand;
      }
    }

    // Stages 2-3: recolour only A-vertices at distance exactly 1 from a
    // backbone neighbour, trying every rotation of phi.
    auto conflicts = [&](const std::vector<int>& phi, bool both_ends) {
      std::vector<Vertex> out;
      for (int v = 0; v < real; ++v) {
        if (!both_ends && side[v] != 0) continue;
        for (Vertex u : sub_h.neighbours(v))
          if (std::abs(phi[v] - phi[u]) == 1) {
            out.push_back(v);
            break;
          }
      }
      return out;
    };
    auto rotated = [&](int r) {
      std::vector<int> phi(base.phi);
      for (auto& c : phi) c = mod(c + r, w);
      return phi;
    };
    for (int r = 0; r < w && !chosen; ++r) {
      const auto phi = rotated(r);
      const auto conflicted = conflicts(phi, false);
      auto c = two_colour(conflicted);
      if (!c) continue;
      std::vector<int> fresh(c->begin(), c->end());
      for (auto& f : fresh) f += 1;
      Colouring cand = finish(phi, conflicted, fresh);
      if (ok(cand)) {
        chosen = cand;
        stage = r == 0 ? RecolourStage::conflicting_endpoints : RecolourStage::rotated;
      }
    }
    // Stage 4: both ends of each conflicting backbone edge are recoloured by
    // constraint search over the whole palette.
    for (int r = 0; r < w && !chosen; ++r) {
      const auto phi = rotated(r);
      std::vector<Colour> col(static_cast<std::size_t>(real));
      for (int v = 0; v < real; ++v) col[v] = phi[v] + 1;
      if (detail::repair_region(sub, sub_h, col, conflicts(phi, true), w + 3, 20000)) {
        Colouring cand(col);
        if (ok(cand)) {
          chosen = cand;
          stage = RecolourStage::local_repair;
        }
      }
    }
    if (!chosen) throw InternalError("interval recolouring failed on a component");
    if (info) info->stages.push_back(stage);
    for (std::size_t i = 0; i < comp.size(); ++i) result.set(comp[i], (*chosen)[static_cast<Vertex>(i)]);
  }
  require_valid(inst, result, "colour_interval_bipartite");
  if (result.span() > omega + 3) throw InternalError("interval colouring exceeds omega + 3");
  return result;
}

inline ColouringResult run_interval_bipartite(const BackboneInstance& inst) {
  const auto start = std::chrono::steady_clock::now();
  ColouringResult res;
  auto& r = res.report;
  r.algorithm = "interval2";
  r.n = inst.vertex_count();
  r.omega = is_chordal(inst.host()) ? chordal_clique_number(inst.host()) : 0;
  r.bound = r.omega + 3;
  IntervalBipartiteDetail info;
  res.colouring = colour_interval_bipartite(inst, &info);
  r.span = res.colouring.span();
  r.certified = r.valid = true;
  for (auto s : info.stages)
    if (s != RecolourStage::endpoint_paths) r.note = std::string("recolour=") + to_string(s);
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace bbc
