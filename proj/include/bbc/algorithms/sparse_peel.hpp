#pragma once

// 2-backbone colouring of a chordal host whose backbone has Mad(H) <= d,
// using at most floor((1+eps)*omega + c) colours, eps = sqrt(d/omega).
//
// Vertices with deg_G + 2 deg_H below that budget are peeled onto a stack;
// whatever is left is small and gets the double-spaced colouring; the stack is
// then unwound greedily. Each backbone neighbour blocks its own colour (already
// counted as a host neighbour) plus the two colours next to it, so a peeled
// vertex always finds a free colour.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bbc/algorithms/double_spaced.hpp"
#include "bbc/chordal.hpp"
#include "bbc/exact.hpp"
#include "bbc/rational.hpp"
#include "bbc/report.hpp"
#include "bbc/verify.hpp"

namespace bbc {

struct SparsityParameters {
  Rational d;
  int omega = 0;
  double epsilon = 0.0;
  double c = 0.0;
  int k = 0;

  /// eps = sqrt(d/omega), c = max(d/eps, d/(2 eps) + 3d), k = floor((1+eps) omega + c).
  static SparsityParameters compute(const Rational& d, int omega) {
    if (d <= Rational(0)) throw PreconditionError("d > 0");
    if (omega < 1) throw PreconditionError("omega >= 1");
    SparsityParameters p;
    p.d = d;
    p.omega = omega;
    const double dd = d.to_double();
    p.epsilon = std::sqrt(dd / omega);
    p.c = std::max(dd / p.epsilon, dd / (2 * p.epsilon) + 3 * dd);
    p.k = static_cast<int>(std::floor((1 + p.epsilon) * omega + p.c + 1e-9));
    return p;
  }

  /// Largest residual the argument allows: ceil(d / eps).
  int residual_limit() const { return static_cast<int>(std::ceil(d.to_double() / epsilon - 1e-9)); }

  /// floor(omega + 2 sqrt(d omega) + 3d), the headline form of the bound.
  int headline_bound() const {
    const double dd = d.to_double();
    return static_cast<int>(std::floor(omega + 2 * std::sqrt(dd * omega) + 3 * dd + 1e-9));
  }
};

/// Peeling got stuck on a residual too large for Mad(H) <= d. The residual's
/// vertices (original ids) are a certificate that the caller's d is too small.
class MadViolation : public PreconditionError {
 public:
  MadViolation(std::vector<Vertex> residual, Rational residual_density, const std::string& detail)
      : PreconditionError("Mad(H) <= d", detail),
        residual_(std::move(residual)),
        density_(residual_density) {}

  const std::vector<Vertex>& residual() const noexcept { return residual_; }
  /// Average backbone degree of the residual.
  Rational residual_density() const noexcept { return density_; }

 private:
  std::vector<Vertex> residual_;
  Rational density_;
};

struct SparsePeelOptions {
  /// Check d >= Mad(H) exactly when n is at most this.
  int verify_mad_up_to = 200;
};

struct SparsePeelDetail {
  SparsityParameters params;
  int peeled = 0;
  int residual = 0;
};

inline Colouring colour_sparse_peel(const BackboneInstance& inst, const Rational& d,
                                    const SparsePeelOptions& opt = {},
                                    SparsePeelDetail* info = nullptr) {
  if (inst.q() != 2) throw PreconditionError("q = 2");
  if (d <= Rational(0)) throw PreconditionError("d > 0");
  const Graph& g = inst.host();
  const Graph& h = inst.backbone();
  const int n = g.vertex_count();
  auto ord = mcs_ordering(g);
  if (!check_peo(g, ord)) throw PreconditionError("chordal host");

  if (h.edge_count() == 0) {
    Colouring out = greedy_omega_colouring(g, ord);
    require_valid(inst, out, "colour_sparse_peel");
    return out;
  }
  if (n <= opt.verify_mad_up_to) {
    auto mad = exact_mad(h);
    if (mad.value > d)
      throw MadViolation(mad.witness, mad.value, "Mad(H) = " + mad.value.str() + " exceeds d = " + d.str());
  }

  const int omega = chordal_clique_number(g);
  const auto p = SparsityParameters::compute(d, omega);

  std::vector<int> key(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) key[v] = g.degree(v) + 2 * h.degree(v);
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) queue.emplace(key[v], v);
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  std::vector<Vertex> stack;
  while (!queue.empty() && queue.begin()->first < p.k) {
    const Vertex v = queue.begin()->second;
    queue.erase(queue.begin());
    removed[v] = true;
    stack.push_back(v);
    auto drop = [&](Vertex u, int by) {
      if (removed[u]) return;
      queue.erase({key[u], u});
      key[u] -= by;
      queue.emplace(key[u], u);
    };
    for (Vertex u : g.neighbours(v)) drop(u, 1);
    for (Vertex u : h.neighbours(v)) drop(u, 2);
  }

  std::vector<Vertex> residual;
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) residual.push_back(v);
  if (static_cast<int>(residual.size()) > p.residual_limit())
    throw MadViolation(residual, average_degree(h, residual),
                       std::to_string(residual.size()) + " vertices survive peeling, limit " +
                           std::to_string(p.residual_limit()));

  Colouring out(n);
  if (!residual.empty()) {
    Colouring base = double_spaced_colouring(inst.induced(residual));
    for (std::size_t i = 0; i < residual.size(); ++i) out.set(residual[i], base[static_cast<Vertex>(i)]);
  }

  std::vector<char> blocked(static_cast<std::size_t>(p.k) + 2);
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    const Vertex v = *it;
    std::fill(blocked.begin(), blocked.end(), 0);
    auto block = [&](int c) {
      if (c >= 1 && c <= p.k) blocked[c] = 1;
    };
    for (Vertex u : g.neighbours(v)) block(out[u]);
    for (Vertex u : h.neighbours(v))
      if (out[u] > 0) {
        block(out[u] - 1);
        block(out[u] + 1);
      }
    int c = 1;
    while (c <= p.k && blocked[c]) ++c;
    if (c > p.k) throw InternalError("no free colour while unwinding the peeling stack");
    out.set(v, c);
  }

  require_valid(inst, out, "colour_sparse_peel");
  if (out.span() > p.k) throw InternalError("sparse peeling exceeded its colour budget");
  if (info) {
    info->params = p;
    info->peeled = static_cast<int>(stack.size());
    info->residual = static_cast<int>(residual.size());
  }
  return out;
}

inline ColouringResult run_sparse_peel(const BackboneInstance& inst, const Rational& d,
                                       const SparsePeelOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  ColouringResult res;
  auto& r = res.report;
  r.algorithm = "sparse";
  r.n = inst.vertex_count();
  SparsePeelDetail info;
  res.colouring = colour_sparse_peel(inst, d, opt, &info);
  r.omega = chordal_clique_number(inst.host());
  r.bound = inst.backbone().edge_count() == 0 ? r.omega : info.params.k;
  r.span = res.colouring.span();
  r.certified = r.valid = true;
  r.note = "d=" + d.str();
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace bbc
