#pragma once

#include <chrono>

#include "bbc/chordal.hpp"
#include "bbc/report.hpp"
#include "bbc/verify.hpp"

namespace bbc {

/// g(v) = q*f(v) - q + 1 for the greedy omega-colouring f of a chordal host.
/// Span q*omega - q + 1; valid for every backbone.
inline Colouring double_spaced_colouring(const BackboneInstance& inst) {
  const Graph& g = inst.host();
  auto ord = mcs_ordering(g);
  if (!check_peo(g, ord)) throw PreconditionError("chordal host");
  Colouring f = greedy_omega_colouring(g, ord);
  Colouring out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.set(v, inst.q() * f[v] - inst.q() + 1);
  require_valid(inst, out, "double_spaced_colouring");
  return out;
}

inline ColouringResult run_double_spaced(const BackboneInstance& inst) {
  const auto start = std::chrono::steady_clock::now();
  ColouringResult res;
  res.colouring = double_spaced_colouring(inst);
  auto& r = res.report;
  r.algorithm = "double";
  r.n = inst.vertex_count();
  r.omega = chordal_clique_number(inst.host());
  r.span = res.colouring.span();
  r.bound = r.omega == 0 ? 0 : inst.q() * r.omega - inst.q() + 1;
  r.certified = r.valid = true;
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace bbc
