#pragma once

// Certificate checks for linear and circular q-backbone colourings. Every
// algorithm in the library is gated through verify_backbone_colouring.

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "bbc/graph.hpp"

namespace bbc {

enum class ViolationKind { proper, backbone_gap, circular_gap };

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::proper: return "proper";
    case ViolationKind::backbone_gap: return "backbone-gap";
    case ViolationKind::circular_gap: return "circular-gap";
  }
  return "?";
}

struct Violation {
  Edge edge;
  ViolationKind kind;
  bool operator==(const Violation&) const = default;
};

struct VerificationReport {
  bool valid = false;
  Colour span = 0;
  std::vector<Violation> violations;
};

namespace detail {

inline void require_total(const BackboneInstance& inst, const Colouring& col) {
  if (col.size() != inst.vertex_count())
    throw std::invalid_argument("colouring size " + std::to_string(col.size()) +
                                " does not match instance order " +
                                std::to_string(inst.vertex_count()));
  for (Vertex v = 0; v < col.size(); ++v)
    if (col[v] < 1)
      throw std::invalid_argument("vertex " + std::to_string(v + 1) + " is uncoloured");
}

inline void check_proper(const BackboneInstance& inst, const Colouring& col,
                         std::vector<Violation>& out) {
  for (auto e : inst.host().edges())
    if (col[e.first] == col[e.second]) out.push_back({e, ViolationKind::proper});
}

}  // namespace detail

/// Proper on G, and |c(u) - c(v)| >= q on every backbone edge. A partial
/// colouring is an error, never a silent pass.
inline VerificationReport verify_backbone_colouring(const BackboneInstance& inst,
                                                    const Colouring& col) {
  detail::require_total(inst, col);
  VerificationReport r;
  r.span = col.span();
  detail::check_proper(inst, col, r.violations);
  for (auto e : inst.backbone().edges())
    if (std::abs(col[e.first] - col[e.second]) < inst.q())
      r.violations.push_back({e, ViolationKind::backbone_gap});
  r.valid = r.violations.empty();
  return r;
}

/// Proper on G, and q <= |c(u) - c(v)| <= k - q on every backbone edge.
inline VerificationReport verify_circular_colouring(const BackboneInstance& inst,
                                                    const Colouring& col, int k) {
  detail::require_total(inst, col);
  for (Vertex v = 0; v < col.size(); ++v)
    if (col[v] > k)
      throw std::invalid_argument("colour " + std::to_string(col[v]) + " exceeds k = " +
                                  std::to_string(k));
  VerificationReport r;
  r.span = k;
  detail::check_proper(inst, col, r.violations);
  for (auto e : inst.backbone().edges()) {
    int d = std::abs(col[e.first] - col[e.second]);
    if (d < inst.q() || d > k - inst.q())
      r.violations.push_back({e, ViolationKind::circular_gap});
  }
  r.valid = r.violations.empty();
  return r;
}

/// Throws InternalError unless `col` is a valid q-backbone colouring.
inline void require_valid(const BackboneInstance& inst, const Colouring& col,
                          const std::string& who) {
  auto rep = verify_backbone_colouring(inst, col);
  if (!rep.valid) {
    const auto& v = rep.violations.front();
    throw InternalError(who + " produced an invalid colouring (" + to_string(v.kind) +
                        " violation on edge " + std::to_string(v.edge.first + 1) + "-" +
                        std::to_string(v.edge.second + 1) + ")");
  }
}

}  // namespace bbc
