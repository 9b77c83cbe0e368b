#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bbc/algorithms/double_spaced.hpp"
#include "bbc/algorithms/forest_partition.hpp"
#include "bbc/algorithms/interval_bipartite.hpp"
#include "bbc/algorithms/sparse_peel.hpp"
#include "bbc/exact.hpp"
#include "bbc/report.hpp"

namespace bbc {

struct DispatchOptions {
  /// Mad bound handed to the peeling algorithm; exact Mad(H) when absent.
  std::optional<Rational> d;
  SparsePeelOptions sparse;
  ForestPartitionOptions forest;
};

struct BestColouring {
  Colouring colouring;
  /// Index into `reports` of the run that produced `colouring`.
  int chosen = -1;
  std::vector<AlgorithmReport> reports;
};

/// Runs every algorithm whose preconditions hold, keeps the verified
/// colouring of smallest span (earlier algorithms win ties). The
/// double-spaced colouring always runs, so the result never exceeds
/// q*omega - q + 1.
inline BestColouring best_colouring(const BackboneInstance& inst, const DispatchOptions& opt = {}) {
  if (!is_chordal(inst.host())) throw PreconditionError("chordal host");
  BestColouring best;
  auto consider = [&](const std::string& name, auto&& run) {
    AlgorithmReport rejected;
    rejected.algorithm = name;
    rejected.n = inst.vertex_count();
    try {
      ColouringResult r = run();
      best.reports.push_back(r.report);
      if (best.chosen < 0 || r.colouring.span() < best.colouring.span()) {
        best.colouring = std::move(r.colouring);
        best.chosen = static_cast<int>(best.reports.size()) - 1;
      }
    } catch (const PreconditionError& e) {
      rejected.applicable = false;
      rejected.note = e.condition();
      best.reports.push_back(rejected);
    } catch (const InternalError& e) {
      rejected.note = std::string("internal error: ") + e.what();
      best.reports.push_back(rejected);
    }
  };
  consider("double", [&] { return run_double_spaced(inst); });
  if (inst.q() == 2) {
    consider("interval2", [&] { return run_interval_bipartite(inst); });
    consider("sparse", [&] {
      const Rational d = opt.d ? *opt.d
                               : inst.backbone().edge_count() == 0 ? Rational(1) : exact_mad(inst.backbone()).value;
      return run_sparse_peel(inst, d, opt.sparse);
    });
    consider("c4free", [&] { return run_forest_partition(inst, opt.forest); });
  }
  return best;
}

}  // namespace bbc
