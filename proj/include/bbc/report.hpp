#pragma once

#include <ostream>
#include <string>

#include "bbc/graph.hpp"
#include "bbc/verify.hpp"

namespace bbc {

/// Outcome of one algorithm run. `bound` is the guaranteed span for the
/// instance class; `certified` says whether the returned colouring is the
/// algorithm's own construction (false after a fallback or rejection).
struct AlgorithmReport {
  std::string algorithm;
  int n = 0;
  int omega = 0;
  int span = 0;
  int bound = 0;
  bool certified = false;
  bool applicable = true;
  bool valid = false;
  std::string note;
  double millis = 0.0;
};

struct ColouringResult {
  Colouring colouring;
  AlgorithmReport report;
};

inline const char* report_csv_header() {
  return "instance,algorithm,n,omega,span,bound,certified,millis";
}

inline void write_report_csv(std::ostream& out, const std::string& instance_id,
                             const AlgorithmReport& r) {
  out << instance_id << ',' << r.algorithm << ',' << r.n << ',' << r.omega << ',' << r.span << ','
      << r.bound << ',' << (r.certified ? "true" : "false") << ',' << r.millis << '\n';
}

}  // namespace bbc
