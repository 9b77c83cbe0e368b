// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Seeds are fixed so every run checks the same instances.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "bbc/bbc.hpp"
#include "oracles.hpp"

using namespace bbc;

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double ms = millis_since(t0);
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << name << "  ["
            << std::fixed << std::setprecision(0) << ms << " ms]  " << o.detail.str() << std::endl;
  if (!o.pass) ++failures;
}

struct Timing {
  double total = 0, worst = 0;
  int count = 0;
  void add(double ms) {
    total += ms;
    worst = std::max(worst, ms);
    ++count;
  }
  double mean() const { return count ? total / count : 0.0; }
};

void report_timing(Outcome& o, const Timing& t, double limit_ms) {
  o.detail << std::fixed << std::setprecision(2) << "mean " << t.mean() << " ms, worst " << t.worst << " ms (limit "
           << limit_ms << " ms mean)";
  if (t.mean() >= limit_ms) o.fail("mean runtime over limit");
}

Graph random_graph(SplitMix64& rng, int max_n) {
  return oracle::random_graph(rng.between(1, max_n), rng.between(1, 7), 8, rng);
}

}  // namespace

int main() {
  criterion(1, "interval hosts, bipartite backbone: span <= omega+3", [](Outcome& o) {
    Timing t;
    int ok = 0;
    for (int i = 0; i < 500; ++i) {
      SplitMix64 r(1000 + i);
      GeneratorSpec s;
      s.kind = HostKind::interval2;
      s.length = r.between(1, 30);
      s.omega = r.between(2, 12);
      s.backbone = BackboneKind::bipartite;
      s.seed = 7000 + i;
      const auto inst = generate(s);
      const auto t0 = Clock::now();
      Colouring c;
      try {
        c = colour_interval_bipartite(inst);
      } catch (const std::exception& e) {
        o.fail(s.describe() + ": " + e.what());
        continue;
      }
      t.add(millis_since(t0));
      if (!verify_backbone_colouring(inst, c).valid) o.fail(s.describe() + ": invalid");
      else if (c.span() > s.omega + 3) o.fail(s.describe() + ": span over omega+3");
      else ++ok;
    }
    o.detail << ok << "/500 within bound; ";
    report_timing(o, t, 10);
  });

  criterion(2, "chordal hosts, forest backbone, d=2: span <= ceil(omega+2sqrt(2 omega)+6)", [](Outcome& o) {
    Timing t;
    int ok = 0, slack = 1 << 30;
    for (int i = 0; i < 300; ++i) {
      SplitMix64 r(2000 + i);
      GeneratorSpec s;
      s.omega = r.between(2, 40);
      s.n = r.between(s.omega, 1000);
      s.backbone = BackboneKind::forest;
      s.seed = 9000 + i;
      const auto inst = generate(s);
      const auto t0 = Clock::now();
      Colouring c;
      try {
        c = colour_sparse_peel(inst, Rational(2));
      } catch (const std::exception& e) {
        o.fail(s.describe() + ": " + e.what());
        continue;
      }
      t.add(millis_since(t0));
      const int w = s.omega;
      const int bound = static_cast<int>(std::ceil(w + 2 * std::sqrt(2.0 * w) + 6 - 1e-9));
      if (!verify_backbone_colouring(inst, c).valid) o.fail(s.describe() + ": invalid");
      else if (c.span() > bound) o.fail(s.describe() + ": span over bound");
      else {
        ++ok;
        slack = std::min(slack, bound - c.span());
      }
    }
    o.detail << ok << "/300 within bound, min slack " << slack << "; ";
    report_timing(o, t, 100);
  });

  criterion(3, "chordal hosts, C4-free backbone: span <= (3 omega+7)/2 or (3 omega+8)/2", [](Outcome& o) {
    Timing t;
    int certified = 0;
    std::vector<std::string> fallbacks;
    for (int i = 0; i < 300; ++i) {
      SplitMix64 r(3000 + i);
      GeneratorSpec s;
      s.omega = r.between(3, 15);
      s.n = r.between(s.omega, 300);
      s.backbone = BackboneKind::c4free;
      s.seed = 11000 + i;
      const auto inst = generate(s);
      const auto t0 = Clock::now();
      const auto res = run_forest_partition(inst);
      t.add(millis_since(t0));
      const int w = s.omega;
      const int bound = w % 2 ? (3 * w + 7) / 2 : (3 * w + 8) / 2;
      if (!verify_backbone_colouring(inst, res.colouring).valid) o.fail(s.describe() + ": invalid");
      if (!res.report.certified) {
        fallbacks.push_back(s.describe());
        continue;
      }
      if (res.colouring.span() > bound) o.fail(s.describe() + ": span over bound");
      else ++certified;
    }
    o.detail << certified << "/300 certified, " << fallbacks.size() << " fallback(s)";
    for (const auto& f : fallbacks) o.detail << " [" << f << "]";
    o.detail << "; ";
    if (certified < 285) o.fail("fewer than 95% certified");
    report_timing(o, t, 100);
  });

  criterion(4, "lower-bound family: BBC = 5 for r=1, structure for r=1..4", [](Outcome& o) {
    const auto r1 = exact_bbc(gen_lower_bound_family(1), SolverOptions{0});
    if (!r1.exact || r1.optimum != 5) o.fail("exact value " + std::to_string(r1.optimum));
    for (int r = 1; r <= 4; ++r) {
      const auto inst = gen_lower_bound_family(r);
      if (!is_chordal(inst.host())) o.fail("r=" + std::to_string(r) + " not chordal");
      if (chordal_clique_number(inst.host()) != 3 * r) o.fail("r=" + std::to_string(r) + " omega");
      if (!is_bipartite(inst.backbone())) o.fail("r=" + std::to_string(r) + " backbone not bipartite");
    }
    o.detail << "BBC_2 = " << r1.optimum << " in " << std::fixed << std::setprecision(3) << r1.seconds * 1000
             << " ms; limit 5000 ms";
    if (r1.seconds > 5) o.fail("over 5 s");
  });

  criterion(5, "exact solver equals brute force (n <= 6, q in {2,3})", [](Outcome& o) {
    SplitMix64 rng(5005);
    const auto t0 = Clock::now();
    int agree = 0;
    for (int i = 0; i < 200; ++i) {
      auto g = random_graph(rng, 6);
      BackboneInstance inst(g, oracle::random_edge_subset(g, 1, 2, rng), rng.between(2, 3));
      const auto ex = exact_bbc(inst, SolverOptions{0});
      const int bf = brute_force_bbc(inst);
      if (!ex.exact || ex.optimum != bf) o.fail(serialize_instance(inst));
      else ++agree;
    }
    const double ms = millis_since(t0);
    o.detail << agree << "/200 agree; limit 60000 ms";
    if (ms > 60000) o.fail("over 60 s");
  });

  criterion(6, "sandwich inequalities on random instances (n <= 7)", [](Outcome& o) {
    SplitMix64 rng(6006);
    int violations = 0;
    for (int i = 0; i < 200; ++i) {
      auto g = random_graph(rng, 7);
      BackboneInstance inst(g, oracle::random_edge_subset(g, 1, 2, rng), rng.between(1, 3));
      const int q = inst.q();
      const int chi_g = exact_chromatic_number(g, SolverOptions{0}).optimum;
      const int chi_h = exact_chromatic_number(inst.backbone(), SolverOptions{0}).optimum;
      const auto b = exact_bbc(inst, SolverOptions{0});
      const auto c = exact_cbc(inst, SolverOptions{0});
      if (!b.exact || !c.exact) {
        o.fail("solver inexact");
        continue;
      }
      const bool ok = q * chi_h - q + 1 <= b.optimum && b.optimum <= q * chi_g - q + 1 &&
                      b.optimum <= c.optimum && c.optimum <= b.optimum + q - 1 && c.optimum <= q * chi_g;
      if (!ok) {
        ++violations;
        o.fail(serialize_instance(inst));
      }
    }
    o.detail << violations << " violations over 200 instances";
  });

  criterion(7, "exact Mad equals brute force; spanning forests have Mad < 2", [](Outcome& o) {
    SplitMix64 rng(7007);
    const auto t0 = Clock::now();
    int agree = 0;
    for (int i = 0; i < 100; ++i) {
      auto g = random_graph(rng, 12);
      const auto fast = exact_mad(g), slow = brute_force_mad(g);
      if (fast.value != slow.value) o.fail("mismatch on n=" + std::to_string(g.vertex_count()));
      else ++agree;
      const Graph forest(g.vertex_count(), extract_spanning_forest(g, rng.next()));
      if (!(exact_mad(forest).value < Rational(2))) o.fail("forest with Mad >= 2");
    }
    const double ms = millis_since(t0);
    o.detail << agree << "/100 agree; limit 30000 ms";
    if (ms > 30000) o.fail("over 30 s");
  });

  criterion(8, "smooth decompositions and clique paths are valid", [](Outcome& o) {
    int smooth = 0, paths = 0;
    for (int i = 0; i < 200; ++i) {
      SplitMix64 r(8000 + i);
      const int omega = r.between(2, 12);
      const auto g = gen_random_chordal(r.between(omega, 200), omega, r.next());
      const auto s = smooth_tree_decomposition(g);
      if (auto err = smooth_decomposition_error(g, s)) o.fail(*err);
      else if (s.width != omega) o.fail("width differs from omega");
      else ++smooth;
    }
    auto check_path = [&](const Graph& g) {
      const auto cp = clique_path_restricted(g);
      if (!cp) return;
      const auto& bags = cp.path->bags;
      TreeDecomposition td{bags, {}};
      for (int i = 1; i < static_cast<int>(bags.size()); ++i) td.tree_edges.emplace_back(i - 1, i);
      if (auto err = tree_decomposition_error(g, td)) o.fail("clique path: " + *err);
      for (std::size_t i = 1; i + 1 < bags.size(); ++i) {
        std::vector<Vertex> both;
        std::set_intersection(bags[i - 1].begin(), bags[i - 1].end(), bags[i + 1].begin(), bags[i + 1].end(),
                              std::back_inserter(both));
        if (!both.empty()) o.fail("X(i-1) and X(i+1) intersect");
      }
      ++paths;
    };
    for (int i = 0; i < 200; ++i) {
      SplitMix64 r(8500 + i);
      check_path(gen_random_interval_two_clique(r.between(1, 30), r.between(2, 12), r.next()));
      check_path(gen_random_chordal(r.between(4, 12), r.between(2, 4), r.next()));
    }
    o.detail << smooth << "/200 smooth decompositions valid, " << paths << " clique-path acceptances valid";
  });

  criterion(9, "heuristics never beat the optimum; best <= 2 omega - 1", [](Outcome& o) {
    int solved = 0, skipped = 0;
    for (int i = 0; i < 120; ++i) {
      SplitMix64 r(9500 + i);
      GeneratorSpec s;
      s.omega = r.between(2, 6);
      s.n = r.between(s.omega, 16);
      s.backbone = static_cast<BackboneKind>(r.between(0, 4));
      s.seed = r.next();
      const auto inst = generate(s);
      const auto best = best_colouring(inst);
      if (!verify_backbone_colouring(inst, best.colouring).valid) o.fail(s.describe() + ": best invalid");
      if (best.colouring.span() > 2 * s.omega - 1) o.fail(s.describe() + ": best over 2 omega - 1");
      const auto ex = exact_bbc(inst, SolverOptions{2.0});
      if (!ex.exact) {
        ++skipped;
        continue;
      }
      ++solved;
      for (const auto& rep : best.reports)
        if (rep.applicable && rep.valid && rep.span < ex.optimum)
          o.fail(s.describe() + ": " + rep.algorithm + " below optimum");
    }
    o.detail << solved << " solved exactly, " << skipped << " over budget";
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
