#pragma once

// Command implementations for the `bbc` executable. Kept in a header so the
// test suite can drive commands in-process through run_cli().
//
// Exit status: 0 success, 1 invalid colouring, 2 precondition rejected,
// 3 time budget exhausted, 4 I/O, format or usage error.

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bbc/bbc.hpp"

namespace bbc::cli {

enum Exit : int { ok = 0, invalid = 1, rejected = 2, budget = 3, io = 4 };

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Worker count for batch commands: BBC_THREADS if set and positive, else
/// the hardware concurrency, never more than `jobs`.
inline int thread_count(int jobs) {
  int t = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BBC_THREADS")) {
    try {
      t = std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("BBC_THREADS must be a positive integer, got '") + env + "'");
    }
    if (t < 1) throw UsageError("BBC_THREADS must be a positive integer");
  }
  return std::max(1, std::min(t, jobs));
}

/// Calls job(i) for i in [0, count) on a small thread pool. Jobs write only
/// to their own slot, so the output order never depends on scheduling.
template <typename Job>
void for_each_parallel(int count, Job job) {
  const int workers = thread_count(count);
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  auto work = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes to `path`, or to `fallback` when the path is empty or "-".
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn fn) {
  if (path.empty() || path == "-") {
    fn(fallback);
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  fn(out);
  if (!out) throw IoError("write to '" + path + "' failed");
}

inline std::string instance_id(const std::string& path) {
  return path == "-" ? std::string("stdin") : std::filesystem::path(path).stem().string();
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

/// Every component accepted by clique_path_restricted.
inline bool interval_restricted(const Graph& g) {
  if (!is_chordal(g)) return false;
  for (const auto& comp : connected_components(g))
    if (!clique_path_restricted(induced_subgraph(g, comp))) return false;
  return true;
}

// ---------------------------------------------------------------------------

struct ColourConfig {
  std::string instance;
  std::string alg = "best";
  std::string d;
  double budget = 10.0;
  std::string out;
  std::string csv;
};

inline int cmd_colour(const ColourConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto inst = parse_instance(read_text(cfg.instance));
  std::optional<Rational> d;
  if (!cfg.d.empty()) {
    if (cfg.alg != "sparse" && cfg.alg != "best") throw UsageError("--d applies only to --alg sparse or best");
    try {
      d = Rational::parse(cfg.d);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  auto mad_or_default = [&] {
    if (d) return *d;
    return inst.backbone().edge_count() == 0 ? Rational(1) : exact_mad(inst.backbone()).value;
  };

  Colouring col;
  std::vector<AlgorithmReport> reports;
  int status = Exit::ok;
  if (cfg.alg == "best") {
    DispatchOptions opt;
    opt.d = d;
    auto best = best_colouring(inst, opt);
    col = best.colouring;
    reports = best.reports;
    const auto& chosen = best.reports[best.chosen];
    err << "best: " << chosen.algorithm << " span " << col.span() << '\n';
  } else if (cfg.alg == "exact") {
    SolverOptions opt;
    opt.budget_seconds = cfg.budget;
    auto r = exact_bbc(inst, opt);
    col = r.witness;
    AlgorithmReport rep;
    rep.algorithm = "exact";
    rep.n = inst.vertex_count();
    rep.omega = is_chordal(inst.host()) ? chordal_clique_number(inst.host()) : 0;
    rep.span = col.span();
    rep.bound = r.upper_bound;
    rep.certified = r.exact;
    rep.valid = true;
    rep.millis = r.seconds * 1000.0;
    reports.push_back(rep);
    if (!r.exact) {
      err << "budget exhausted: " << r.lower_bound << " <= BBC <= " << r.upper_bound << '\n';
      status = Exit::budget;
    }
  } else {
    ColouringResult r;
    if (cfg.alg == "double")
      r = run_double_spaced(inst);
    else if (cfg.alg == "interval2")
      r = run_interval_bipartite(inst);
    else if (cfg.alg == "sparse")
      r = run_sparse_peel(inst, mad_or_default());
    else if (cfg.alg == "c4free")
      r = run_forest_partition(inst);
    else
      throw UsageError("unknown algorithm '" + cfg.alg + "'");
    col = r.colouring;
    reports.push_back(r.report);
    err << r.report.algorithm << ": span " << r.report.span << ", bound " << r.report.bound
        << (r.report.certified ? "" : " (not certified)")
        << (r.report.note.empty() ? "" : ", " + r.report.note) << '\n';
  }

  const auto check = verify_backbone_colouring(inst, col);
  emit(cfg.out, out, [&](std::ostream& o) { write_colouring(o, col); });
  if (!cfg.csv.empty())
    emit(cfg.csv, out, [&](std::ostream& o) {
      o << report_csv_header() << '\n';
      for (const auto& r : reports) write_report_csv(o, instance_id(cfg.instance), r);
    });
  if (!check.valid) {
    err << "verifier rejected the colouring\n";
    return Exit::invalid;
  }
  return status;
}

struct ExactConfig {
  std::string instance;
  bool circular = false;
  double budget = 10.0;
  std::string out;
};

inline int cmd_exact(const ExactConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto inst = parse_instance(read_text(cfg.instance));
  SolverOptions opt;
  opt.budget_seconds = cfg.budget;
  const auto r = cfg.circular ? exact_cbc(inst, opt) : exact_bbc(inst, opt);
  const char* tag = cfg.circular ? "cbc" : "bbc";
  emit(cfg.out, out, [&](std::ostream& o) {
    if (r.exact)
      o << "x " << tag << ' ' << r.optimum << '\n';
    else
      o << "c inexact: " << r.lower_bound << " <= " << tag << " <= " << r.upper_bound << '\n';
    if (inst.vertex_count() > 0) write_colouring(o, r.witness);
  });
  if (!r.exact) {
    err << "budget exhausted: " << r.lower_bound << " <= " << tag << " <= " << r.upper_bound << '\n';
    return Exit::budget;
  }
  err << tag << " = " << r.optimum << " (" << r.nodes << " nodes, " << r.seconds << " s)\n";
  return Exit::ok;
}

struct VerifyConfig {
  std::string instance;
  std::string colouring;
  bool circular = false;
};

inline int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream&) {
  const auto inst = parse_instance(read_text(cfg.instance));
  const std::string text = read_text(cfg.colouring);
  const auto col = parse_colouring(text, inst.vertex_count());
  VerificationReport rep;
  if (cfg.circular) {
    // The circular span is the `x cbc k` value when present.
    int k = col.span();
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      std::istringstream ls(line);
      std::string t, kind;
      int value = 0;
      if (ls >> t >> kind >> value && t == "x" && kind == "cbc") k = value;
    }
    rep = verify_circular_colouring(inst, col, k);
  } else {
    rep = verify_backbone_colouring(inst, col);
  }
  if (rep.valid) {
    out << "valid span " << rep.span << '\n';
    return Exit::ok;
  }
  out << "invalid: " << rep.violations.size() << " violation(s)\n";
  const std::size_t shown = std::min<std::size_t>(rep.violations.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& v = rep.violations[i];
    out << "violation " << v.edge.first + 1 << ' ' << v.edge.second + 1 << ' ' << to_string(v.kind) << '\n';
  }
  return Exit::invalid;
}

inline int cmd_recognize(const std::string& path, std::ostream& out) {
  const auto inst = parse_instance(read_text(path));
  const Graph& g = inst.host();
  const Graph& h = inst.backbone();
  const bool chordal = is_chordal(g);
  out << "n=" << g.vertex_count() << '\n'
      << "m=" << g.edge_count() << '\n'
      << "mH=" << h.edge_count() << '\n'
      << "q=" << inst.q() << '\n'
      << "chordal=" << yes_no(chordal) << '\n';
  if (chordal) out << "omega=" << chordal_clique_number(g) << '\n';
  out << "interval-restricted=" << yes_no(interval_restricted(g)) << '\n'
      << "H-bipartite=" << yes_no(static_cast<bool>(is_bipartite(h))) << '\n'
      << "H-C4-free=" << yes_no(static_cast<bool>(is_c4_free(h))) << '\n'
      << "H-forest=" << yes_no(is_forest(h)) << '\n';
  return Exit::ok;
}

inline int cmd_mad(const std::string& path, bool host, std::ostream& out) {
  const auto inst = parse_instance(read_text(path));
  const auto r = exact_mad(host ? inst.host() : inst.backbone());
  out << "mad=" << r.value.str() << '\n' << "witness=";
  for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? " " : "") << r.witness[i] + 1;
  out << '\n';
  return Exit::ok;
}

// ---------------------------------------------------------------------------
// Generator-driven commands

struct GeneratorFlags {
  std::string kind = "chordal";
  std::string backbone = "forest";
  GeneratorSpec spec;
  int count = 1;

  GeneratorSpec resolve(int index) const {
    GeneratorSpec s = spec;
    static const std::map<std::string, HostKind> kinds{
        {"chordal", HostKind::chordal}, {"interval2", HostKind::interval2}, {"lower-bound", HostKind::lower_bound}};
    static const std::map<std::string, BackboneKind> backbones{{"none", BackboneKind::none},
                                                               {"full", BackboneKind::full},
                                                               {"forest", BackboneKind::forest},
                                                               {"bipartite", BackboneKind::bipartite},
                                                               {"c4free", BackboneKind::c4free}};
    auto k = kinds.find(kind);
    if (k == kinds.end()) throw UsageError("unknown --kind '" + kind + "'");
    auto b = backbones.find(backbone);
    if (b == backbones.end()) throw UsageError("unknown --backbone '" + backbone + "'");
    s.kind = k->second;
    s.backbone = b->second;
    s.seed = spec.seed + static_cast<std::uint64_t>(index);
    return s;
  }

  void attach(CLI::App& app) {
    app.add_option("--kind", kind, "chordal | interval2 | lower-bound")->capture_default_str();
    auto* n = app.add_option("--n", spec.n, "vertices (chordal)")->capture_default_str();
    app.add_option("--omega", spec.omega, "clique number")->capture_default_str();
    auto* length = app.add_option("--length", spec.length, "bags (interval2)")->capture_default_str();
    auto* r = app.add_option("--r", spec.r, "family parameter (lower-bound)")->capture_default_str();
    r->excludes(n)->excludes(length);
    app.add_option("--q", spec.q, "backbone gap")->capture_default_str();
    app.add_option("--backbone", backbone, "none | full | forest | bipartite | c4free")->capture_default_str();
    app.add_option("--seed", spec.seed, "base seed; instance i uses seed + i")->capture_default_str();
    app.add_option("--count", count, "number of instances")->capture_default_str()->check(CLI::PositiveNumber);
  }
};

inline int cmd_generate(const GeneratorFlags& flags, const std::string& out_path, std::ostream& out) {
  if (flags.count == 1) {
    const auto spec = flags.resolve(0);
    const auto inst = generate(spec);
    emit(out_path, out, [&](std::ostream& o) { write_instance(o, inst, {"generator: " + spec.describe()}); });
    return Exit::ok;
  }
  if (out_path.empty() || out_path == "-") throw UsageError("--count > 1 needs --out <directory>");
  std::filesystem::create_directories(out_path);
  for_each_parallel(flags.count, [&](int i) {
    const auto spec = flags.resolve(i);
    const auto inst = generate(spec);
    const auto file = std::filesystem::path(out_path) / (std::string(to_string(spec.kind)) + "-" +
                                                         std::to_string(spec.seed) + ".bbc");
    emit(file.string(), out, [&](std::ostream& o) { write_instance(o, inst, {"generator: " + spec.describe()}); });
  });
  out << "wrote " << flags.count << " instances to " << out_path << '\n';
  return Exit::ok;
}

struct SurveyRow {
  std::string id;
  int n = 0;
  int omega = 0;
  std::map<std::string, int> spans;  // algorithm -> span, only for runs that applied
  int best = 0;
  bool exact = false;
  int lower = 0;
  int upper = 0;
};

inline SurveyRow survey_instance(const std::string& id, const BackboneInstance& inst, double budget) {
  SurveyRow row;
  row.id = id;
  row.n = inst.vertex_count();
  row.omega = chordal_clique_number(inst.host());
  const auto best = best_colouring(inst);
  for (const auto& r : best.reports)
    if (r.applicable && r.valid) row.spans[r.algorithm] = r.span;
  row.best = best.colouring.span();
  SolverOptions opt;
  opt.budget_seconds = budget;
  const auto ex = exact_bbc(inst, opt);
  row.exact = ex.exact;
  row.lower = ex.lower_bound;
  row.upper = std::min(ex.upper_bound, row.best);
  return row;
}

inline int cmd_survey(const GeneratorFlags& flags, bool with_lower_bound, double budget, const std::string& csv,
                      std::ostream& out, std::ostream& err) {
  const int count = flags.count + (with_lower_bound ? 1 : 0);
  std::vector<SurveyRow> rows(static_cast<std::size_t>(count));
  for_each_parallel(count, [&](int i) {
    if (i == flags.count) {
      rows[i] = survey_instance("lower-bound-r1", gen_lower_bound_family(1), budget);
      return;
    }
    const auto spec = flags.resolve(i);
    std::ostringstream id;
    id << "i" << std::setw(5) << std::setfill('0') << i;
    rows[i] = survey_instance(id.str(), generate(spec), budget);
  });
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.id < b.id; });

  static const char* algorithms[] = {"double", "interval2", "sparse", "c4free"};
  std::optional<Rational> max_ratio;
  emit(csv, out, [&](std::ostream& o) {
    o << "instance,n,omega,double,interval2,sparse,c4free,best,exact,lower,upper,ratio\n";
    for (const auto& r : rows) {
      o << r.id << ',' << r.n << ',' << r.omega;
      for (const char* a : algorithms) {
        o << ',';
        if (auto it = r.spans.find(a); it != r.spans.end()) o << it->second;
      }
      // Ratio of the exact optimum (or the best known span when inexact) to omega.
      const Rational ratio = r.omega == 0 ? Rational(1) : Rational(r.upper, r.omega);
      o << ',' << r.best << ',' << (r.exact ? "yes" : "no") << ',' << r.lower << ',' << r.upper << ','
        << ratio.str() << '\n';
      if (r.exact && (!max_ratio || ratio > *max_ratio)) max_ratio = ratio;
    }
    o << "summary,,,,,,,,,,," << (max_ratio ? max_ratio->str() : std::string()) << '\n';
  });
  const auto inexact = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.exact; });
  err << rows.size() << " instances, " << inexact << " inexact, max exact ratio "
      << (max_ratio ? max_ratio->str() : std::string("n/a")) << '\n';
  return Exit::ok;
}

// ---------------------------------------------------------------------------

/// Parses arguments and runs one subcommand. Never throws.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"2-backbone colouring of chordal graphs"};
  app.require_subcommand(1);

  ColourConfig colour;
  auto* c = app.add_subcommand("colour", "colour an instance");
  c->add_option("instance", colour.instance, "instance file ('-' for stdin)")->required();
  c->add_option("--alg", colour.alg, "best | interval2 | sparse | c4free | double | exact")
      ->capture_default_str()
      ->check(CLI::IsMember({"best", "interval2", "sparse", "c4free", "double", "exact"}));
  c->add_option("--d", colour.d, "Mad bound for the sparse algorithm (p, p/q or decimal)");
  c->add_option("--budget", colour.budget, "seconds for --alg exact")->capture_default_str();
  c->add_option("--out", colour.out, "colouring file (default stdout)");
  c->add_option("--csv", colour.csv, "report CSV file");

  ExactConfig exact;
  auto* x = app.add_subcommand("exact", "exact BBC (or CBC) by branch and bound");
  x->add_option("instance", exact.instance)->required();
  x->add_flag("--circular", exact.circular, "circular variant");
  x->add_option("--budget", exact.budget, "seconds; <= 0 for unlimited")->capture_default_str();
  x->add_option("--out", exact.out, "result file (default stdout)");

  VerifyConfig verify;
  auto* v = app.add_subcommand("verify", "check a colouring against an instance");
  v->add_option("instance", verify.instance)->required();
  v->add_option("colouring", verify.colouring)->required();
  v->add_flag("--circular", verify.circular, "check the circular condition");

  std::string recognize_path;
  auto* rz = app.add_subcommand("recognize", "report structural properties");
  rz->add_option("instance", recognize_path)->required();

  std::string mad_path;
  bool mad_host = false;
  auto* m = app.add_subcommand("mad", "exact maximum average degree of the backbone");
  m->add_option("instance", mad_path)->required();
  m->add_flag("--host", mad_host, "use the host graph instead");

  GeneratorFlags gen_flags;
  std::string gen_out;
  auto* g = app.add_subcommand("generate", "write seeded instances");
  gen_flags.attach(*g);
  g->add_option("--out", gen_out, "file, or directory when --count > 1");

  GeneratorFlags survey_flags;
  survey_flags.count = 10;
  bool with_lb = false;
  double survey_budget = 2.0;
  std::string survey_csv;
  auto* s = app.add_subcommand("survey", "span/omega ratios over a generated batch");
  survey_flags.attach(*s);
  s->add_flag("--with-lower-bound", with_lb, "append the r = 1 lower-bound instance");
  s->add_option("--budget", survey_budget, "seconds per exact solve")->capture_default_str();
  s->add_option("--csv", survey_csv, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Exit::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Exit::ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return Exit::io;
  }

  try {
    if (*c) return cmd_colour(colour, out, err);
    if (*x) return cmd_exact(exact, out, err);
    if (*v) return cmd_verify(verify, out, err);
    if (*rz) return cmd_recognize(recognize_path, out);
    if (*m) return cmd_mad(mad_path, mad_host, out);
    if (*g) return cmd_generate(gen_flags, gen_out, out);
    if (*s) return cmd_survey(survey_flags, with_lb, survey_budget, survey_csv, out, err);
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return Exit::rejected;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return Exit::io;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return Exit::io;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return Exit::io;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return Exit::invalid;
  } catch (const std::invalid_argument& e) {
    err << "format error: " << e.what() << '\n';
    return Exit::io;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return Exit::io;
  }
  return Exit::io;
}

}  // namespace bbc::cli
