#pragma once

// Text formats.
//
// Instance (extended DIMACS):
//   c <comment>
//   p bbc <n> <mG> <mH> <q>      first non-comment line, exactly once
//   e <u> <v>                    host-only edge
//   b <u> <v>                    backbone edge (also a host edge)
// Colouring:
//   s bbc <k>
//   v <vertex> <colour>          one line per vertex
// Vertex ids in files are 1-based.

#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bbc/chordal.hpp"
#include "bbc/graph.hpp"

namespace bbc {

/// Malformed input; `line` is 1-based (0 when not tied to a line).
class FormatError : public std::runtime_error {
 public:
  FormatError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

namespace detail {

inline bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == 'c' && (first + 1 == line.size() || line[first + 1] == ' ' ||
                               line[first + 1] == '\t'))
      continue;
    return true;
  }
  return false;
}

inline long long read_int(std::istringstream& ss, int lineno, const char* what) {
  long long x;
  if (!(ss >> x)) throw FormatError(lineno, std::string("expected ") + what);
  return x;
}

inline void expect_end(std::istringstream& ss, int lineno) {
  std::string rest;
  if (ss >> rest) throw FormatError(lineno, "trailing token '" + rest + "'");
}

}  // namespace detail

inline BackboneInstance parse_instance(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!detail::next_content_line(in, line, lineno)) throw FormatError(0, "missing header");
  std::istringstream hs(line);
  std::string tag, kind;
  hs >> tag >> kind;
  if (tag != "p" || kind != "bbc") throw FormatError(lineno, "expected 'p bbc' header");
  const long long n = detail::read_int(hs, lineno, "vertex count");
  const long long mg = detail::read_int(hs, lineno, "host edge count");
  const long long mh = detail::read_int(hs, lineno, "backbone edge count");
  const long long q = detail::read_int(hs, lineno, "gap q");
  detail::expect_end(hs, lineno);
  if (n < 0 || mg < 0 || mh < 0 || n > 100'000'000) throw FormatError(lineno, "bad header counts");
  if (q < 1) throw FormatError(lineno, "gap q must be at least 1");

  std::set<Edge> host_only, backbone;
  while (detail::next_content_line(in, line, lineno)) {
    std::istringstream ls(line);
    std::string t;
    ls >> t;
    if (t == "p") throw FormatError(lineno, "duplicate header");
    if (t != "e" && t != "b") throw FormatError(lineno, "unknown line type '" + t + "'");
    const long long u = detail::read_int(ls, lineno, "vertex");
    const long long v = detail::read_int(ls, lineno, "vertex");
    detail::expect_end(ls, lineno);
    if (u < 1 || v < 1 || u > n || v > n) throw FormatError(lineno, "vertex index out of range");
    if (u == v) throw FormatError(lineno, "self-loop");
    Edge e = normalized(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    auto& bucket = t == "e" ? host_only : backbone;
    if (!bucket.insert(e).second) throw FormatError(lineno, "duplicate edge");
  }
  std::set<Edge> host(backbone);
  host.insert(host_only.begin(), host_only.end());
  if (static_cast<long long>(host.size()) != mg)
    throw FormatError(0, "header declares " + std::to_string(mg) + " host edges, found " +
                             std::to_string(host.size()));
  if (static_cast<long long>(backbone.size()) != mh)
    throw FormatError(0, "header declares " + std::to_string(mh) + " backbone edges, found " +
                             std::to_string(backbone.size()));
  std::vector<Edge> he(host.begin(), host.end()), be(backbone.begin(), backbone.end());
  const int nn = static_cast<int>(n);
  return BackboneInstance(Graph(nn, he), Graph(nn, be), static_cast<int>(q));
}

inline BackboneInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

/// Canonical form: comments, header, host-only edges, then backbone edges,
/// each block sorted.
inline void write_instance(std::ostream& out, const BackboneInstance& inst,
                           const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) out << "c " << c << '\n';
  const auto& g = inst.host();
  const auto& h = inst.backbone();
  out << "p bbc " << g.vertex_count() << ' ' << g.edge_count() << ' ' << h.edge_count() << ' '
      << inst.q() << '\n';
  for (auto [u, v] : g.edges())
    if (!h.has_edge(u, v)) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  for (auto [u, v] : h.edges()) out << "b " << u + 1 << ' ' << v + 1 << '\n';
}

inline std::string serialize_instance(const BackboneInstance& inst,
                                      const std::vector<std::string>& comments = {}) {
  std::ostringstream out;
  write_instance(out, inst, comments);
  return out.str();
}

inline void write_colouring(std::ostream& out, const Colouring& col) {
  out << "s bbc " << col.span() << '\n';
  for (Vertex v = 0; v < col.size(); ++v) out << "v " << v + 1 << ' ' << col[v] << '\n';
}

inline std::string serialize_colouring(const Colouring& col) {
  std::ostringstream out;
  write_colouring(out, col);
  return out.str();
}

/// Reads a colouring block. `n` is the instance order; every vertex must be
/// coloured exactly once. Lines starting with 'x' (exact-result headers) are
/// skipped so solver output can be verified directly.
inline Colouring parse_colouring(std::istream& in, int n) {
  std::string line;
  int lineno = 0;
  bool header = false;
  Colouring col(n);
  int declared = 0;
  while (detail::next_content_line(in, line, lineno)) {
    std::istringstream ls(line);
    std::string t;
    ls >> t;
    if (t == "x") continue;
    if (t == "s") {
      std::string kind;
      ls >> kind;
      if (kind != "bbc" || header) throw FormatError(lineno, "bad or duplicate 's bbc' line");
      declared = static_cast<int>(detail::read_int(ls, lineno, "span"));
      header = true;
      continue;
    }
    if (t != "v") throw FormatError(lineno, "unknown line type '" + t + "'");
    if (!header) throw FormatError(lineno, "'v' line before 's bbc' header");
    const long long v = detail::read_int(ls, lineno, "vertex");
    const long long c = detail::read_int(ls, lineno, "colour");
    detail::expect_end(ls, lineno);
    if (v < 1 || v > n) throw FormatError(lineno, "vertex index out of range");
    if (c < 1) throw FormatError(lineno, "colours are positive integers");
    if (col[static_cast<Vertex>(v - 1)] != 0) throw FormatError(lineno, "vertex coloured twice");
    col.set(static_cast<Vertex>(v - 1), static_cast<Colour>(c));
  }
  if (!header) throw FormatError(0, "missing 's bbc' header");
  if (!col.complete()) throw FormatError(0, "colouring does not cover every vertex");
  if (col.span() != declared)
    throw FormatError(0, "declared span " + std::to_string(declared) + " but maximum colour is " +
                             std::to_string(col.span()));
  return col;
}

inline Colouring parse_colouring(const std::string& text, int n) {
  std::istringstream in(text);
  return parse_colouring(in, n);
}

/// Debug dump, one line per bag: `t <id> <parent|-> : v1 v2 ...` (1-based).
inline void write_decomposition(std::ostream& out, const SmoothTreeDecomposition& s) {
  for (int v = 0; v < s.size(); ++v) {
    out << "t " << v + 1 << ' ';
    if (s.parent[v] < 0)
      out << '-';
    else
      out << s.parent[v] + 1;
    out << " :";
    for (Vertex x : s.bags[v]) out << ' ' << x + 1;
    out << '\n';
  }
}

}  // namespace bbc
