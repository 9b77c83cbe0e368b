#pragma once

// Core value types: simple undirected graphs, backbone instances, colourings.
//
// Vertices are dense 0-based indices internally; the file formats and the CLI
// use 1-based identifiers and translate at the boundary. Colours are 1-based
// everywhere (0 means "unassigned").

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bbc {

using Vertex = int;
using Colour = int;
using Edge = std::pair<Vertex, Vertex>;

inline Edge normalized(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Thrown when an operation's input does not satisfy its contract (for
/// example a non-chordal host passed to a chordal-only algorithm). `condition`
/// names the violated requirement.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string condition, const std::string& detail)
      : std::invalid_argument(condition + (detail.empty() ? "" : ": " + detail)),
        condition_(std::move(condition)) {}
  explicit PreconditionError(std::string condition)
      : PreconditionError(std::move(condition), "") {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

/// A construction produced something its own certificate check rejects.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Simple undirected graph with sorted adjacency lists. Immutable once built.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
  }

  /// Builds from an edge list; rejects self-loops, parallel edges and
  /// out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::out_of_range("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loop");
      edges_.push_back(normalized(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw std::invalid_argument("parallel edge");
    for (auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  Graph(int n, const std::vector<Edge>& edges) : Graph(n, std::span<const Edge>(edges)) {}

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbours(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

  bool has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
  }

  bool operator==(const Graph& o) const { return adj_.size() == o.adj_.size() && edges_ == o.edges_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

/// Subgraph induced by `keep` (any order, no duplicates). `keep[i]` becomes
/// vertex i of the result.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index.at(keep[i]) = static_cast<int>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  return Graph(static_cast<int>(keep.size()), edges);
}

/// Host graph G, spanning backbone H (E(H) ⊆ E(G)) and gap q ≥ 1.
class BackboneInstance {
 public:
  BackboneInstance() : q_(1) {}

  BackboneInstance(Graph host, Graph backbone, int q)
      : host_(std::move(host)), backbone_(std::move(backbone)), q_(q) {
    if (q_ < 1) throw std::invalid_argument("gap q must be at least 1");
    if (backbone_.vertex_count() != host_.vertex_count())
      throw std::invalid_argument("backbone must span the host vertex set");
    for (auto [u, v] : backbone_.edges())
      if (!host_.has_edge(u, v)) throw std::invalid_argument("backbone edge missing from host");
  }

  BackboneInstance(Graph host, const std::vector<Edge>& backbone_edges, int q)
      : BackboneInstance(host, Graph(host.vertex_count(), backbone_edges), q) {}

  const Graph& host() const noexcept { return host_; }
  const Graph& backbone() const noexcept { return backbone_; }
  int q() const noexcept { return q_; }
  int vertex_count() const noexcept { return host_.vertex_count(); }

  /// Restriction to the vertices in `keep` (both host and backbone induced).
  BackboneInstance induced(std::span<const Vertex> keep) const {
    return BackboneInstance(induced_subgraph(host_, keep), induced_subgraph(backbone_, keep), q_);
  }

  bool operator==(const BackboneInstance& o) const {
    return q_ == o.q_ && host_ == o.host_ && backbone_ == o.backbone_;
  }

 private:
  Graph host_;
  Graph backbone_;
  int q_;
};

/// Vertex colouring with colours 1..span; 0 marks an unassigned vertex.
class Colouring {
 public:
  Colouring() = default;
  explicit Colouring(int n) : colours_(static_cast<std::size_t>(n), 0) {}
  explicit Colouring(std::vector<Colour> colours) : colours_(std::move(colours)) {}

  int size() const noexcept { return static_cast<int>(colours_.size()); }
  Colour operator[](Vertex v) const { return colours_.at(v); }
  void set(Vertex v, Colour c) { colours_.at(v) = c; }

  bool complete() const {
    return std::none_of(colours_.begin(), colours_.end(), [](Colour c) { return c <= 0; });
  }

  /// Maximum assigned colour (0 for the empty colouring).
  Colour span() const {
    return colours_.empty() ? 0 : *std::max_element(colours_.begin(), colours_.end());
  }

  const std::vector<Colour>& values() const noexcept { return colours_; }

  bool operator==(const Colouring&) const = default;

 private:
  std::vector<Colour> colours_;
};

}  // namespace bbc
