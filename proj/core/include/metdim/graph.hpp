#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace metdim {

using Vertex = std::uint32_t;

/// Hard cap on graph order. Distances fit in 16 bits with room for a sentinel.
inline constexpr std::size_t kMaxVertices = 4096;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Positional handle into Graph::edges().
struct EdgeRef {
  std::size_t index = 0;
  auto operator<=>(const EdgeRef&) const = default;
};

/// Error while reading the edge-list format. `line` is 1-based.
class EdgeListError : public std::runtime_error {
 public:
  EdgeListError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable once built. The edge list is canonical: every edge is stored
/// as (u, v) with u < v and the list is sorted lexicographically, so an
/// EdgeRef names the same edge on every run. Adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Builds from an arbitrary edge list. Endpoints may come in either
  /// order. Throws std::invalid_argument on self-loops, duplicate edges,
  /// out-of-range endpoints or n > kMaxVertices.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeRef e) const { return edges_.at(e.index); }

  bool has_edge(Vertex u, Vertex v) const;
  /// Index of edge uv in the canonical list, if present.
  std::optional<EdgeRef> find_edge(Vertex u, Vertex v) const;

  /// Optional free-text vertex labels; empty when none were attached.
  std::span<const std::string> labels() const noexcept { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;

  /// Structural equality (labels are ignored).
  bool operator==(const Graph& other) const {
    return adjacency_.size() == other.adjacency_.size() && edges_ == other.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

/// All-pairs hop distances.
class DistanceMatrix {
 public:
  using Dist = std::uint16_t;
  static constexpr Dist kUnreachable = 0xFFFF;

  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<Dist> table);

  std::size_t order() const noexcept { return n_; }
  bool reachable(Vertex u, Vertex v) const { return raw(u, v) != kUnreachable; }

  /// Distance between u and v. Throws std::domain_error if v is not
  /// reachable from u, so the sentinel never leaks into arithmetic.
  Dist operator()(Vertex u, Vertex v) const;

  /// Row of raw entries (may contain kUnreachable).
  std::span<const Dist> row(Vertex u) const {
    return std::span<const Dist>(table_).subspan(std::size_t{u} * n_, n_);
  }
  bool connected() const noexcept;
  /// Largest finite distance.
  Dist diameter() const noexcept;

  bool operator==(const DistanceMatrix&) const = default;

 private:
  Dist raw(Vertex u, Vertex v) const { return table_.at(std::size_t{u} * n_ + v); }

  std::size_t n_ = 0;
  std::vector<Dist> table_;
};

Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

/// BFS from every vertex.
DistanceMatrix all_pairs_distances(const Graph& g);

/// d(e, v) = min(d(x, v), d(y, v)) for e = xy.
DistanceMatrix::Dist edge_vertex_distance(const Graph& g, const DistanceMatrix& d,
                                          EdgeRef e, Vertex v);

bool is_connected(const Graph& g);

/// Cut vertices, sorted. Throws std::invalid_argument if g is disconnected.
std::vector<Vertex> articulation_points(const Graph& g);

/// Induced subgraph on `vertices` (any order, no duplicates). Vertex i of the
/// result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace metdim
