#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "metdim/graph.hpp"
#include "metdim/resolver.hpp"

namespace metdim {

// Graph families. All throw std::invalid_argument on bad parameters.

Graph complete(std::size_t n);
/// K_n minus the matching {01, 23, ..., (2k-2)(2k-1)}. Requires 2k <= n.
Graph complete_minus_matching(std::size_t n, std::size_t k);
/// K_{n-1,1}: center 0 joined to 1..n-1. Requires n >= 2.
Graph star(std::size_t n);
/// Requires n >= 3.
Graph cycle(std::size_t n);
/// Requires n >= 1.
Graph path(std::size_t n);
/// C_a x C_b with (i, j) -> i*b + j. Requires a, b >= 3.
Graph torus(std::size_t a, std::size_t b);

/// Role of a vertex of a subdivision graph, in base-graph ids.
struct VertexRole {
  enum class Type { Original, Midpoint };
  Type type = Type::Original;
  Vertex i = 0;  // the original vertex, or the smaller end of the split edge
  Vertex j = 0;  // larger end of the split edge (Midpoint only)
  bool operator==(const VertexRole&) const = default;
};

/// Vertex roles of S(G). Originals keep their base ids; the midpoint of
/// base edge e gets id n + e.index.
class SubdivisionLabeling {
 public:
  explicit SubdivisionLabeling(Graph base);

  const Graph& base() const noexcept { return base_; }
  std::size_t order() const noexcept { return base_.order() + base_.size(); }
  VertexRole role(Vertex v) const;

  Vertex original(Vertex i) const;
  /// Midpoint of base edge ij, if that edge exists.
  std::optional<Vertex> midpoint(Vertex i, Vertex j) const;
  Vertex midpoint(EdgeRef e) const;

 private:
  Graph base_;
};

struct Subdivision {
  Graph graph;
  SubdivisionLabeling labeling;
};

/// Replaces every edge uv by a path u - x_uv - v.
Subdivision subdivide(const Graph& g);

/// Path a - b - c with middle vertex b.
struct P3 {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;
  bool operator==(const P3&) const = default;
};
using P3Packing = std::vector<P3>;

/// `count` vertex-disjoint paths on three vertices, by backtracking over
/// middle vertices in order of decreasing degree. nullopt only after the
/// search is exhausted.
std::optional<P3Packing> find_p3_packing(const Graph& g, std::size_t count);

/// Throws std::invalid_argument unless every triple is a path of g and the
/// triples are pairwise disjoint.
void validate_packing(const Graph& g, const P3Packing& packing);

/// The builders below use the first floor(n/3) or floor((n-1)/3) paths of the
/// packing and ignore the rest; fewer paths throw std::invalid_argument.

/// A landmark set on S(G) together with the numbering it was built from:
/// numbering[p] is the base vertex placed at position p + 1. Packed triples
/// fill positions 1..3t in order; the remaining vertices follow by id.
struct BuiltGenerator {
  LandmarkSet landmarks;
  std::vector<Vertex> numbering;
};

/// Metric generator of S(G) with ceil(2n/3) landmarks from floor(n/3)
/// disjoint paths: both midpoints of every packed path, plus the last
/// position if n = 1 (mod 3) or the last two if n = 2 (mod 3).
BuiltGenerator packing_metric_generator(const SubdivisionLabeling& labeling,
                                        const P3Packing& packing);

/// Edge metric generator of S(G) with ceil((2n-2)/3) landmarks from
/// floor((n-1)/3) disjoint paths. The last position is never used and is
/// never adjacent to a landmark.
BuiltGenerator packing_edge_generator(const SubdivisionLabeling& labeling,
                                      const P3Packing& packing);

/// Smallest q with edim(S(K_q)) = c1 and dim(S(K_q)) = c1 + 1 among
/// q = 3t + 1 (c1 = 2t) and q = 3t + 2 (c1 = 2t + 1, t >= 2).
/// Rejects c1 in {0, 1, 3}.
std::size_t complete_order_for_edim(std::size_t c1);

struct ChainCopy {
  Vertex offset = 0;  // host id of local vertex 0
  SubdivisionLabeling labeling;
};

/// k = c2 - c1 subdivided complete graphs joined in a row. Copies 1..k-1
/// are S(K_7), copy k is S(K_q). Junction i joins x^i_{1,2} to x^{i+1}_{2,3}
/// and x^i_{4,5} to x^{i+1}_{5,6}.
///
/// Copy and vertex indices in the accessors are 1-based, matching the
/// x^i_{a,b} / v^i_a naming of the construction.
struct ChainLayout {
  Graph graph;
  std::size_t c1 = 0;
  std::size_t c2 = 0;
  std::size_t k = 0;
  std::size_t q = 0;
  std::vector<ChainCopy> copies;
  std::vector<Edge> connectors;

  Vertex original(std::size_t copy, Vertex a) const;
  Vertex midpoint(std::size_t copy, Vertex a, Vertex b) const;
  std::vector<Vertex> copy_vertices(std::size_t copy) const;
};

/// Requires c1 >= 4 and c2 >= c1 + 2.
ChainLayout chain(std::size_t c1, std::size_t c2);

struct ChainCandidate {
  LandmarkSet landmarks;
  /// True when the composed set failed the checker and greedy completion
  /// had to add landmarks.
  bool fallback = false;
};

/// Copy k's edge generator with x^k_{2,3}, x^k_{5,6} swapped for
/// x^1_{2,3}, x^1_{5,6}. Size c1.
ChainCandidate chain_edge_basis_candidate(const ChainLayout& layout);

/// Copy k's metric generator minus x^k_{2,3}, x^k_{5,6}, plus
/// x^1_{2,3}, x^1_{5,6} and v^i_7 for i = 1..k-1. Size c2.
ChainCandidate chain_metric_basis_candidate(const ChainLayout& layout);

/// One piece per copy (or per listed 1-based copy), each certified by an
/// exact solve of the induced copy. Identical copies are solved once.
std::vector<BoundaryPiece> chain_pieces(const ChainLayout& layout, Kind kind,
                                        const SolveOptions& options = {},
                                        std::vector<std::size_t> copies = {});

}  // namespace metdim
