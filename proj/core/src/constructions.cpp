#include "metdim/constructions.hpp"

#include <algorithm>
#include <map>

namespace metdim {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

Vertex vid(std::size_t v) { return static_cast<Vertex>(v); }

}  // namespace

Graph complete(std::size_t n) {
  require(n >= 1, "complete(n) requires n >= 1");
  require(n <= kMaxVertices, "complete(n) exceeds the vertex cap");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.push_back({vid(u), vid(v)});
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph complete_minus_matching(std::size_t n, std::size_t k) {
  require(n >= 1, "cmm(n,k) requires n >= 1");
  require(2 * k <= n, "cmm(n,k) requires 2k <= n");
  require(n <= kMaxVertices, "cmm(n,k) exceeds the vertex cap");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const bool deleted = v == u + 1 && u % 2 == 0 && u < 2 * k;
      if (!deleted) edges.push_back({vid(u), vid(v)});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph star(std::size_t n) {
  require(n >= 2, "star(n) requires n >= 2");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.push_back({0, vid(v)});
  return Graph::from_edges(n, std::move(edges));
}

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle(n) requires n >= 3");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.push_back({vid(v), vid((v + 1) % n)});
  return Graph::from_edges(n, std::move(edges));
}

Graph path(std::size_t n) {
  require(n >= 1, "path(n) requires n >= 1");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) edges.push_back({vid(v), vid(v + 1)});
  return Graph::from_edges(n, std::move(edges));
}

Graph torus(std::size_t a, std::size_t b) {
  require(a >= 3 && b >= 3, "torus(a,b) requires a, b >= 3");
  require(a * b <= kMaxVertices, "torus(a,b) exceeds the vertex cap");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      edges.push_back({vid(i * b + j), vid(((i + 1) % a) * b + j)});
      edges.push_back({vid(i * b + j), vid(i * b + (j + 1) % b)});
    }
  }
  return Graph::from_edges(a * b, std::move(edges));
}

SubdivisionLabeling::SubdivisionLabeling(Graph base) : base_(std::move(base)) {}

VertexRole SubdivisionLabeling::role(Vertex v) const {
  if (v < base_.order()) return {VertexRole::Type::Original, v, 0};
  const std::size_t e = v - base_.order();
  if (e >= base_.size()) throw std::out_of_range("vertex is not part of the subdivision");
  const Edge& xy = base_.edges()[e];
  return {VertexRole::Type::Midpoint, xy.u, xy.v};
}

Vertex SubdivisionLabeling::original(Vertex i) const {
  if (i >= base_.order()) throw std::out_of_range("not a base vertex");
  return i;
}

std::optional<Vertex> SubdivisionLabeling::midpoint(Vertex i, Vertex j) const {
  const auto e = base_.find_edge(i, j);
  if (!e) return std::nullopt;
  return midpoint(*e);
}

Vertex SubdivisionLabeling::midpoint(EdgeRef e) const {
  if (e.index >= base_.size()) throw std::out_of_range("not a base edge");
  return vid(base_.order() + e.index);
}

Subdivision subdivide(const Graph& g) {
  const std::size_t n = g.order();
  require(n + g.size() <= kMaxVertices, "subdivision exceeds the vertex cap");
  std::vector<Edge> edges;
  edges.reserve(2 * g.size());
  for (std::size_t e = 0; e < g.size(); ++e) {
    const Edge& xy = g.edges()[e];
    const Vertex x = vid(n + e);
    edges.push_back({xy.u, x});
    edges.push_back({xy.v, x});
  }
  return {Graph::from_edges(n + g.size(), std::move(edges)), SubdivisionLabeling(g)};
}

std::size_t complete_order_for_edim(std::size_t c1) {
  require(c1 >= 2 && c1 != 3,
          "no subdivided complete graph has edim " + std::to_string(c1) +
              " with dim one larger; c1 must be >= 2 and != 3");
  const std::size_t t = c1 / 2;
  return c1 % 2 == 0 ? 3 * t + 1 : 3 * t + 2;
}

// ---------------------------------------------------------------------------
// Chain

Vertex ChainLayout::original(std::size_t copy, Vertex a) const {
  if (copy < 1 || copy > copies.size()) throw std::out_of_range("chain copy index out of range");
  const auto& c = copies[copy - 1];
  return c.offset + c.labeling.original(a - 1);
}

Vertex ChainLayout::midpoint(std::size_t copy, Vertex a, Vertex b) const {
  if (copy < 1 || copy > copies.size()) throw std::out_of_range("chain copy index out of range");
  const auto& c = copies[copy - 1];
  const auto local = c.labeling.midpoint(a - 1, b - 1);
  if (!local) throw std::out_of_range("copy has no such midpoint");
  return c.offset + *local;
}

std::vector<Vertex> ChainLayout::copy_vertices(std::size_t copy) const {
  if (copy < 1 || copy > copies.size()) throw std::out_of_range("chain copy index out of range");
  const auto& c = copies[copy - 1];
  std::vector<Vertex> out(c.labeling.order());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = c.offset + vid(i);
  return out;
}

ChainLayout chain(std::size_t c1, std::size_t c2) {
  require(c1 >= 4 && c2 >= c1 + 2,
          "chain(c1,c2) requires 4 <= c1 and c1 + 2 <= c2 (got " + std::to_string(c1) + "," +
              std::to_string(c2) + ")");
  ChainLayout layout;
  layout.c1 = c1;
  layout.c2 = c2;
  layout.k = c2 - c1;
  layout.q = complete_order_for_edim(c1);

  std::vector<Edge> edges;
  Vertex offset = 0;
  for (std::size_t i = 1; i <= layout.k; ++i) {
    const auto piece = subdivide(complete(i < layout.k ? 7 : layout.q));
    require(offset + piece.graph.order() <= kMaxVertices, "chain exceeds the vertex cap");
    for (const Edge& e : piece.graph.edges()) edges.push_back({offset + e.u, offset + e.v});
    layout.copies.push_back({offset, piece.labeling});
    offset += vid(piece.graph.order());
  }
  for (std::size_t i = 1; i < layout.k; ++i) {
    layout.connectors.push_back({layout.midpoint(i, 1, 2), layout.midpoint(i + 1, 2, 3)});
    layout.connectors.push_back({layout.midpoint(i, 4, 5), layout.midpoint(i + 1, 5, 6)});
  }
  edges.insert(edges.end(), layout.connectors.begin(), layout.connectors.end());
  layout.graph = Graph::from_edges(offset, std::move(edges));
  return layout;
}

namespace {

// Consecutive triples (1,2,3), (4,5,6), ... of a complete base graph.
P3Packing consecutive_packing(std::size_t n) {
  P3Packing packing;
  for (std::size_t t = 0; 3 * t + 2 < n; ++t) {
    packing.push_back({vid(3 * t), vid(3 * t + 1), vid(3 * t + 2)});
  }
  return packing;
}

std::vector<Vertex> last_copy_landmarks(const ChainLayout& layout, bool edge_kind) {
  const auto& last = layout.copies.back();
  const auto packing = consecutive_packing(layout.q);
  const auto built = edge_kind ? packing_edge_generator(last.labeling, packing)
                               : packing_metric_generator(last.labeling, packing);
  const Vertex drop_a = layout.midpoint(layout.k, 2, 3);
  const Vertex drop_b = layout.midpoint(layout.k, 5, 6);
  std::vector<Vertex> ids;
  for (Vertex v : built.landmarks) {
    const Vertex host = last.offset + v;
    if (host != drop_a && host != drop_b) ids.push_back(host);
  }
  return ids;
}

ChainCandidate validated(const ChainLayout& layout, std::vector<Vertex> ids, Kind kind) {
  ChainCandidate out;
  out.landmarks = LandmarkSet(std::move(ids));
  const auto d = all_pairs_distances(layout.graph);
  if (!is_generator(layout.graph, d, out.landmarks, kind)) {
    out.landmarks = greedy_completion(layout.graph, d, kind, out.landmarks);
    out.fallback = true;
  }
  return out;
}

}  // namespace

ChainCandidate chain_edge_basis_candidate(const ChainLayout& layout) {
  auto ids = last_copy_landmarks(layout, true);
  ids.push_back(layout.midpoint(1, 2, 3));
  ids.push_back(layout.midpoint(1, 5, 6));
  return validated(layout, std::move(ids), Kind::EdgeMetric);
}

ChainCandidate chain_metric_basis_candidate(const ChainLayout& layout) {
  auto ids = last_copy_landmarks(layout, false);
  ids.push_back(layout.midpoint(1, 2, 3));
  ids.push_back(layout.midpoint(1, 5, 6));
  for (std::size_t i = 1; i < layout.k; ++i) ids.push_back(layout.original(i, 7));
  return validated(layout, std::move(ids), Kind::VertexMetric);
}

std::vector<BoundaryPiece> chain_pieces(const ChainLayout& layout, Kind kind,
                                        const SolveOptions& options,
                                        std::vector<std::size_t> copies) {
  if (copies.empty()) {
    for (std::size_t i = 1; i <= layout.k; ++i) copies.push_back(i);
  }
  SolveOptions inner = options;
  inner.pieces.clear();

  // Copies built from the same complete graph induce identical subgraphs.
  std::map<std::size_t, std::pair<Graph, SolveResult>> solved;
  std::vector<BoundaryPiece> pieces;
  for (std::size_t copy : copies) {
    auto vertices = layout.copy_vertices(copy);
    const Graph induced = induced_subgraph(layout.graph, vertices);
    const std::size_t base = layout.copies.at(copy - 1).labeling.base().order();
    auto it = solved.find(base);
    if (it == solved.end() || !(it->second.first == induced)) {
      it = solved.insert_or_assign(base, std::pair{induced, exact_dimension(induced, kind, inner)})
               .first;
    }
    BoundaryPiece piece;
    piece.kind = kind;
    piece.vertices = vertices;
    for (Vertex v : vertices) {
      for (Vertex w : layout.graph.neighbors(v)) {
        if (w < vertices.front() || w > vertices.back()) {
          piece.boundary.push_back(v);
          break;
        }
      }
    }
    piece.dimension = it->second.second.dimension;
    piece.certified = it->second.second.certificate == Certificate::Certified;
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

}  // namespace metdim
