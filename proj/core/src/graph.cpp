#include "metdim/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace metdim {

EdgeListError::EdgeListError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph::Graph(std::size_t n) {
  if (n > kMaxVertices) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " exceeds cap of " +
                                std::to_string(kMaxVertices));
  }
  adjacency_.resize(n);
}

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  Graph g(n);
  for (Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->u) + "," +
                                std::to_string(dup->v) + ")");
  }
  for (const Edge& e : edges) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  g.edges_ = std::move(edges);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<EdgeRef> Graph::find_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return EdgeRef{static_cast<std::size_t>(it - edges_.begin())};
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != order()) {
    throw std::invalid_argument("label count does not match graph order");
  }
  Graph copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<Dist> table)
    : n_(n), table_(std::move(table)) {
  if (table_.size() != n_ * n_) throw std::invalid_argument("distance table has wrong size");
}

DistanceMatrix::Dist DistanceMatrix::operator()(Vertex u, Vertex v) const {
  const Dist d = raw(u, v);
  if (d == kUnreachable) {
    throw std::domain_error("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                            " are not connected");
  }
  return d;
}

bool DistanceMatrix::connected() const noexcept {
  return std::find(table_.begin(), table_.end(), kUnreachable) == table_.end();
}

DistanceMatrix::Dist DistanceMatrix::diameter() const noexcept {
  Dist best = 0;
  for (Dist d : table_) {
    if (d != kUnreachable) best = std::max(best, d);
  }
  return best;
}

namespace {

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

// Parses all whitespace-separated unsigned integers of a line.
std::optional<std::vector<std::uint64_t>> parse_numbers(std::string_view line) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (true) {
    pos = line.find_first_not_of(" \t\r", pos);
    if (pos == std::string_view::npos) break;
    const std::size_t end = std::min(line.find_first_of(" \t\r", pos), line.size());
    std::uint64_t value = 0;
    const char* first = line.data() + pos;
    const char* last = line.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    out.push_back(value);
    pos = end;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> n;
  std::size_t expected_edges = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (!line.empty() && line.front() == '#') continue;
    if (is_blank(line)) continue;

    auto numbers = parse_numbers(line);
    if (!n) {
      if (!numbers || numbers->size() != 2) {
        throw EdgeListError(line_no, "malformed header, expected \"n m\"");
      }
      if ((*numbers)[0] == 0) throw EdgeListError(line_no, "graph must have at least one vertex");
      if ((*numbers)[0] > kMaxVertices) {
        throw EdgeListError(line_no, "vertex count exceeds cap of " + std::to_string(kMaxVertices));
      }
      n = (*numbers)[0];
      expected_edges = (*numbers)[1];
      continue;
    }
    if (edges.size() == expected_edges) {
      throw EdgeListError(line_no, "more edge lines than the " + std::to_string(expected_edges) +
                                       " declared in the header");
    }
    if (!numbers || numbers->size() != 2) {
      throw EdgeListError(line_no, "malformed edge line, expected \"u v\"");
    }
    const auto u = (*numbers)[0];
    const auto v = (*numbers)[1];
    if (u >= *n || v >= *n) {
      throw EdgeListError(line_no, "edge endpoint out of range [0, " + std::to_string(*n) + ")");
    }
    if (u == v) throw EdgeListError(line_no, "self-loop at vertex " + std::to_string(u));
    edges.push_back({static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))});
    edge_lines.push_back(line_no);
  }

  if (!n) throw EdgeListError(line_no + 1, "missing header line \"n m\"");
  if (edges.size() != expected_edges) {
    throw EdgeListError(line_no + 1, "expected " + std::to_string(expected_edges) +
                                         " edge lines, found " + std::to_string(edges.size()));
  }

  // Report duplicates against the line of the second occurrence.
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      throw EdgeListError(edge_lines[order[i]], "duplicate edge");
    }
  }
  return Graph::from_edges(*n, std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<DistanceMatrix::Dist> table(n * n, DistanceMatrix::kUnreachable);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    auto* row = table.data() + std::size_t{s} * n;
    row[s] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex u = queue[head++];
      for (Vertex w : g.neighbors(u)) {
        if (row[w] == DistanceMatrix::kUnreachable) {
          row[w] = static_cast<DistanceMatrix::Dist>(row[u] + 1);
          queue[tail++] = w;
        }
      }
    }
  }
  return DistanceMatrix(n, std::move(table));
}

DistanceMatrix::Dist edge_vertex_distance(const Graph& g, const DistanceMatrix& d, EdgeRef e,
                                          Vertex v) {
  const Edge& xy = g.edge(e);
  return std::min(d(xy.u, v), d(xy.v, v));
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

std::vector<Vertex> articulation_points(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("articulation_points: graph is disconnected");
  const std::size_t n = g.order();
  if (n == 0) return {};

  // Iterative Tarjan lowpoint DFS.
  constexpr std::uint32_t kUnset = 0xFFFFFFFFu;
  std::vector<std::uint32_t> disc(n, kUnset), low(n, 0);
  std::vector<Vertex> parent(n, static_cast<Vertex>(n));
  std::vector<std::size_t> next_child(n, 0);
  std::vector<char> is_cut(n, 0);
  std::uint32_t timer = 0;
  std::size_t root_children = 0;

  std::vector<Vertex> stack{0};
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    auto nbrs = g.neighbors(u);
    if (next_child[u] < nbrs.size()) {
      const Vertex w = nbrs[next_child[u]++];
      if (disc[w] == kUnset) {
        parent[w] = u;
        disc[w] = low[w] = timer++;
        if (u == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[u]) {
        low[u] = std::min(low[u], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    if (u != 0) {
      const Vertex p = parent[u];
      low[p] = std::min(low[p], low[u]);
      if (p != 0 && low[u] >= disc[p]) is_cut[p] = 1;
    }
  }
  if (root_children > 1) is_cut[0] = 1;

  std::vector<Vertex> cuts;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) cuts.push_back(v);
  }
  return cuts;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::int64_t> local(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.order()) throw std::invalid_argument("induced_subgraph: vertex out of range");
    if (local[vertices[i]] != -1) throw std::invalid_argument("induced_subgraph: repeated vertex");
    local[vertices[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) {
      edges.push_back({static_cast<Vertex>(local[e.u]), static_cast<Vertex>(local[e.v])});
    }
  }
  return Graph::from_edges(vertices.size(), std::move(edges));
}

}  // namespace metdim
