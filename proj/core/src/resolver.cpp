#include "metdim/resolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "pair_table.hpp"

namespace metdim {

std::string_view to_string(Kind kind) {
  return kind == Kind::VertexMetric ? "vertex" : "edge";
}

std::string_view to_string(Certificate c) {
  return c == Certificate::Certified ? "certified" : "upper_bound_only";
}

std::string_view to_string(LowerBoundSource s) {
  switch (s) {
    case LowerBoundSource::Trivial: return "trivial";
    case LowerBoundSource::Exhaustion: return "exhaustion";
    case LowerBoundSource::Twins: return "twins";
    case LowerBoundSource::Pieces: return "pieces";
  }
  return "unknown";
}

std::size_t object_count(const Graph& g, Kind kind) {
  return kind == Kind::VertexMetric ? g.order() : g.size();
}

LandmarkSet::LandmarkSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
    throw std::invalid_argument("landmark set contains a repeated vertex");
  }
}

bool LandmarkSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

void LandmarkSet::insert(Vertex v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void LandmarkSet::erase(Vertex v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it != ids_.end() && *it == v) ids_.erase(it);
}

void LandmarkSet::validate(std::size_t n) const {
  if (!ids_.empty() && ids_.back() >= n) {
    throw std::out_of_range("landmark " + std::to_string(ids_.back()) +
                            " is not a vertex of a graph of order " + std::to_string(n));
  }
}

std::string to_string(const LandmarkSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

namespace {

DistanceMatrix::Dist distance_to(const Graph& g, const DistanceMatrix& d, Vertex landmark,
                                 const Target& target) {
  if (const auto* v = std::get_if<Vertex>(&target)) return d(landmark, *v);
  return edge_vertex_distance(g, d, std::get<EdgeRef>(target), landmark);
}

}  // namespace

Signature signature_of(const Graph& g, const DistanceMatrix& d, const LandmarkSet& s,
                       Target target) {
  s.validate(g.order());
  Signature sig;
  sig.reserve(s.size());
  for (Vertex l : s) sig.push_back(distance_to(g, d, l, target));
  return sig;
}

GeneratorCheck is_generator(const Graph& g, const DistanceMatrix& d, const LandmarkSet& s,
                            Kind kind) {
  detail::require_connected(g, "is_generator");
  s.validate(g.order());
  const std::size_t objects = object_count(g, kind);
  const std::size_t k = s.size();

  // Row o holds the signature of object o.
  std::vector<DistanceMatrix::Dist> sigs(objects * k);
  for (std::size_t o = 0; o < objects; ++o) {
    const Target t = kind == Kind::VertexMetric ? Target{static_cast<Vertex>(o)}
                                                : Target{EdgeRef{o}};
    for (std::size_t i = 0; i < k; ++i) sigs[o * k + i] = distance_to(g, d, s[i], t);
  }
  auto sig = [&](std::size_t o) {
    return std::span<const DistanceMatrix::Dist>(sigs).subspan(o * k, k);
  };

  std::vector<std::size_t> order(objects);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto sa = sig(a);
    auto sb = sig(b);
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    auto sa = sig(order[i - 1]);
    auto sb = sig(order[i]);
    if (std::equal(sa.begin(), sa.end(), sb.begin(), sb.end())) {
      return {false, std::pair{order[i - 1], order[i]}};
    }
  }
  return {true, std::nullopt};
}

LandmarkSet greedy_generator(const Graph& g, const DistanceMatrix& d, Kind kind) {
  return greedy_completion(g, d, kind, {});
}

LandmarkSet greedy_completion(const Graph& g, const DistanceMatrix& d, Kind kind,
                              LandmarkSet seed) {
  detail::require_connected(g, "greedy_generator");
  seed.validate(g.order());
  const auto od = detail::ObjectDistances::build(g, d, kind);
  const std::size_t n = g.order();

  std::vector<std::vector<std::uint32_t>> classes;
  if (od.objects() >= 2) {
    classes.emplace_back(od.objects());
    std::iota(classes[0].begin(), classes[0].end(), 0u);
  }
  std::vector<std::uint32_t> bucket(std::size_t{d.diameter()} + 2, 0);
  std::vector<char> chosen(n, 0);
  LandmarkSet result;

  // Splits every class by distance to `landmark`, dropping singletons.
  auto refine = [&](Vertex landmark) {
    std::vector<std::vector<std::uint32_t>> next;
    for (auto& cls : classes) {
      std::stable_sort(cls.begin(), cls.end(), [&](std::uint32_t a, std::uint32_t b) {
        return od.at(a, landmark) < od.at(b, landmark);
      });
      std::size_t start = 0;
      for (std::size_t i = 1; i <= cls.size(); ++i) {
        if (i == cls.size() || od.at(cls[i], landmark) != od.at(cls[start], landmark)) {
          if (i - start >= 2) next.emplace_back(cls.begin() + start, cls.begin() + i);
          start = i;
        }
      }
    }
    classes = std::move(next);
    chosen[landmark] = 1;
    result.insert(landmark);
  };
  for (Vertex v : seed) refine(v);

  auto pairs = [](std::uint64_t c) { return c * (c - 1) / 2; };

  while (!classes.empty()) {
    std::uint64_t best_gain = 0;
    Vertex best = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (chosen[v]) continue;
      std::uint64_t gain = 0;
      for (const auto& cls : classes) {
        std::uint64_t within = 0;
        for (auto o : cls) within += bucket[od.at(o, v)]++;
        for (auto o : cls) bucket[od.at(o, v)] = 0;
        gain += pairs(cls.size()) - within;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    if (best_gain == 0) throw std::logic_error("greedy_generator: no vertex makes progress");
    refine(best);
  }
  return result;
}

LandmarkSet greedy_generator(const Graph& g, Kind kind) {
  return greedy_generator(g, all_pairs_distances(g), kind);
}

namespace detail {

std::size_t twin_bound(const PairTable& pt, std::size_t objects) {
  if (objects < 2) return 0;
  const std::size_t n = pt.vertices();
  std::vector<char> forced(n, 0);
  std::size_t p = 0;
  for (; p < pt.size() && pt.weight(p) <= 1; ++p) {
    if (pt.weight(p) == 1) forced[pt.max_vertex(p)] = 1;
  }
  // Pairs with exactly two separating vertices form a graph that every
  // generator must cover.
  std::set<std::pair<Vertex, Vertex>> links;
  for (; p < pt.size() && pt.weight(p) == 2; ++p) {
    const auto m = pt.mask(p);
    Vertex lo = static_cast<Vertex>(n);
    for (Vertex v = 0; v < n; ++v) {
      if (test_bit(m, v)) {
        lo = v;
        break;
      }
    }
    const Vertex hi = pt.max_vertex(p);
    if (!forced[lo] && !forced[hi]) links.emplace(lo, hi);
  }

  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [a, b] : links) parent[find(a)] = find(b);

  std::vector<std::size_t> comp_vertices(n, 0), comp_edges(n, 0), comp_matching(n, 0);
  std::vector<char> in_link(n, 0), matched(n, 0);
  for (const auto& [a, b] : links) {
    in_link[a] = in_link[b] = 1;
    ++comp_edges[find(a)];
    if (!matched[a] && !matched[b]) {
      matched[a] = matched[b] = 1;
      ++comp_matching[find(a)];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in_link[v]) ++comp_vertices[find(v)];
  }

  std::size_t bound = static_cast<std::size_t>(std::count(forced.begin(), forced.end(), 1));
  for (Vertex r = 0; r < n; ++r) {
    const std::size_t c = comp_vertices[r];
    if (c == 0) continue;
    // A clique needs all but one vertex; otherwise a matching is a valid bound.
    bound += comp_edges[r] == c * (c - 1) / 2 ? c - 1 : comp_matching[r];
  }
  return std::max<std::size_t>(bound, 1);
}

}  // namespace detail

std::size_t twin_lower_bound(const Graph& g, const DistanceMatrix& d, Kind kind) {
  detail::require_connected(g, "twin_lower_bound");
  const auto od = detail::ObjectDistances::build(g, d, kind);
  return detail::twin_bound(detail::PairTable::build(od), od.objects());
}

namespace {

std::vector<Vertex> boundary_of(const Graph& g, std::span<const Vertex> sorted_vertices) {
  std::vector<char> inside(g.order(), 0);
  for (Vertex v : sorted_vertices) inside[v] = 1;
  std::vector<Vertex> boundary;
  for (Vertex v : sorted_vertices) {
    for (Vertex w : g.neighbors(v)) {
      if (!inside[w]) {
        boundary.push_back(v);
        break;
      }
    }
  }
  return boundary;
}

std::vector<Vertex> normalized_piece(const Graph& g, std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw std::invalid_argument("piece lists a vertex twice");
  }
  if (!vertices.empty() && vertices.back() >= g.order()) {
    throw std::invalid_argument("piece vertex out of range");
  }
  return vertices;
}

}  // namespace

BoundaryPiece make_piece(const Graph& g, std::vector<Vertex> vertices, Kind kind,
                         const SolveOptions& options) {
  BoundaryPiece piece;
  piece.kind = kind;
  piece.vertices = normalized_piece(g, std::move(vertices));
  piece.boundary = boundary_of(g, piece.vertices);
  SolveOptions inner = options;
  inner.pieces.clear();
  const auto solved = exact_dimension(induced_subgraph(g, piece.vertices), kind, inner);
  piece.dimension = solved.dimension;
  piece.certified = solved.certificate == Certificate::Certified;
  return piece;
}

std::size_t piece_lower_bound(const Graph& g, const DistanceMatrix& d,
                              std::span<const BoundaryPiece> pieces, Kind kind) {
  std::vector<char> used(g.order(), 0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const BoundaryPiece& piece = pieces[i];
    const std::string where = "piece " + std::to_string(i) + ": ";
    if (piece.kind != kind) throw std::invalid_argument(where + "kind does not match");
    if (!piece.certified) throw std::invalid_argument(where + "dimension is not certified");
    const auto vertices = normalized_piece(g, piece.vertices);
    for (Vertex v : vertices) {
      if (used[v]) throw std::invalid_argument(where + "overlaps an earlier piece");
      used[v] = 1;
    }
    if (boundary_of(g, vertices) != piece.boundary) {
      throw std::invalid_argument(where + "boundary does not match the vertices with outside neighbors");
    }
    const auto local = all_pairs_distances(induced_subgraph(g, vertices));
    for (std::size_t a = 0; a < vertices.size(); ++a) {
      for (std::size_t b = 0; b < vertices.size(); ++b) {
        const auto la = static_cast<Vertex>(a);
        const auto lb = static_cast<Vertex>(b);
        if (!local.reachable(la, lb) || local(la, lb) != d(vertices[a], vertices[b])) {
          throw std::invalid_argument(where + "induced subgraph is not isometric in the host");
        }
      }
    }
    if (piece.dimension > piece.boundary.size()) total += piece.dimension - piece.boundary.size();
  }
  return total;
}

std::string to_json(const SolveResult& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(to_string(r.kind));
  j["dimension"] = r.dimension;
  j["witness"] = std::vector<Vertex>(r.witness.begin(), r.witness.end());
  j["certificate"] = std::string(to_string(r.certificate));
  j["nodes"] = r.stats.nodes;
  j["sets_checked"] = r.stats.sets_checked;
  j["millis"] = include_timing ? std::round(r.stats.millis * 1000.0) / 1000.0 : 0.0;
  return j.dump();
}

}  // namespace metdim
