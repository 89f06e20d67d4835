#include <algorithm>
#include <chrono>
#include <set>

#include "metdim/resolver.hpp"

namespace metdim {

namespace {

// Distance table rebuilt from the matrix without sharing any solver code.
std::vector<std::vector<int>> object_rows(const Graph& g, const DistanceMatrix& d, Kind kind) {
  std::vector<std::vector<int>> rows;
  if (kind == Kind::VertexMetric) {
    for (Vertex o = 0; o < g.order(); ++o) {
      std::vector<int> row;
      for (Vertex v = 0; v < g.order(); ++v) row.push_back(d(o, v));
      rows.push_back(std::move(row));
    }
  } else {
    for (const Edge& e : g.edges()) {
      std::vector<int> row;
      for (Vertex v = 0; v < g.order(); ++v) row.push_back(std::min<int>(d(e.u, v), d(e.v, v)));
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

bool resolves(const std::vector<std::vector<int>>& rows, const std::vector<Vertex>& subset) {
  std::set<std::vector<int>> seen;
  for (const auto& row : rows) {
    std::vector<int> sig;
    for (Vertex v : subset) sig.push_back(row[v]);
    if (!seen.insert(std::move(sig)).second) return false;
  }
  return true;
}

}  // namespace

SolveResult naive_oracle(const Graph& g, Kind kind) {
  const auto start = std::chrono::steady_clock::now();
  if (g.order() > kOracleMaxOrder) {
    throw std::invalid_argument("naive_oracle: graph order " + std::to_string(g.order()) +
                                " exceeds " + std::to_string(kOracleMaxOrder));
  }
  if (!is_connected(g)) throw std::invalid_argument("naive_oracle: graph is disconnected");

  const auto rows = object_rows(g, all_pairs_distances(g), kind);
  const std::size_t n = g.order();
  SolveResult result;
  result.kind = kind;
  result.certificate = Certificate::Certified;
  result.lower_bound_source = LowerBoundSource::Exhaustion;

  for (std::size_t size = 0; size <= n; ++size) {
    // Bitmask walk over all size-subsets in lexicographic order.
    std::vector<char> pick(n, 0);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), 1);
    do {
      std::vector<Vertex> subset;
      for (Vertex v = 0; v < n; ++v) {
        if (pick[v]) subset.push_back(v);
      }
      ++result.stats.sets_checked;
      if (resolves(rows, subset)) {
        result.dimension = size;
        result.lower_bound = size;
        result.witness = LandmarkSet(std::move(subset));
        result.stats.millis =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        return result;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  throw std::logic_error("naive_oracle: vertex set failed to resolve");
}

}  // namespace metdim
