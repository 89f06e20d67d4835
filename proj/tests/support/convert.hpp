#pragma once

#include "metdim/graph.hpp"
#include "oracles.hpp"

inline metdim::Graph to_graph(const oracle::SimpleGraph& g) {
  std::vector<metdim::Edge> edges;
  for (auto [u, v] : g.edges) {
    edges.push_back({static_cast<metdim::Vertex>(u), static_cast<metdim::Vertex>(v)});
  }
  return metdim::Graph::from_edges(static_cast<std::size_t>(g.n), std::move(edges));
}

inline oracle::SimpleGraph from_graph(const metdim::Graph& g) {
  oracle::SimpleGraph s{static_cast<int>(g.order()), {}};
  for (const auto& e : g.edges()) s.edges.push_back({static_cast<int>(e.u), static_cast<int>(e.v)});
  return s;
}
