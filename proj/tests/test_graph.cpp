#include <gtest/gtest.h>

#include <random>

#include "metdim/constructions.hpp"
#include "metdim/graph.hpp"
#include "support/convert.hpp"
#include "support/oracles.hpp"

using namespace metdim;

TEST(Graph, FromEdgesCanonicalizes) {
  const Graph g = Graph::from_edges(4, {{3, 1}, {0, 2}, {1, 0}});
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{0, 2}));
  EXPECT_EQ(g.edges()[2], (Edge{1, 3}));
  EXPECT_TRUE(g.has_edge(3, 1));
  EXPECT_FALSE(g.has_edge(2, 3));
  EXPECT_EQ(g.find_edge(3, 1)->index, 2u);
  EXPECT_FALSE(g.find_edge(2, 3).has_value());
  EXPECT_EQ(g.degree(1), 2u);
}

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(kMaxVertices + 1, {}), std::invalid_argument);
}

TEST(Graph, EqualityIgnoresLabels) {
  const Graph a = path(3);
  const Graph b = path(3).with_labels({"x", "y", "z"});
  EXPECT_EQ(a, b);
  EXPECT_EQ(b.labels().size(), 3u);
  EXPECT_NE(a, cycle(3));
}

TEST(EdgeList, ParsesCommentsAndBlankLines) {
  const Graph g = parse_edge_list("# triangle\n\n3 3\n0 1\n# middle\n1 2\n2 0\n");
  EXPECT_EQ(g, cycle(3));
}

TEST(EdgeList, ReportsLineNumbers) {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_edge_list(text);
    } catch (const EdgeListError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("3 2\n0 1\n1 1\n"), 3u);
  EXPECT_EQ(line_of("3 2\n0 1\n0 5\n"), 3u);
  EXPECT_EQ(line_of("3 3\n0 1\n1 2\n1 0\n"), 4u);
  EXPECT_EQ(line_of("3 x\n"), 1u);
  EXPECT_EQ(line_of("0 0\n"), 1u);
  EXPECT_EQ(line_of("3 1\n0 1\n1 2\n"), 3u);
  EXPECT_EQ(line_of("3 2\n0 1\n"), 3u);
  EXPECT_EQ(line_of("# only a comment\n"), 2u);
}

TEST(EdgeList, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 30)(rng);
    std::bernoulli_distribution coin(0.3);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(u)});
      }
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    const Graph g = Graph::from_edges(n, edges);
    const std::string text = serialize_edge_list(g);
    EXPECT_EQ(parse_edge_list(text), g);
    EXPECT_EQ(serialize_edge_list(parse_edge_list(text)), text);
  }
}

TEST(Distances, MatchFloydWarshallOnRandomGraphs) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = oracle::random_connected(rng, 2, 25, 0.2);
    const Graph g = to_graph(s);
    const auto d = all_pairs_distances(g);
    const auto ref = oracle::floyd_warshall(s);
    for (int u = 0; u < s.n; ++u) {
      for (int v = 0; v < s.n; ++v) ASSERT_EQ(d(u, v), ref[u][v]);
    }
  }
}

TEST(Distances, UnreachableThrows) {
  const Graph g = Graph::from_edges(3, {{0, 1}});
  const auto d = all_pairs_distances(g);
  EXPECT_FALSE(d.connected());
  EXPECT_FALSE(d.reachable(0, 2));
  EXPECT_THROW(d(0, 2), std::domain_error);
  EXPECT_FALSE(is_connected(g));
}

TEST(Distances, EdgeVertexDistanceDiffersByAtMostOne) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = to_graph(oracle::random_connected(rng, 2, 20, 0.3));
    const auto d = all_pairs_distances(g);
    for (std::size_t e = 0; e < g.size(); ++e) {
      const Edge xy = g.edges()[e];
      for (Vertex v = 0; v < g.order(); ++v) {
        const int dx = d(xy.u, v), dy = d(xy.v, v);
        ASSERT_LE(std::abs(dx - dy), 1);
        ASSERT_EQ(edge_vertex_distance(g, d, EdgeRef{e}, v), std::min(dx, dy));
      }
    }
  }
}

TEST(Graph, DiameterOfPathAndCycle) {
  EXPECT_EQ(all_pairs_distances(path(7)).diameter(), 6);
  EXPECT_EQ(all_pairs_distances(cycle(7)).diameter(), 3);
}

namespace {

// Cut vertices by deletion: v is a cut vertex iff removing it disconnects g.
std::vector<Vertex> cut_vertices_by_deletion(const oracle::SimpleGraph& g) {
  std::vector<Vertex> out;
  for (int v = 0; v < g.n; ++v) {
    if (g.n <= 2) break;
    oracle::SimpleGraph h{g.n - 1, {}};
    for (auto [a, b] : g.edges) {
      if (a == v || b == v) continue;
      h.edges.push_back({a > v ? a - 1 : a, b > v ? b - 1 : b});
    }
    if (!oracle::connected(h)) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

}  // namespace

TEST(ArticulationPoints, MatchDeletionOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = oracle::random_connected(rng, 1, 14, 0.25);
    EXPECT_EQ(articulation_points(to_graph(s)), cut_vertices_by_deletion(s));
  }
}

TEST(ArticulationPoints, KnownShapes) {
  EXPECT_EQ(articulation_points(path(4)), (std::vector<Vertex>{1, 2}));
  EXPECT_TRUE(articulation_points(cycle(5)).empty());
  EXPECT_EQ(articulation_points(star(5)), (std::vector<Vertex>{0}));
  EXPECT_THROW(articulation_points(Graph(2)), std::invalid_argument);
}

TEST(InducedSubgraph, KeepsOrderOfVertices) {
  const Graph g = cycle(6);
  const std::vector<Vertex> keep{4, 3, 2};
  const Graph h = induced_subgraph(g, keep);
  EXPECT_EQ(h, path(3));
}
