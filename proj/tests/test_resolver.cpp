#include <gtest/gtest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "metdim/constructions.hpp"
#include "metdim/resolver.hpp"
#include "support/convert.hpp"
#include "support/oracles.hpp"

using namespace metdim;

namespace {

std::vector<int> as_ints(const LandmarkSet& s) {
  return std::vector<int>(s.begin(), s.end());
}

bool oracle_resolves(const Graph& g, const LandmarkSet& s, Kind kind) {
  const auto sg = from_graph(g);
  return oracle::resolves(sg, oracle::floyd_warshall(sg), as_ints(s), kind == Kind::EdgeMetric);
}

constexpr Kind kKinds[] = {Kind::VertexMetric, Kind::EdgeMetric};

}  // namespace

TEST(LandmarkSet, SortedAndUnique) {
  LandmarkSet s{5, 1, 3};
  EXPECT_EQ(to_string(s), "{1,3,5}");
  EXPECT_TRUE(s.contains(3));
  s.insert(2);
  s.erase(5);
  EXPECT_EQ(to_string(s), "{1,2,3}");
  EXPECT_THROW((LandmarkSet{1, 1}), std::invalid_argument);
  EXPECT_THROW(s.validate(3), std::out_of_range);
  EXPECT_NO_THROW(s.validate(4));
}

TEST(Generator, AgreesWithSignatureMapOracle) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 300; ++trial) {
    const auto sg = oracle::random_connected(rng, 2, 12, 0.35);
    const Graph g = to_graph(sg);
    const auto d = all_pairs_distances(g);
    std::vector<Vertex> ids;
    std::bernoulli_distribution pick(0.3);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (pick(rng)) ids.push_back(v);
    }
    const LandmarkSet s(ids);
    for (Kind kind : kKinds) {
      const auto check = is_generator(g, d, s, kind);
      ASSERT_EQ(check.ok, oracle_resolves(g, s, kind));
      if (!check.ok && g.size() + g.order() > 2) {
        ASSERT_TRUE(check.unresolved.has_value());
        const auto [x, y] = *check.unresolved;
        ASSERT_NE(x, y);
        auto target = [&](std::size_t o) -> Target {
          if (kind == Kind::VertexMetric) return static_cast<Vertex>(o);
          return EdgeRef{o};
        };
        ASSERT_EQ(signature_of(g, d, s, target(x)), signature_of(g, d, s, target(y)));
      }
    }
  }
}

TEST(Generator, DisconnectedGraphThrows) {
  const Graph g = Graph::from_edges(3, {{0, 1}});
  EXPECT_THROW(is_generator(g, all_pairs_distances(g), LandmarkSet{0}, Kind::VertexMetric),
               std::invalid_argument);
  EXPECT_THROW(exact_dimension(g, Kind::VertexMetric), std::invalid_argument);
}

TEST(Greedy, ProducesGeneratorsNoSmallerThanOptimum) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto sg = oracle::random_connected(rng, 2, 10, 0.4);
    const Graph g = to_graph(sg);
    for (Kind kind : kKinds) {
      const auto s = greedy_generator(g, kind);
      ASSERT_TRUE(oracle_resolves(g, s, kind));
      ASSERT_GE(static_cast<int>(s.size()), oracle::brute_dimension(sg, kind == Kind::EdgeMetric));
    }
  }
}

TEST(Greedy, DroppingTheLastAdditionBreaksResolution) {
  // The set before greedy's final addition was not a generator.
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = to_graph(oracle::random_connected(rng, 3, 10, 0.4));
    for (Kind kind : kKinds) {
      const auto s = greedy_generator(g, kind);
      if (s.size() == 0) continue;
      bool some_removal_breaks = false;
      for (Vertex v : s) {
        LandmarkSet smaller = s;
        smaller.erase(v);
        if (!oracle_resolves(g, smaller, kind)) some_removal_breaks = true;
      }
      ASSERT_TRUE(some_removal_breaks) << to_string(s);
    }
  }
}

TEST(ExactDimension, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const auto sg = oracle::random_connected(rng, 1, 11, 0.3);
    const Graph g = to_graph(sg);
    for (Kind kind : kKinds) {
      const auto r = exact_dimension(g, kind);
      const int expected = oracle::brute_dimension(sg, kind == Kind::EdgeMetric);
      ASSERT_EQ(static_cast<int>(r.dimension), expected) << serialize_edge_list(g);
      ASSERT_EQ(r.certificate, Certificate::Certified);
      ASSERT_EQ(r.witness.size(), r.dimension);
      ASSERT_TRUE(oracle_resolves(g, r.witness, kind));
    }
  }
}

TEST(ExactDimension, SameValueWithoutStructuralBounds) {
  std::mt19937_64 rng(14);
  SolveOptions plain;
  plain.structural_bounds = false;
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = to_graph(oracle::random_connected(rng, 2, 12, 0.3));
    for (Kind kind : kKinds) {
      const auto a = exact_dimension(g, kind);
      const auto b = exact_dimension(g, kind, plain);
      ASSERT_EQ(a.dimension, b.dimension);
      ASSERT_EQ(b.lower_bound_source == LowerBoundSource::Exhaustion ||
                    b.lower_bound_source == LowerBoundSource::Trivial,
                true);
    }
  }
}

TEST(ExactDimension, ThreadCountDoesNotChangeTheValue) {
  SolveOptions many;
  many.threads = 4;
  const Graph g = subdivide(complete(7)).graph;
  for (Kind kind : kKinds) {
    const auto a = exact_dimension(g, kind);
    const auto b = exact_dimension(g, kind, many);
    EXPECT_EQ(a.dimension, b.dimension);
    EXPECT_EQ(b.certificate, Certificate::Certified);
    EXPECT_TRUE(oracle_resolves(g, b.witness, kind));
  }
}

TEST(ExactDimension, DeterministicModeRepeatsWitness) {
  SolveOptions det;
  det.deterministic = true;
  const Graph g = torus(4, 4);
  const auto a = exact_dimension(g, Kind::VertexMetric, det);
  const auto b = exact_dimension(g, Kind::VertexMetric, det);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(to_json(a, false), to_json(b, false));
}

TEST(ExactDimension, BudgetGivesUpperBoundWithWitness) {
  SolveOptions tight;
  tight.node_budget = 10;
  const Graph g = subdivide(complete(8)).graph;
  const auto r = exact_dimension(g, Kind::VertexMetric, tight);
  EXPECT_EQ(r.certificate, Certificate::UpperBoundOnly);
  EXPECT_EQ(r.witness.size(), r.dimension);
  EXPECT_TRUE(oracle_resolves(g, r.witness, Kind::VertexMetric));
}

TEST(ExactDimension, TinyGraphs) {
  EXPECT_EQ(exact_dimension(Graph(1), Kind::VertexMetric).dimension, 0u);
  EXPECT_EQ(exact_dimension(path(2), Kind::VertexMetric).dimension, 1u);
  EXPECT_EQ(exact_dimension(path(2), Kind::EdgeMetric).dimension, 0u);
  EXPECT_EQ(exact_dimension(path(3), Kind::EdgeMetric).dimension, 1u);
}

TEST(ExactDimension, JsonKeysInFixedOrder) {
  const auto r = exact_dimension(subdivide(complete(5)).graph, Kind::VertexMetric);
  const auto j = nlohmann::ordered_json::parse(to_json(r, false));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"kind", "dimension", "witness", "certificate", "nodes",
                                            "sets_checked", "millis"}));
  EXPECT_EQ(j["dimension"], 3);
  EXPECT_EQ(j["kind"], "vertex");
  EXPECT_EQ(j["certificate"], "certified");
  EXPECT_EQ(j["millis"], 0);
}

TEST(NaiveOracle, AgreesWithBruteForce) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const auto sg = oracle::random_connected(rng, 1, 9, 0.35);
    const Graph g = to_graph(sg);
    for (Kind kind : kKinds) {
      ASSERT_EQ(static_cast<int>(naive_oracle(g, kind).dimension),
                oracle::brute_dimension(sg, kind == Kind::EdgeMetric));
    }
  }
  EXPECT_THROW(naive_oracle(path(kOracleMaxOrder + 1), Kind::VertexMetric), std::invalid_argument);
}

TEST(Refutation, CountsEverySubsetOfCompleteSubdivision) {
  const Graph g = subdivide(complete(7)).graph;
  const auto r = certify_no_generator_of_size(g, Kind::VertexMetric, 4);
  EXPECT_TRUE(r.refuted);
  EXPECT_EQ(r.sets_refuted, oracle::binomial(28, 4));
  EXPECT_FALSE(r.counterexample.has_value());

  const auto found = certify_no_generator_of_size(g, Kind::VertexMetric, 5);
  EXPECT_FALSE(found.refuted);
  ASSERT_TRUE(found.counterexample.has_value());
  EXPECT_EQ(found.counterexample->size(), 5u);
  EXPECT_TRUE(oracle_resolves(g, *found.counterexample, Kind::VertexMetric));
}

TEST(Refutation, AgreesWithBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 80; ++trial) {
    const auto sg = oracle::random_connected(rng, 2, 10, 0.35);
    const Graph g = to_graph(sg);
    for (Kind kind : kKinds) {
      const int dim = oracle::brute_dimension(sg, kind == Kind::EdgeMetric);
      if (dim == 0) continue;
      const auto below = certify_no_generator_of_size(g, kind, dim - 1);
      ASSERT_TRUE(below.refuted);
      ASSERT_EQ(below.sets_refuted, oracle::binomial(sg.n, dim - 1));
      const auto at = certify_no_generator_of_size(g, kind, dim);
      ASSERT_FALSE(at.refuted);
    }
  }
}

TEST(Refutation, OversizedAndBudget) {
  const Graph g = path(4);
  const auto r = certify_no_generator_of_size(g, Kind::VertexMetric, 5);
  EXPECT_TRUE(r.refuted);
  EXPECT_EQ(r.sets_refuted, 0u);
  EXPECT_THROW(certify_no_generator_of_size(subdivide(complete(8)).graph, Kind::VertexMetric, 5, 5),
               BudgetExhausted);
}

TEST(TwinBound, NeverExceedsDimension) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const auto sg = oracle::random_connected(rng, 2, 10, 0.4);
    const Graph g = to_graph(sg);
    const auto d = all_pairs_distances(g);
    for (Kind kind : kKinds) {
      ASSERT_LE(static_cast<int>(twin_lower_bound(g, d, kind)),
                oracle::brute_dimension(sg, kind == Kind::EdgeMetric));
    }
  }
}

TEST(TwinBound, StarLeavesAreTwins) {
  const Graph g = star(6);
  EXPECT_EQ(twin_lower_bound(g, all_pairs_distances(g), Kind::VertexMetric), 4u);
  EXPECT_EQ(twin_lower_bound(complete(5), all_pairs_distances(complete(5)), Kind::VertexMetric), 4u);
}

TEST(Pieces, BoundFromOneCopyOfChain) {
  const auto layout = chain(4, 6);
  const auto d = all_pairs_distances(layout.graph);
  const auto piece = make_piece(layout.graph, layout.copy_vertices(1), Kind::VertexMetric);
  EXPECT_TRUE(piece.certified);
  EXPECT_EQ(piece.dimension, 5u);
  EXPECT_EQ(piece.boundary.size(), 2u);
  const std::vector<BoundaryPiece> pieces{piece};
  EXPECT_EQ(piece_lower_bound(layout.graph, d, pieces, Kind::VertexMetric), 3u);
}

TEST(Pieces, RejectsInvalidPieces) {
  const auto layout = chain(4, 6);
  const auto d = all_pairs_distances(layout.graph);
  auto piece = make_piece(layout.graph, layout.copy_vertices(1), Kind::VertexMetric);

  auto rejects = [&](std::vector<BoundaryPiece> pieces, Kind kind) {
    EXPECT_THROW(piece_lower_bound(layout.graph, d, pieces, kind), std::invalid_argument);
  };
  rejects({piece}, Kind::EdgeMetric);
  rejects({piece, piece}, Kind::VertexMetric);

  auto uncertified = piece;
  uncertified.certified = false;
  rejects({uncertified}, Kind::VertexMetric);

  auto wrong_boundary = piece;
  wrong_boundary.boundary.pop_back();
  rejects({wrong_boundary}, Kind::VertexMetric);

  // A path through the middle of a cycle is not isometric.
  const Graph c = cycle(8);
  const auto dc = all_pairs_distances(c);
  const auto arc = make_piece(c, {0, 1, 2, 3, 4, 5}, Kind::VertexMetric);
  const std::vector<BoundaryPiece> arcs{arc};
  EXPECT_THROW(piece_lower_bound(c, dc, arcs, Kind::VertexMetric), std::invalid_argument);
}
