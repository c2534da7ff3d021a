#include "ddom/graph.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ddom/errors.h"
#include "ddom/generators.h"
#include "oracle.h"

namespace ddom {
namespace {

Graph path(std::size_t n) { return named_graph("path", n); }
Graph cycle(std::size_t n) { return named_graph("cycle", n); }

TEST(GraphTest, BuildsSortedSymmetricAdjacency) {
  Graph g = Graph::from_edges(4, {{2, 0}, {0, 1}, {3, 0}});
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g.num_edges(), 3u);
  auto nb = g.neighbors(0);
  EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(g.has_edge(3, 0));
  EXPECT_FALSE(g.has_edge(1, 2));
  EXPECT_EQ(g.max_degree(), 3u);
  EXPECT_EQ(g.min_degree(), 1u);
}

TEST(GraphTest, RejectsBadEdges) {
  EXPECT_THROW(Graph::from_edges(2, {{0, 0}}), InputError);
  EXPECT_THROW(Graph::from_edges(2, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph::from_edges(2, {{0, 2}}), InputError);
}

TEST(NeighborhoodTest, ClosedNeighborhood) {
  EXPECT_EQ(neighbors_closed(path(3), 1), (VertexSet{0, 1, 2}));
  EXPECT_EQ(neighbors_closed(path(2), 0), (VertexSet{0, 1}));
  EXPECT_EQ(neighbors_closed(cycle(4), 0), (VertexSet{0, 1, 3}));
  EXPECT_THROW(neighbors_closed(path(3), 3), InputError);
}

TEST(NeighborhoodTest, SecondNeighborhood) {
  EXPECT_EQ(second_neighborhood(path(4), 0), (VertexSet{2}));
  EXPECT_EQ(second_neighborhood(cycle(4), 0), (VertexSet{2}));
  EXPECT_TRUE(second_neighborhood(named_graph("complete", 3), 0).empty());
  EXPECT_THROW(second_neighborhood(path(3), 7), InputError);
}

TEST(DistanceTest, MatrixMatchesDefinition) {
  Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
  DistanceMatrix d(g);
  EXPECT_EQ(d(0, 0), 0);
  EXPECT_EQ(d(0, 2), 2);
  EXPECT_EQ(d(2, 0), 2);
  EXPECT_EQ(d(0, 3), kUnreachable);
  EXPECT_EQ(d(3, 4), 1);
}

TEST(VerifierTest, DisjunctiveExamples) {
  EXPECT_FALSE(is_disjunctive_dominating(path(4), VertexSet{1}, 2));
  EXPECT_TRUE(is_disjunctive_dominating(named_graph("star", 5), VertexSet{0}, 2));
  EXPECT_TRUE(is_disjunctive_dominating(cycle(6), VertexSet{0, 3}, 2));
  // b = 1 is distance-two domination.
  EXPECT_TRUE(is_disjunctive_dominating(path(4), VertexSet{1}, 1));
  EXPECT_THROW(is_disjunctive_dominating(path(4), VertexSet{1}, 0), InputError);
  EXPECT_THROW(is_disjunctive_dominating(path(4), VertexSet{4}, 2), InputError);
}

TEST(VerifierTest, OtherProblems) {
  EXPECT_TRUE(is_dominating(path(3), VertexSet{1}));
  EXPECT_FALSE(is_dominating(path(4), VertexSet{1}));
  EXPECT_TRUE(is_two_dominating(cycle(4), VertexSet{0, 2}));
  EXPECT_FALSE(is_two_dominating(cycle(4), VertexSet{0, 1}));
  EXPECT_TRUE(is_vertex_cover(path(4), VertexSet{1, 2}));
  EXPECT_FALSE(is_vertex_cover(path(4), VertexSet{1}));
}

TEST(VerifierTest, TrivialSizes) {
  Graph empty(0);
  EXPECT_TRUE(is_disjunctive_dominating(empty, VertexSet{}, 2));
  Graph single(1);
  EXPECT_FALSE(is_disjunctive_dominating(single, VertexSet{}, 2));
  EXPECT_TRUE(is_disjunctive_dominating(single, VertexSet{0}, 2));
}

// Random graphs of mixed density, including disconnected ones.
std::vector<Graph> sample_graphs(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng.below(9);
    const double p = 0.15 + 0.7 * rng.unit();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng.unit() < p) edges.emplace_back(u, v);
      }
    }
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

VertexSet random_subset(std::size_t n, Rng& rng) {
  std::vector<Vertex> s;
  for (Vertex v = 0; v < n; ++v) {
    if (rng.below(3) == 0) s.push_back(v);
  }
  return VertexSet(std::move(s));
}

TEST(VerifierProperty, SecondNeighborhoodDisjointFromClosed) {
  for (const Graph& g : sample_graphs(200, 11)) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      auto closed = neighbors_closed(g, v);
      for (Vertex u : second_neighborhood(g, v)) EXPECT_FALSE(closed.contains(u));
    }
  }
}

TEST(VerifierProperty, FullSetMonotonicityAndHierarchy) {
  Rng rng(5);
  for (const Graph& g : sample_graphs(300, 12)) {
    const std::size_t n = g.num_vertices();
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    for (int b = 1; b <= 4; ++b) EXPECT_TRUE(is_disjunctive_dominating(g, VertexSet(all), b));

    VertexSet d = random_subset(n, rng);
    for (int b = 1; b <= 3; ++b) {
      const bool ok = is_disjunctive_dominating(g, d, b);
      if (ok) {
        VertexSet bigger = d;
        bigger.insert(static_cast<Vertex>(rng.below(n)));
        EXPECT_TRUE(is_disjunctive_dominating(g, bigger, b));
      }
      if (ok && b >= 2) EXPECT_TRUE(is_disjunctive_dominating(g, d, b - 1));
    }
  }
}

TEST(VerifierProperty, AgreesWithDistanceMatrixOracle) {
  Rng rng(99);
  for (const Graph& g : sample_graphs(400, 13)) {
    for (int trial = 0; trial < 4; ++trial) {
      VertexSet s = random_subset(g.num_vertices(), rng);
      for (int b = 1; b <= 3; ++b) {
        EXPECT_EQ(is_disjunctive_dominating(g, s, b), oracle::satisfies(g, oracle::Kind::kDisjunctive, s, b));
      }
      EXPECT_EQ(is_dominating(g, s), oracle::satisfies(g, oracle::Kind::kDomination, s));
      EXPECT_EQ(is_two_dominating(g, s), oracle::satisfies(g, oracle::Kind::kTwoDomination, s));
      EXPECT_EQ(is_vertex_cover(g, s), oracle::satisfies(g, oracle::Kind::kVertexCover, s));
    }
  }
}

TEST(EdgeListTest, ParsesExamples) {
  EXPECT_EQ(parse_graph("p 2 1\ne 0 1"), path(2));
  EXPECT_EQ(parse_graph("p 3 3\ne 0 1\ne 1 2\ne 0 2"), named_graph("complete", 3));
  EXPECT_EQ(parse_graph("# header comment\n\np 3 2\n# edges\ne 2 1\ne 1 0\n"), path(3));
  EXPECT_EQ(parse_graph("p 0 0\n").num_vertices(), 0u);
}

TEST(EdgeListTest, ReportsErrorLines) {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("p 2 1\ne 0 2"), 2u);  // index out of range
  EXPECT_EQ(line_of("p 3 2\ne 0 1\ne 1 0"), 3u);  // duplicate
  EXPECT_EQ(line_of("p 3 1\n\ne 1 1"), 3u);  // self-loop
  EXPECT_EQ(line_of("p x 1\ne 0 1"), 1u);  // malformed header
  EXPECT_EQ(line_of("e 0 1\np 2 1"), 1u);  // edge before header
  EXPECT_THROW(parse_graph("p 3 2\ne 0 1\n"), ParseError);  // edge count mismatch
  EXPECT_THROW(parse_graph(""), ParseError);
  EXPECT_THROW(parse_graph("p 3 1\nq 0 1\n"), ParseError);
}

TEST(EdgeListTest, SerializeIsCanonical) {
  Graph g = parse_graph("p 4 3\ne 3 2\ne 0 1\ne 2 0\n");
  EXPECT_EQ(serialize_graph(g), "p 4 3\ne 0 1\ne 0 2\ne 2 3\n");
}

TEST(EdgeListProperty, RoundTrip) {
  for (const Graph& g : sample_graphs(200, 14)) {
    const std::string text = serialize_graph(g);
    EXPECT_EQ(parse_graph(text), g);
    EXPECT_EQ(serialize_graph(parse_graph(text)), text);
  }
}

TEST(EdgeListTest, FixtureCorpusRoundTrips) {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(DDOM_FIXTURE_DIR)) {
    if (entry.path().extension() != ".el") continue;
    std::ifstream in(entry.path());
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(serialize_graph(parse_graph(buf.str())), buf.str()) << entry.path();
    ++seen;
  }
  EXPECT_GT(seen, 0u);
}

}  // namespace
}  // namespace ddom
