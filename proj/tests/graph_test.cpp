#include <gtest/gtest.h>

#include "sgt/generators.hpp"
#include "sgt/graph.hpp"
#include "sgt/graph_io.hpp"
#include "support/fixtures.hpp"

namespace sgt {
namespace {

using testing::figure_eight;
using testing::k4;
using testing::q;

TEST(Rational, ParsesIntegersDecimalsAndFractions) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("1.25"), Rational(5, 4));
  EXPECT_EQ(parse_rational("7/2"), Rational(7, 2));
  EXPECT_EQ(parse_rational("-0.5"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(Rational(4)), "4");
}

TEST(Rational, RejectsGarbage) {
  for (const char* bad : {"", "abc", "1/0", "1..2", "1/", "/2", "1e5", "0x10", "1 2"}) {
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
  }
}

TEST(Load, FigureEightDocument) {
  const auto g = load_graph(R"({"vertices": 1, "edges": [
      {"id": 0, "u": 0, "v": 0, "length": "1"},
      {"id": 1, "u": 0, "v": 0, "length": "1"}]})");
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g, figure_eight());
}

TEST(Load, K4EdgeList) {
  const auto g = load_graph("# K4\n0 1 1\n0 2 1\n0 3 1\n1 2 1\n1 3 1\n2 3 1\n");
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(g, k4());
}

TEST(Load, ZeroLengthIsRejected) {
  EXPECT_THROW(load_graph(R"({"vertices": 2, "edges": [{"id": 0, "u": 0, "v": 1, "length": "0"}]})"), GraphError);
  EXPECT_THROW(load_graph("0 1 0\n"), GraphError);
  EXPECT_THROW(load_graph("0 1 -2\n"), GraphError);
}

TEST(Load, MalformedDocuments) {
  EXPECT_THROW(load_graph("{\"vertices\": 2"), GraphError);
  EXPECT_THROW(load_graph(R"({"edges": []})"), GraphError);
  EXPECT_THROW(load_graph(R"({"vertices": 2, "edges": [{"id": 0, "u": 0, "v": 5, "length": "1"}]})"), GraphError);
  EXPECT_THROW(load_graph(R"({"vertices": 2, "edges": [{"id": 0, "u": 0, "v": 1, "length": "1"},
                                                       {"id": 0, "u": 0, "v": 1, "length": "1"}]})"),
               GraphError);
  EXPECT_THROW(load_graph("0 1\n"), GraphError);
  EXPECT_THROW(load_graph("0 1 x\n"), GraphError);
}

TEST(Betti, Examples) {
  EXPECT_EQ(betti(k4()), 3u);
  EXPECT_EQ(betti(figure_eight()), 2u);
  EXPECT_EQ(betti(gen_star({12, 4, Rational(2), Rational(1)})), 12u);
}

TEST(Betti, CountsComponents) {
  const auto g = testing::make_graph(5, {{0, 1, 1}, {1, 0, 1}, {2, 3, 1}, {3, 4, 1}, {4, 2, 1}});
  EXPECT_EQ(g.component_count(), 2u);
  EXPECT_FALSE(g.connected());
  EXPECT_EQ(betti(g), 2u);
  EXPECT_THROW(require_connected(g, "test"), GraphError);
}

TEST(Betti, MaskedSubgraph) {
  const auto g = k4();
  auto active = EdgeSet::all(6);
  EXPECT_EQ(betti(g, active), 3u);
  active.erase(5);
  EXPECT_EQ(betti(g, active), 2u);
  active.erase(0);
  active.erase(1);
  active.erase(2);
  EXPECT_EQ(component_count(g, active), 2u);
  EXPECT_EQ(betti(g, active), 0u);
}

TEST(TotalLength, Examples) {
  EXPECT_EQ(total_length(figure_eight()), Rational(2));
  EXPECT_EQ(total_length(k4()), Rational(6));
  EXPECT_EQ(total_length(gen_star({12, 4, Rational(2), Rational(1)})), Rational(9));
}

TEST(Normalize, K4HalvesEveryEdge) {
  const auto n = normalize(k4());
  EXPECT_EQ(n.scale, Rational(1, 2));
  EXPECT_EQ(total_length(n.graph), Rational(3));
  for (const auto& e : n.graph.edges()) EXPECT_EQ(e.length, Rational(1, 2));
}

TEST(Normalize, NormalizedBouquetIsFixed) {
  const auto g = gen_bouquet(4);
  const auto n = normalize(g);
  EXPECT_EQ(n.scale, Rational(1));
  EXPECT_EQ(n.graph, g);
}

TEST(Normalize, TreeIsRejected) {
  EXPECT_THROW(normalize(testing::make_graph(3, {{0, 1, 1}, {1, 2, 1}})), GraphError);
}

TEST(Graph, ValidatesConstruction) {
  EXPECT_THROW(MetricGraph(2, {Edge{1, 0, 1, Rational(1)}}), GraphError);
  EXPECT_THROW(MetricGraph(2, {Edge{0, 0, 2, Rational(1)}}), GraphError);
}

TEST(Graph, SelfLoopHasTwoIncidences) {
  const auto g = figure_eight();
  ASSERT_EQ(g.incidences(0).size(), 4u);
  EXPECT_TRUE(g.incidences(0)[0].forward);
  EXPECT_FALSE(g.incidences(0)[1].forward);
}

TEST(Graph, LatticeFallsBackToBigIntegers) {
  const auto g = testing::make_graph(2, {{0, 1, q("4611686018427387904")}, {0, 1, q("1/3")}});
  EXPECT_FALSE(g.lattice().fits_int64);
  EXPECT_EQ(g.lattice().unit, Rational(1, 3));
  EXPECT_EQ(g.lattice().big[1], BigInt(1));
  EXPECT_TRUE(k4().lattice().fits_int64);
}

// Properties over seed-fixed random graphs.

TEST(GraphProperties, NormalizePreservesBettiAndFixesLength) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = gen_random(1 + seed % 9, 1 + seed % 7, seed, UniformLengths{0.1, 10.0});
    const auto n = normalize(g);
    EXPECT_EQ(betti(n.graph), betti(g));
    EXPECT_EQ(total_length(n.graph), Rational(betti(g)));
    EXPECT_EQ(n.scale * total_length(g), Rational(betti(g)));
  }
}

TEST(GraphProperties, SaveLoadRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = gen_random(1 + seed % 11, seed % 6, seed, UniformLengths{0.1, 10.0});
    const auto back = load_graph(to_document(g));
    EXPECT_EQ(back, g);
    EXPECT_EQ(to_document(back), to_document(g));
    EXPECT_EQ(content_hash(back), content_hash(g));
  }
  const auto skewed = testing::make_graph(2, {{0, 1, q("1/3")}, {1, 1, q("22/7")}});
  EXPECT_EQ(load_graph(to_document(skewed)), skewed);
}

TEST(GraphProperties, BettiIsAdditiveOverComponents) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto a = gen_random(1 + seed % 5, seed % 4, seed);
    const auto b = gen_random(1 + seed % 6, seed % 3, seed + 1000);
    std::vector<Edge> edges = a.edges();
    const auto shift = static_cast<VertexId>(a.vertex_count());
    for (auto e : b.edges()) {
      e.id = static_cast<EdgeId>(edges.size());
      e.u += shift;
      e.v += shift;
      edges.push_back(e);
    }
    const MetricGraph both(a.vertex_count() + b.vertex_count(), std::move(edges));
    EXPECT_EQ(betti(both), betti(a) + betti(b));
    EXPECT_EQ(both.component_count(), 2u);
  }
}

TEST(Hash, KnownDigest) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // namespace
}  // namespace sgt
