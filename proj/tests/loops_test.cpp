#include <gtest/gtest.h>

#include <cmath>

#include "sgt/generators.hpp"
#include "sgt/loops.hpp"
#include "sgt/metric.hpp"
#include "sgt/numeric.hpp"
#include "support/fixtures.hpp"

namespace sgt {
namespace {

using testing::make_graph;
using testing::q;

std::vector<BasedLoop> petals(const MetricGraph& g) {
  std::vector<BasedLoop> out;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) out.push_back(make_loop(g, e.u, {{e.id, true}}));
  }
  return out;
}

std::vector<BasedLoop> cycles_of(const std::vector<ShortCycle>& seq) {
  std::vector<BasedLoop> out;
  for (const auto& s : seq) out.push_back(s.cycle.cycle);
  return out;
}

void expect_certificate_sound(const MetricGraph& g, const LoopCertificate& cert) {
  const auto b = betti(g);
  const auto total = total_length(g);
  const double bound = 24.0 * (std::log(static_cast<double>(b)) + cert.n) * to_double(total) / static_cast<double>(b);
  ASSERT_EQ(cert.loops.size(), cert.n);
  EXPECT_NEAR(cert.bound, bound, 1e-9 * bound);
  std::vector<CycleVector> vs;
  for (const auto& loop : cert.loops) {
    EXPECT_EQ(loop.base, cert.base);
    EXPECT_EQ(walk_end(g, cert.base, loop.steps), cert.base);
    EXPECT_EQ(walk_length(g, loop.steps), loop.length);
    EXPECT_TRUE(within_bound(loop.length, bound));
    vs.push_back(cycle_vector(g, loop));
  }
  EXPECT_EQ(testing::rank_reversed_columns(vs), cert.n);
  EXPECT_EQ(cert.rank_certificate.rank, cert.n);
}

TEST(ShortCycles, BouquetOfFour) {
  const auto g = gen_bouquet(4);
  const auto seq = short_cycle_sequence(g);
  ASSERT_EQ(seq.size(), 2u);
  for (const auto& s : seq) {
    EXPECT_EQ(s.cycle.length, Rational(1));
    EXPECT_TRUE(within_bound(s.cycle.length, 12 * std::log(4.0)));
  }
  EXPECT_EQ(seq[0].deleted, 0u);
  EXPECT_EQ(seq[1].deleted, 1u);
}

TEST(ShortCycles, NormalizedK4) {
  const auto g = normalize(testing::k4()).graph;
  const auto seq = short_cycle_sequence(g);
  ASSERT_EQ(seq.size(), 2u);
  // Worked by hand: triangle {0,1,3} first, drop edge 3; then {0,2,4}, drop edge 4.
  EXPECT_EQ(edge_multiset(seq[0].cycle.cycle), (std::vector<EdgeId>{0, 1, 3}));
  EXPECT_EQ(edge_multiset(seq[1].cycle.cycle), (std::vector<EdgeId>{0, 2, 4}));
  EXPECT_EQ(seq[0].deleted, 3u);
  EXPECT_EQ(seq[1].deleted, 4u);
  for (const auto& s : seq) EXPECT_EQ(s.cycle.length, Rational(3, 2));
  std::vector<CycleVector> vs{seq[0].cycle.homology, seq[1].cycle.homology};
  EXPECT_EQ(rank(vs).rank, 2u);
}

TEST(ShortCycles, NeedsThreeLoops) {
  EXPECT_THROW(short_cycle_sequence(testing::figure_eight()), GraphError);
}

TEST(ShortCycles, DeletionKeepsConnectivity) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = normalize(gen_random(1 + seed % 30, 3 + seed % 20, seed, UniformLengths{0.1, 10.0})).graph;
    const auto b = betti(g);
    const auto seq = short_cycle_sequence(g);
    ASSERT_EQ(seq.size(), (b + 1) / 2);
    auto active = EdgeSet::all(g.edge_count());
    std::vector<CycleVector> vs;
    for (const auto& s : seq) {
      EXPECT_TRUE(within_bound(s.cycle.length, short_cycle_bound(b, total_length(g))));
      EXPECT_EQ(s.deleted, edge_multiset(s.cycle.cycle).back());
      for (auto e : edge_multiset(s.cycle.cycle)) EXPECT_TRUE(active.contains(e));
      active.erase(s.deleted);
      EXPECT_EQ(component_count(g, active), 1u);
      vs.push_back(s.cycle.homology);
    }
    EXPECT_EQ(testing::rank_reversed_columns(vs), seq.size());
  }
}

TEST(Clusters, SmallDiameterGivesOneCluster) {
  const auto g = normalize(testing::k4()).graph;
  const auto cycles = cycles_of(short_cycle_sequence(g));
  const auto clusters = cluster_short_cycles(g, cycles, 1);
  ASSERT_EQ(clusters.size(), 1u);
  EXPECT_EQ(clusters[0].members, (std::vector<std::size_t>{0, 1}));
}

TEST(Clusters, StarBouquetsSeparate) {
  const unsigned n = 1;
  const auto g = gen_star({6, 2, Rational(5 * n), Rational(1)});
  const auto cycles = petals(g);
  ASSERT_EQ(cycles.size(), 6u);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = 0; j < cycles.size(); ++j) {
      if (cycles[i].base == cycles[j].base) continue;
      EXPECT_EQ(dist_subgraphs(g, edge_multiset(cycles[i]), edge_multiset(cycles[j])).distance, Rational(10));
    }
  }
  // Raw units: the threshold is 4n itself.
  const auto clusters = cluster_by_threshold(g, cycles, Rational(4 * n));
  ASSERT_EQ(clusters.size(), 3u);
  for (const auto& c : clusters) {
    ASSERT_EQ(c.members.size(), 2u);
    EXPECT_EQ(cycles[c.members[0]].base, cycles[c.members[1]].base);
  }
}

TEST(Clusters, HugeThresholdGivesOneCenter) {
  const auto g = gen_star({6, 2, Rational(5), Rational(1)});
  const auto clusters = cluster_by_threshold(g, petals(g), Rational(1000));
  ASSERT_EQ(clusters.size(), 1u);
  EXPECT_EQ(clusters[0].center, 0u);
  EXPECT_EQ(clusters[0].members.size(), 6u);
}

TEST(Clusters, ThresholdScalesWithLength) {
  EXPECT_EQ(cluster_threshold(gen_bouquet(4), 2), Rational(8));
  EXPECT_EQ(cluster_threshold(testing::k4(), 1), Rational(8));
}

TEST(Reroute, CenterItselfIsRotated) {
  const auto g = make_graph(3, {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}});
  const auto center = make_loop(g, 0, {{0, true}, {1, true}, {2, true}});
  const auto loop = reroute_to_base(g, 2, center, center);
  EXPECT_EQ(loop.base, 2u);
  EXPECT_EQ(loop.length, Rational(6));
  EXPECT_EQ(loop.steps, (std::vector<Step>{{2, true}, {0, true}, {1, true}}));
}

TEST(Reroute, PetalAcrossTheHub) {
  const auto g = gen_star({2, 1, Rational(3), Rational(1)});
  const auto ps = petals(g);
  ASSERT_EQ(ps.size(), 2u);
  const auto loop = reroute_to_base(g, ps[0].base, ps[0], ps[1]);
  EXPECT_EQ(loop.base, ps[0].base);
  EXPECT_EQ(loop.length, Rational(2 * 6 + 1));
  EXPECT_EQ(cycle_vector(g, loop), cycle_vector(g, ps[1]));
}

TEST(Reroute, BaseMustLieOnCenter) {
  const auto g = gen_star({2, 1, Rational(3), Rational(1)});
  const auto ps = petals(g);
  EXPECT_THROW(reroute_to_base(g, 0, ps[0], ps[1]), GraphError);
}

TEST(Reroute, PreservesHomologyOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const auto g = normalize(gen_random(5 + seed % 25, 4 + seed % 12, seed, UniformLengths{0.1, 10.0})).graph;
    const auto cycles = cycles_of(short_cycle_sequence(g));
    const auto& center = cycles.front();
    for (auto a : loop_vertices(g, center)) {
      for (const auto& beta : cycles) {
        const auto loop = reroute_to_base(g, a, center, beta);
        const auto gap = dist_subgraphs(g, edge_multiset(center), edge_multiset(beta));
        EXPECT_EQ(loop.base, a);
        EXPECT_EQ(cycle_vector(g, loop), cycle_vector(g, beta));
        EXPECT_LE(loop.length, 2 * total_length(g) + 2 * gap.distance + beta.length);
      }
    }
  }
}

TEST(IndependentLoops, BouquetOfFive) {
  const auto g = gen_bouquet(5);
  const auto cert = independent_based_loops(g, 5);
  EXPECT_EQ(cert.base, 0u);
  EXPECT_EQ(cert.branch, Branch::direct);
  EXPECT_NEAR(cert.bound, 24 * (std::log(5.0) + 5), 1e-9);
  EXPECT_NEAR(cert.bound, 158.6, 0.05);
  for (const auto& l : cert.loops) EXPECT_EQ(l.length, Rational(1));
  expect_certificate_sound(g, cert);
}

TEST(IndependentLoops, FigureEight) {
  const auto g = testing::figure_eight();
  const auto cert = independent_based_loops(g, 2);
  EXPECT_EQ(cert.branch, Branch::direct);
  for (const auto& l : cert.loops) EXPECT_EQ(l.length, Rational(1));
  expect_certificate_sound(g, cert);
}

TEST(IndependentLoops, RandomTwelve) {
  const auto g = normalize(gen_random(20, 12, 42, UnitLengths{})).graph;
  ASSERT_EQ(betti(g), 12u);
  const auto cert = independent_based_loops(g, 3);
  EXPECT_EQ(cert.branch, Branch::clustered);
  EXPECT_NEAR(cert.bound, 24 * (std::log(12.0) + 3), 1e-9);
  EXPECT_NEAR(cert.bound, 131.6, 0.05);
  expect_certificate_sound(g, cert);
  ASSERT_TRUE(cert.cluster.has_value());
  EXPECT_EQ(cert.cluster->short_cycle_rank, 6u);
  EXPECT_EQ(cert.cluster->short_cycle_lengths.size(), 6u);
}

TEST(IndependentLoops, Preconditions) {
  EXPECT_THROW(independent_based_loops(make_graph(1, {{0, 0, 1}}), 1), GraphError);
  EXPECT_THROW(independent_based_loops(testing::k4(), 0), std::invalid_argument);
  EXPECT_THROW(independent_based_loops(testing::k4(), 4), std::invalid_argument);
  EXPECT_THROW(independent_based_loops(make_graph(2, {{0, 0, 1}, {1, 1, 1}, {0, 0, 1}}), 1), GraphError);
}

TEST(IndependentLoops, DirectBranchStaysWithinTwiceTheLength) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = gen_random(1 + seed % 25, 2 + seed % 10, seed, UniformLengths{0.1, 10.0});
    const auto b = static_cast<unsigned>(betti(g));
    for (unsigned n = (b + 1) / 2; n <= b; ++n) {
      const auto cert = independent_based_loops(g, n);
      EXPECT_EQ(cert.branch, Branch::direct);
      for (const auto& l : cert.loops) EXPECT_LE(l.length, 2 * total_length(g));
      expect_certificate_sound(g, cert);
    }
  }
}

TEST(IndependentLoops, ClusteredBranchInternals) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = normalize(gen_random(1 + seed % 40, 3 + seed % 25, seed, UniformLengths{0.1, 10.0})).graph;
    const auto b = static_cast<unsigned>(betti(g));
    for (unsigned n = 1; 2 * n < b; n += 2) {
      const auto cert = independent_based_loops(g, n);
      ASSERT_EQ(cert.branch, Branch::clustered);
      ASSERT_TRUE(cert.cluster.has_value());
      const auto& report = *cert.cluster;
      EXPECT_EQ(report.short_cycle_rank, (b + 1) / 2);
      for (const auto& len : report.short_cycle_lengths) EXPECT_TRUE(within_bound(len, 12 * std::log(double(b))));
      EXPECT_EQ(report.threshold, Rational(4 * n));
      EXPECT_GE(report.cluster_sizes[report.cluster_index], n);
      for (std::size_t i = 0; i < report.cluster_index; ++i) EXPECT_LT(report.cluster_sizes[i], n);
      expect_certificate_sound(g, cert);
    }
  }
}

TEST(IndependentLoops, UnnormalizedInputUsesScaledBound) {
  const auto g = gen_random(20, 12, 42, UniformLengths{0.1, 10.0});
  const auto cert = independent_based_loops(g, 2);
  expect_certificate_sound(g, cert);
}

TEST(IndependentLoops, ScalingEquivariance) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const auto g = gen_random(2 + seed % 20, 3 + seed % 15, seed, UniformLengths{0.1, 10.0});
    const auto b = static_cast<unsigned>(betti(g));
    for (unsigned n : {1u, (b + 1) / 2, b}) {
      for (const auto& c : {q("1/7"), q("5/2")}) {
        const auto base = independent_based_loops(g, n);
        const auto scaled = independent_based_loops(scale(g, c), n);
        ASSERT_EQ(base.loops.size(), scaled.loops.size());
        EXPECT_EQ(base.base, scaled.base);
        EXPECT_EQ(base.branch, scaled.branch);
        for (std::size_t i = 0; i < base.loops.size(); ++i) {
          EXPECT_EQ(scaled.loops[i].steps, base.loops[i].steps);
          EXPECT_EQ(scaled.loops[i].length, c * base.loops[i].length);
        }
      }
    }
  }
}

TEST(IndependentLoops, DirectConstructionOnItsOwn) {
  const auto g = normalize(gen_random(20, 12, 42, UnitLengths{})).graph;
  const auto cert = direct_based_loops(g, 12);
  expect_certificate_sound(g, cert);
  for (const auto& l : cert.loops) EXPECT_LE(l.length, 2 * total_length(g));
}

}  // namespace
}  // namespace sgt
