#include <gtest/gtest.h>

#include <cmath>

#include "sgt/generators.hpp"
#include "sgt/graph_io.hpp"
#include "support/fixtures.hpp"

namespace sgt {
namespace {

using testing::q;

TEST(Star, TwelveFourTwoOne) {
  const StarParams p{12, 4, Rational(2), Rational(1)};
  EXPECT_EQ(p.q(), 3u);
  EXPECT_EQ(p.r(), 0u);
  const auto g = gen_star(p);
  EXPECT_EQ(betti(g), 12u);
  EXPECT_EQ(total_length(g), Rational(9));
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_TRUE(g.connected());
}

TEST(Star, WithRemainder) {
  const StarParams p{5, 2, Rational(3), Rational(1, 2)};
  EXPECT_EQ(p.q(), 2u);
  EXPECT_EQ(p.r(), 1u);
  const auto g = gen_star(p);
  EXPECT_EQ(betti(g), 5u);
  EXPECT_EQ(total_length(g), Rational(8));
  // Remainder arm: spoke r/2 plus one circle of length 1/2.
  const auto& spoke = g.edge(g.edge_count() - 2);
  EXPECT_FALSE(spoke.is_loop());
  EXPECT_EQ(spoke.length, Rational(1, 2));
  EXPECT_EQ(g.edges().back().length, Rational(1, 2));
}

TEST(Star, Layout) {
  const auto g = gen_star({6, 2, Rational(4), Rational(1)});
  for (const auto& e : g.edges()) {
    if (e.is_loop()) {
      EXPECT_NE(e.u, 0u);
      EXPECT_EQ(e.length, Rational(1, 2));
    } else {
      EXPECT_EQ(e.u, 0u);
      EXPECT_EQ(e.length, Rational(4));
    }
  }
}

TEST(Star, Validation) {
  EXPECT_THROW(gen_star({0, 1, Rational(1), Rational(1)}), std::invalid_argument);
  EXPECT_THROW(gen_star({3, 4, Rational(1), Rational(1)}), std::invalid_argument);
  EXPECT_THROW(gen_star({3, 1, Rational(0), Rational(1)}), std::invalid_argument);
  EXPECT_THROW(gen_star({3, 1, Rational(1), Rational(-1)}), std::invalid_argument);
}

TEST(Star, BettiAndLengthExhaustive) {
  for (unsigned m = 1; m <= 12; ++m) {
    for (unsigned p = 1; p <= m; ++p) {
      for (const auto& spoke : {q("1/2"), q("3"), q("5/7")}) {
        for (const auto& bouquet : {q("1"), q("7/3")}) {
          const StarParams params{m, p, spoke, bouquet};
          const auto g = gen_star(params);
          EXPECT_EQ(betti(g), m);
          EXPECT_TRUE(g.connected());
          EXPECT_EQ(total_length(g), params.q() * (spoke + bouquet) + params.r());
        }
      }
    }
  }
}

TEST(Sharpness, BettiEightIsTheTrivialCase) {
  const auto s = sharpness_params(8, 1, 24.0);
  const double spoke = 12 * (std::log(8.0) + 1);
  EXPECT_EQ(s.p, static_cast<unsigned>(std::floor(spoke)) + 1);
  EXPECT_EQ(s.p, 37u);
  EXPECT_NEAR(s.spoke_exact, 36.9533, 1e-4);
  EXPECT_NEAR(s.spoke_exact, spoke, 1e-12);
  EXPECT_GT(s.bouquet, 0);
  EXPECT_EQ(s.spoke + s.bouquet, Rational(s.p));
  EXPECT_FALSE(s.applicable);
}

TEST(Sharpness, ApplicableInstance) {
  const auto s = sharpness_params(200, 1, 1.0);
  EXPECT_EQ(s.p, static_cast<unsigned>(std::floor(0.5 * (std::log(200.0) + 1))) + 1);
  EXPECT_TRUE(s.applicable);
  const auto g = gen_star(s.star(200));
  EXPECT_EQ(betti(g), 200u);
  EXPECT_LE(std::abs(to_double(s.spoke) - s.spoke_exact), 1e-6);
  EXPECT_THROW(sharpness_params(1, 1, 1.0), std::invalid_argument);
}

TEST(Bouquet, Examples) {
  const std::vector<Rational> two{Rational(1), Rational(1)};
  EXPECT_EQ(gen_bouquet(two), testing::figure_eight());
  const auto four = gen_bouquet(4);
  EXPECT_EQ(betti(four), 4u);
  EXPECT_EQ(total_length(four), Rational(4));
  const std::vector<Rational> one{Rational(5)};
  EXPECT_EQ(betti(gen_bouquet(one)), 1u);
  EXPECT_THROW(gen_bouquet(std::vector<Rational>{}), std::invalid_argument);
  EXPECT_THROW(gen_bouquet(std::vector<Rational>{Rational(0)}), std::invalid_argument);
}

TEST(Random, SingleVertexIsABouquet) {
  const auto g = gen_random(1, 3, 11);
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 3u);
  for (const auto& e : g.edges()) EXPECT_TRUE(e.is_loop());
}

TEST(Random, NoExtraEdgesIsATree) {
  const auto g = gen_random(5, 0, 1);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_TRUE(g.connected());
  EXPECT_EQ(betti(g), 0u);
}

TEST(Random, TwentyTwelve) {
  const auto g = gen_random(20, 12, 42, UnitLengths{});
  EXPECT_TRUE(g.connected());
  EXPECT_EQ(g.edge_count() - g.vertex_count() + 1, 12u);
  EXPECT_EQ(betti(g), 12u);
}

TEST(Random, ConnectedWithRequestedBetti) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const unsigned v = 1 + seed % 37;
    const unsigned b = seed % 23;
    const auto g = gen_random(v, b, seed, UniformLengths{0.1, 10.0});
    ASSERT_TRUE(g.connected());
    ASSERT_EQ(betti(g), b);
    for (const auto& e : g.edges()) {
      EXPECT_GE(e.length, Rational(1, 1000000));
      EXPECT_EQ(BigInt(1000000) % e.length.get_den(), 0);
    }
  }
}

TEST(Random, Deterministic) {
  const auto a = to_document(gen_random(30, 9, 123, UniformLengths{0.1, 10.0}));
  EXPECT_EQ(a, to_document(gen_random(30, 9, 123, UniformLengths{0.1, 10.0})));
  EXPECT_NE(a, to_document(gen_random(30, 9, 124, UniformLengths{0.1, 10.0})));
}

TEST(Random, Validation) {
  EXPECT_THROW(gen_random(0, 1, 1), std::invalid_argument);
  EXPECT_THROW(gen_random(3, 1, 1, UniformLengths{2.0, 1.0}), std::invalid_argument);
}

TEST(Rng, EngineIsTheStandardOne) {
  // The 10000th output of a default-seeded mt19937_64 is fixed by the C++ standard.
  Rng rng(5489);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = rng.next();
  EXPECT_EQ(x, 9981545732273789042ull);
}

TEST(Rng, BoundedDrawsStayInRange) {
  Rng rng(3);
  std::vector<int> seen(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto x = rng.uniform(10, 16);
    ASSERT_GE(x, 10u);
    ASSERT_LE(x, 16u);
    ++seen[x - 10];
    const double u = rng.unit();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  for (int c : seen) EXPECT_GT(c, 800);
  EXPECT_NE(derive_seed(7, 0), derive_seed(7, 1));
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
}

}  // namespace
}  // namespace sgt
