#include "sgt/generators.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace sgt {
namespace {

constexpr long kLengthDenominator = 1'000'000;

Rational draw_length(Rng& rng, const LengthLaw& law) {
  if (std::holds_alternative<UnitLengths>(law)) return Rational(1);
  const auto& u = std::get<UniformLengths>(law);
  const double x = u.lo + (u.hi - u.lo) * rng.unit();
  long k = std::lround(x * kLengthDenominator);
  if (k < 1) k = 1;
  Rational out(k, kLengthDenominator);
  out.canonicalize();
  return out;
}

std::vector<std::pair<VertexId, VertexId>> random_tree(Rng& rng, unsigned v) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (v < 2) return edges;
  if (v == 2) return {{0, 1}};

  std::vector<VertexId> code(v - 2);
  for (auto& c : code) c = static_cast<VertexId>(rng.uniform(0, v - 1));
  std::vector<unsigned> degree(v, 1);
  for (auto c : code) ++degree[c];

  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (VertexId x = 0; x < v; ++x) {
    if (degree[x] == 1) leaves.push(x);
  }
  for (auto c : code) {
    const VertexId leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  const VertexId a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return edges;
}

}  // namespace

void StarParams::validate() const {
  if (m < 1) throw std::invalid_argument("star: m must be at least 1");
  if (p < 1 || p > m) throw std::invalid_argument("star: p must lie in [1, m]");
  if (sgn(spoke) <= 0) throw std::invalid_argument("star: spoke length L must be positive");
  if (sgn(bouquet) <= 0) throw std::invalid_argument("star: bouquet length l must be positive");
}

MetricGraph gen_star(const StarParams& params) {
  params.validate();
  const unsigned q = params.q();
  const unsigned r = params.r();
  const std::size_t vertex_count = 1 + q + (r > 0 ? 1 : 0);

  std::vector<Edge> edges;
  auto add = [&](VertexId u, VertexId v, Rational len) {
    len.canonicalize();
    edges.push_back(Edge{static_cast<EdgeId>(edges.size()), u, v, std::move(len)});
  };
  const Rational petal = params.bouquet / Rational(params.p);
  for (unsigned i = 1; i <= q; ++i) {
    add(0, i, params.spoke);
    for (unsigned k = 0; k < params.p; ++k) add(i, i, petal);
  }
  if (r > 0) {
    add(0, q + 1, Rational(r, 2));
    for (unsigned k = 0; k < r; ++k) add(q + 1, q + 1, Rational(1, 2));
  }
  return MetricGraph(vertex_count, std::move(edges));
}

MetricGraph gen_bouquet(std::span<const Rational> circle_lengths) {
  if (circle_lengths.empty()) throw std::invalid_argument("bouquet needs at least one circle");
  std::vector<Edge> edges;
  for (const auto& len : circle_lengths) {
    if (sgn(len) <= 0) throw std::invalid_argument("bouquet circle lengths must be positive");
    edges.push_back(Edge{static_cast<EdgeId>(edges.size()), 0, 0, len});
  }
  return MetricGraph(1, std::move(edges));
}

MetricGraph gen_bouquet(unsigned b, const Rational& circle_length) {
  std::vector<Rational> lengths(b, circle_length);
  return gen_bouquet(lengths);
}

SharpnessParams sharpness_params(unsigned b, unsigned n, double lambda) {
  if (b < 2 || n < 1 || n > b || !(lambda > 0)) {
    throw std::invalid_argument("sharpness parameters need b >= 2, 1 <= n <= b and lambda > 0");
  }
  SharpnessParams out;
  const double growth = std::log(static_cast<double>(b)) + n;
  out.spoke_exact = lambda / 2.0 * growth;
  out.p = static_cast<unsigned>(std::floor(out.spoke_exact)) + 1;
  out.spoke = Rational(static_cast<long>(std::floor(out.spoke_exact * kLengthDenominator)), kLengthDenominator);
  out.spoke.canonicalize();
  out.bouquet = Rational(out.p) - out.spoke;
  out.applicable = b >= static_cast<unsigned>(std::floor(lambda * growth)) + 1;
  return out;
}

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return next();
  const std::uint64_t range = span + 1;
  // Largest multiple of range that fits, so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % range);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + x % range;
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

MetricGraph gen_random(unsigned v, unsigned b, std::uint64_t seed, const LengthLaw& law) {
  if (v < 1) throw std::invalid_argument("random graph needs at least one vertex");
  if (const auto* u = std::get_if<UniformLengths>(&law); u && !(u->lo >= 0 && u->hi >= u->lo)) {
    throw std::invalid_argument("uniform length law needs 0 <= lo <= hi");
  }
  Rng rng(seed);
  auto pairs = random_tree(rng, v);
  for (unsigned k = 0; k < b; ++k) {
    const auto x = static_cast<VertexId>(rng.uniform(0, v - 1));
    const auto y = static_cast<VertexId>(rng.uniform(0, v - 1));
    pairs.emplace_back(x, y);
  }
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [x, y] : pairs) {
    edges.push_back(Edge{static_cast<EdgeId>(edges.size()), x, y, draw_length(rng, law)});
  }
  return MetricGraph(v, std::move(edges));
}

}  // namespace sgt
