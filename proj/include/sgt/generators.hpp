#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "sgt/graph.hpp"

namespace sgt {

/// Parameters of the extremal star of bouquets: q = m / p bouquets of p
/// circles on spokes of length L around a hub, plus a bouquet of r = m % p
/// circles when r > 0.
struct StarParams {
  unsigned m = 1;
  unsigned p = 1;
  Rational spoke;       // L
  Rational bouquet;     // l, total length of each full bouquet

  unsigned q() const { return m / p; }
  unsigned r() const { return m % p; }
  void validate() const;  // throws std::invalid_argument
};

/// Hub 0, full bouquet i at vertex i (1..q), remainder bouquet at q + 1.
/// Each full bouquet splits l equally over its p circles; the remainder
/// uses spoke r/2 and r circles of length 1/2, so spoke plus bouquet is r.
MetricGraph gen_star(const StarParams& params);

/// One vertex carrying one self-loop per entry of `circle_lengths`.
MetricGraph gen_bouquet(std::span<const Rational> circle_lengths);
MetricGraph gen_bouquet(unsigned b, const Rational& circle_length = Rational(1));

/// Parameters for the graph that shows the 24 (ln b + n) bound is nearly
/// sharp: p = floor(lambda/2 (ln b + n)) + 1 circles per bouquet, spokes of
/// length lambda/2 (ln b + n) and bouquets of length p - L.
struct SharpnessParams {
  unsigned p = 0;
  double spoke_exact = 0.0;  // lambda/2 (ln b + n)
  Rational spoke;            // spoke_exact rounded down to a multiple of 1e-6
  Rational bouquet;          // p - spoke, so that each arm has length p
  bool applicable = false;   // b >= floor(lambda (ln b + n)) + 1
  StarParams star(unsigned b) const { return {b, p, spoke, bouquet}; }
};

SharpnessParams sharpness_params(unsigned b, unsigned n, double lambda);

struct UnitLengths {};
struct UniformLengths {
  double lo = 0.0;
  double hi = 1.0;
};
using LengthLaw = std::variant<UnitLengths, UniformLengths>;

/// Identifier of the generator algorithm, recorded in batch outputs.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64";

/// std::mt19937_64 with bounded draws done by rejection, so results do not
/// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  /// Uniform double in [0, 1) with 53 random bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

/// Seed of instance `index` in a batch started from `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform random labeled spanning tree on v vertices (Pruefer code) plus b
/// edges with uniform endpoints, self-loops and parallels allowed. Lengths
/// follow `law`, rounded to multiples of 1e-6 and at least 1e-6.
MetricGraph gen_random(unsigned v, unsigned b, std::uint64_t seed, const LengthLaw& law = UnitLengths{});

}  // namespace sgt
