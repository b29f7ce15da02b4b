#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sgt/graph.hpp"
#include "sgt/walk.hpp"

namespace sgt {

/// An exhaustive search hit its size guard. Oracles never return partial answers.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kBruteSystoleMaxEdges = 14;
inline constexpr std::uint64_t kDefaultExpansionCap = 10'000'000;

/// kDefaultExpansionCap, or the value of SGT_ORACLE_CAP when set.
std::uint64_t default_expansion_cap();

/// Minimum length over all simple cycles, by backtracking over simple paths.
/// Throws GraphError on forests, OracleLimitError above `max_edges` edges.
Rational brute_systole(const MetricGraph& g, std::size_t max_edges = kBruteSystoleMaxEdges);

struct BudgetRank {
  std::size_t rank = 0;
  std::vector<BasedLoop> witness;  // rank loops, independent, each within budget
  std::uint64_t expansions = 0;
};

/// Dimension of the span of the cycle vectors of all closed walks at `base`
/// of length <= budget. The search runs over states (vertex, chain modulo the
/// span found so far), cheapest first, and restarts whenever a walk enlarges
/// the span, so the result is exact. Throws OracleLimitError when more than
/// `cap` states are expanded.
BudgetRank max_rank_under_budget(const MetricGraph& g, VertexId base, const Rational& budget,
                                 std::uint64_t cap = default_expansion_cap());

struct BestBase {
  std::size_t rank = 0;
  VertexId base = 0;  // smallest vertex attaining the rank
  std::vector<BasedLoop> witness;
};

BestBase best_base_rank(const MetricGraph& g, const Rational& budget, std::uint64_t cap = default_expansion_cap());

}  // namespace sgt
