#pragma once

#include "sgt/graph.hpp"
#include "sgt/homology.hpp"
#include "sgt/walk.hpp"

namespace sgt {

/// A shortest non-contractible loop. On graphs this is a simple cycle and
/// its length is the weighted girth.
struct SystolicCycle {
  Rational length;
  BasedLoop cycle;  // canonical: based at its smallest vertex
  CycleVector homology;
};

/// Exact systole of a connected graph with b >= 1. Scans self-loops and, for
/// every other edge (u, v), the shortest u-v path avoiding it. Among
/// equal-length cycles the smallest (sorted edge ids, step sequence) wins.
/// Throws GraphError on forests and disconnected graphs.
SystolicCycle systole(const MetricGraph& g);

/// Systole of the spanning subgraph on `active` edges.
SystolicCycle systole(const MetricGraph& g, const EdgeSet& active);

/// Canonical form of a simple cycle: rotated to its smallest vertex, and of
/// the two orientations the one with the smaller step sequence.
BasedLoop canonical_cycle(const MetricGraph& g, const BasedLoop& cycle);

struct BstCheck {
  bool holds = false;
  Rational lhs;      // systole of the graph normalized to length b
  double rhs = 0.0;  // 4 ln(b + 1)
};

/// Checks sys(normalized g) <= 4 ln(b + 1). Requires b >= 2.
BstCheck check_bst_bound(const MetricGraph& g);

}  // namespace sgt
