#pragma once

#include <compare>
#include <span>
#include <vector>

#include "sgt/graph.hpp"

namespace sgt {

/// One directed traversal of an edge. Ordered by (edge id, forward first),
/// which is the order used for every lexicographic tie-break.
struct Step {
  EdgeId edge = 0;
  bool forward = true;

  friend bool operator==(const Step&, const Step&) = default;
  friend std::strong_ordering operator<=>(const Step& a, const Step& b) {
    if (auto c = a.edge <=> b.edge; c != 0) return c;
    return b.forward <=> a.forward;
  }
};

inline VertexId tail(const MetricGraph& g, Step s) {
  const auto& e = g.edge(s.edge);
  return s.forward ? e.u : e.v;
}

inline VertexId head(const MetricGraph& g, Step s) {
  const auto& e = g.edge(s.edge);
  return s.forward ? e.v : e.u;
}

inline Step reversed(Step s) { return {s.edge, !s.forward}; }

/// Follows `steps` from `start`; throws GraphError if a step does not leave
/// the current vertex. Returns the final vertex.
VertexId walk_end(const MetricGraph& g, VertexId start, std::span<const Step> steps);

Rational walk_length(const MetricGraph& g, std::span<const Step> steps);

std::vector<Step> reversed_walk(std::span<const Step> steps);

/// Closed walk starting and ending at `base`.
struct BasedLoop {
  VertexId base = 0;
  std::vector<Step> steps;
  Rational length;

  friend bool operator==(const BasedLoop&, const BasedLoop&) = default;
};

/// Validates closure and computes the exact length.
BasedLoop make_loop(const MetricGraph& g, VertexId base, std::vector<Step> steps);

/// `first` followed by `second`; both must share a base.
BasedLoop concatenate(const BasedLoop& first, const BasedLoop& second);

/// Same loop walked backwards.
BasedLoop inverse(const BasedLoop& loop);

/// Vertices visited by the loop, in order, starting with the base (the
/// closing return to the base is not repeated).
std::vector<VertexId> loop_vertices(const MetricGraph& g, const BasedLoop& loop);

/// Edge ids used by the loop, sorted, with repetitions.
std::vector<EdgeId> edge_multiset(const BasedLoop& loop);

/// A cycle walked from a different start vertex on it, same orientation.
/// Throws GraphError if `start` is not visited.
BasedLoop rotate_to(const MetricGraph& g, const BasedLoop& cycle, VertexId start);

/// True when the loop visits no vertex twice and uses no edge twice.
bool is_simple_cycle(const MetricGraph& g, const BasedLoop& loop);

}  // namespace sgt
