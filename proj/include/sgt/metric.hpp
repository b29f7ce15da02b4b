#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sgt/graph.hpp"
#include "sgt/walk.hpp"

namespace sgt {

/// A minimizing walk between two vertices.
struct PathResult {
  VertexId source = 0;
  VertexId target = 0;
  Rational length;
  std::vector<Step> walk;
};

/// Shortest path from u to v. Among equal-length paths the one with the
/// lexicographically smallest step sequence is returned. Throws GraphError
/// when v is unreachable.
PathResult shortest_path(const MetricGraph& g, VertexId u, VertexId v);
PathResult shortest_path(const MetricGraph& g, VertexId u, VertexId v, const EdgeSet& active);

/// Distances from u to every vertex; nullopt where unreachable.
std::vector<std::optional<Rational>> distances_from(const MetricGraph& g, VertexId u);

/// Distances from every vertex to the nearest vertex of `sources`.
std::vector<std::optional<Rational>> distances_to(const MetricGraph& g, std::span<const VertexId> sources);

/// Sorted distinct vertices touched by the given edges.
std::vector<VertexId> subgraph_vertices(const MetricGraph& g, std::span<const EdgeId> edges);

struct SubgraphDistance {
  Rational distance;
  PathResult path;  // from the near vertex to the attachment vertex
  VertexId attach = 0;
};

/// Distance from u to the whole-edge subgraph S, realized at a vertex of S.
SubgraphDistance dist_to_subgraph(const MetricGraph& g, VertexId u, std::span<const EdgeId> subgraph);

/// Distance between two whole-edge subgraphs: minimum over vertex pairs
/// (b in first, c in second). The path runs from b to c; `attach` is c. Ties
/// prefer the smallest b, then the lexicographically smallest path.
SubgraphDistance dist_subgraphs(const MetricGraph& g, std::span<const EdgeId> first,
                                std::span<const EdgeId> second);

}  // namespace sgt
