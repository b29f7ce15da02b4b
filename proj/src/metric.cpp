#include "sgt/metric.hpp"

#include <algorithm>
#include <string>

#include "detail/distance_field.hpp"

namespace sgt {
namespace {

void check_vertex(const MetricGraph& g, VertexId v) {
  if (v >= g.vertex_count()) throw GraphError("unknown vertex " + std::to_string(v));
}

PathResult path_between(const MetricGraph& g, VertexId u, VertexId v, const EdgeSet* active) {
  check_vertex(g, u);
  check_vertex(g, v);
  return detail::with_lattice(g, [&](auto weights) {
    using Key = typename decltype(weights)::value_type;
    detail::DistanceField<Key> field(g, weights, active);
    const VertexId target[] = {v};
    field.run(target);
    if (!field.settled(u)) {
      throw GraphError("vertices " + std::to_string(u) + " and " + std::to_string(v) + " are not connected");
    }
    PathResult out{u, v, detail::to_rational(field.distance(u), g.lattice().unit), field.descend(u)};
    return out;
  });
}

std::vector<std::optional<Rational>> field_to_rationals(const MetricGraph& g, std::span<const VertexId> sources) {
  return detail::with_lattice(g, [&](auto weights) {
    using Key = typename decltype(weights)::value_type;
    detail::DistanceField<Key> field(g, weights);
    field.run(sources);
    std::vector<std::optional<Rational>> out(g.vertex_count());
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
      if (field.settled(x)) out[x] = detail::to_rational(field.distance(x), g.lattice().unit);
    }
    return out;
  });
}

}  // namespace

PathResult shortest_path(const MetricGraph& g, VertexId u, VertexId v) { return path_between(g, u, v, nullptr); }

PathResult shortest_path(const MetricGraph& g, VertexId u, VertexId v, const EdgeSet& active) {
  return path_between(g, u, v, &active);
}

std::vector<std::optional<Rational>> distances_from(const MetricGraph& g, VertexId u) {
  check_vertex(g, u);
  const VertexId source[] = {u};
  return field_to_rationals(g, source);
}

std::vector<std::optional<Rational>> distances_to(const MetricGraph& g, std::span<const VertexId> sources) {
  for (auto s : sources) check_vertex(g, s);
  return field_to_rationals(g, sources);
}

std::vector<VertexId> subgraph_vertices(const MetricGraph& g, std::span<const EdgeId> edges) {
  std::vector<VertexId> out;
  out.reserve(2 * edges.size());
  for (EdgeId e : edges) {
    out.push_back(g.edge(e).u);
    out.push_back(g.edge(e).v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SubgraphDistance dist_to_subgraph(const MetricGraph& g, VertexId u, std::span<const EdgeId> subgraph) {
  check_vertex(g, u);
  if (subgraph.empty()) throw GraphError("distance to an empty subgraph");
  const auto targets = subgraph_vertices(g, subgraph);
  return detail::with_lattice(g, [&](auto weights) {
    using Key = typename decltype(weights)::value_type;
    detail::DistanceField<Key> field(g, weights);
    field.run(targets);
    if (!field.settled(u)) throw GraphError("vertex " + std::to_string(u) + " cannot reach the subgraph");
    auto walk = field.descend(u);
    const VertexId attach = walk_end(g, u, walk);
    SubgraphDistance out;
    out.distance = detail::to_rational(field.distance(u), g.lattice().unit);
    out.path = PathResult{u, attach, out.distance, std::move(walk)};
    out.attach = attach;
    return out;
  });
}

SubgraphDistance dist_subgraphs(const MetricGraph& g, std::span<const EdgeId> first,
                                std::span<const EdgeId> second) {
  if (first.empty() || second.empty()) throw GraphError("distance to an empty subgraph");
  const auto from = subgraph_vertices(g, first);
  const auto targets = subgraph_vertices(g, second);
  return detail::with_lattice(g, [&](auto weights) {
    using Key = typename decltype(weights)::value_type;
    detail::DistanceField<Key> field(g, weights);
    field.run(targets);
    std::optional<VertexId> best;
    for (VertexId b : from) {
      if (field.settled(b) && (!best || field.distance(b) < field.distance(*best))) best = b;
    }
    if (!best) throw GraphError("subgraphs lie in different components");
    auto walk = field.descend(*best);
    const VertexId attach = walk_end(g, *best, walk);
    SubgraphDistance out;
    out.distance = detail::to_rational(field.distance(*best), g.lattice().unit);
    out.path = PathResult{*best, attach, out.distance, std::move(walk)};
    out.attach = attach;
    return out;
  });
}

}  // namespace sgt
