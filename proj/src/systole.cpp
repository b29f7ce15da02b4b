#include "sgt/systole.hpp"

#include <cmath>
#include <optional>
#include <tuple>

#include "detail/distance_field.hpp"
#include "sgt/numeric.hpp"

namespace sgt {
namespace {

template <class Key>
SystolicCycle scan(const MetricGraph& g, std::span<const Key> weights, const EdgeSet& active) {
  std::optional<Key> best;
  std::vector<EdgeId> tied;

  auto offer = [&](const Key& candidate, EdgeId e) {
    if (!best || candidate < *best) {
      best = candidate;
      tied.assign(1, e);
    } else if (candidate == *best) {
      tied.push_back(e);
    }
  };

  for (const auto& e : g.edges()) {
    if (active.contains(e.id) && e.is_loop()) offer(weights[e.id], e.id);
  }
  for (const auto& e : g.edges()) {
    if (!active.contains(e.id) || e.is_loop()) continue;
    if (best && weights[e.id] > *best) continue;
    detail::DistanceField<Key> field(g, weights, &active);
    field.exclude(e.id);
    std::optional<Key> limit;
    if (best) limit = *best - weights[e.id];
    const VertexId source[] = {e.u};
    field.run(source, e.v, limit ? &*limit : nullptr);
    if (field.settled(e.v)) offer(field.distance(e.v) + weights[e.id], e.id);
  }
  if (!best) throw GraphError("graph has no cycle (first Betti number 0)");

  std::optional<std::tuple<std::vector<EdgeId>, std::vector<Step>, BasedLoop>> winner;
  for (EdgeId id : tied) {
    const auto& e = g.edge(id);
    BasedLoop loop;
    if (e.is_loop()) {
      loop = BasedLoop{e.u, {Step{id, true}}, e.length};
    } else {
      detail::DistanceField<Key> field(g, weights, &active);
      field.exclude(id);
      const VertexId source[] = {e.v};
      field.run(source);
      auto steps = field.descend(e.u);
      steps.push_back(Step{id, false});
      loop = make_loop(g, e.u, std::move(steps));
    }
    loop = canonical_cycle(g, loop);
    auto key = std::make_tuple(edge_multiset(loop), loop.steps, loop);
    if (!winner || std::tie(std::get<0>(key), std::get<1>(key)) < std::tie(std::get<0>(*winner), std::get<1>(*winner))) {
      winner = std::move(key);
    }
  }
  BasedLoop cycle = std::get<2>(*winner);
  SystolicCycle out{cycle.length, cycle, cycle_vector(g, cycle)};
  return out;
}

}  // namespace

BasedLoop canonical_cycle(const MetricGraph& g, const BasedLoop& cycle) {
  const auto verts = loop_vertices(g, cycle);
  VertexId lowest = verts.front();
  for (auto v : verts) lowest = std::min(lowest, v);
  BasedLoop a = rotate_to(g, cycle, lowest);
  BasedLoop b = rotate_to(g, inverse(cycle), lowest);
  return b.steps < a.steps ? b : a;
}

SystolicCycle systole(const MetricGraph& g, const EdgeSet& active) {
  if (active.universe() != g.edge_count()) throw GraphError("edge mask does not match the graph");
  return detail::with_lattice(g, [&](auto weights) { return scan(g, weights, active); });
}

SystolicCycle systole(const MetricGraph& g) {
  require_connected(g, "systole");
  return systole(g, EdgeSet::all(g.edge_count()));
}

BstCheck check_bst_bound(const MetricGraph& g) {
  const auto b = betti(g);
  if (b < 2) throw GraphError("the systole bound check needs first Betti number >= 2");
  BstCheck out;
  out.lhs = systole(g).length * Rational(static_cast<unsigned long>(b)) / total_length(g);
  out.lhs.canonicalize();
  out.rhs = 4.0 * std::log(static_cast<double>(b) + 1.0);
  out.holds = within_bound(out.lhs, out.rhs);
  return out;
}

}  // namespace sgt
