#include "sgt/walk.hpp"

#include <algorithm>
#include <string>

namespace sgt {

VertexId walk_end(const MetricGraph& g, VertexId start, std::span<const Step> steps) {
  if (start >= g.vertex_count()) throw GraphError("walk starts at unknown vertex " + std::to_string(start));
  VertexId at = start;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto s = steps[i];
    if (s.edge >= g.edge_count()) throw GraphError("walk uses unknown edge " + std::to_string(s.edge));
    if (tail(g, s) != at) {
      throw GraphError("walk step " + std::to_string(i) + " (edge " + std::to_string(s.edge) +
                       ") does not leave vertex " + std::to_string(at));
    }
    at = head(g, s);
  }
  return at;
}

Rational walk_length(const MetricGraph& g, std::span<const Step> steps) {
  Rational sum = 0;
  for (auto s : steps) sum += g.edge(s.edge).length;
  return sum;
}

std::vector<Step> reversed_walk(std::span<const Step> steps) {
  std::vector<Step> out;
  out.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) out.push_back(reversed(*it));
  return out;
}

BasedLoop make_loop(const MetricGraph& g, VertexId base, std::vector<Step> steps) {
  if (walk_end(g, base, steps) != base) {
    throw GraphError("walk from vertex " + std::to_string(base) + " is not closed");
  }
  BasedLoop loop{base, std::move(steps), 0};
  loop.length = walk_length(g, loop.steps);
  return loop;
}

BasedLoop concatenate(const BasedLoop& first, const BasedLoop& second) {
  if (first.base != second.base) throw GraphError("cannot concatenate loops with different bases");
  BasedLoop out = first;
  out.steps.insert(out.steps.end(), second.steps.begin(), second.steps.end());
  out.length += second.length;
  return out;
}

BasedLoop inverse(const BasedLoop& loop) { return {loop.base, reversed_walk(loop.steps), loop.length}; }

std::vector<VertexId> loop_vertices(const MetricGraph& g, const BasedLoop& loop) {
  std::vector<VertexId> out;
  out.reserve(loop.steps.size() + 1);
  out.push_back(loop.base);
  for (std::size_t i = 0; i + 1 < loop.steps.size(); ++i) out.push_back(head(g, loop.steps[i]));
  return out;
}

std::vector<EdgeId> edge_multiset(const BasedLoop& loop) {
  std::vector<EdgeId> out;
  out.reserve(loop.steps.size());
  for (auto s : loop.steps) out.push_back(s.edge);
  std::sort(out.begin(), out.end());
  return out;
}

BasedLoop rotate_to(const MetricGraph& g, const BasedLoop& cycle, VertexId start) {
  const auto verts = loop_vertices(g, cycle);
  auto it = std::find(verts.begin(), verts.end(), start);
  if (it == verts.end()) {
    throw GraphError("vertex " + std::to_string(start) + " is not on the cycle");
  }
  const auto offset = static_cast<std::size_t>(it - verts.begin());
  BasedLoop out{start, {}, cycle.length};
  out.steps.reserve(cycle.steps.size());
  for (std::size_t i = 0; i < cycle.steps.size(); ++i) {
    out.steps.push_back(cycle.steps[(offset + i) % cycle.steps.size()]);
  }
  return out;
}

bool is_simple_cycle(const MetricGraph& g, const BasedLoop& loop) {
  if (loop.steps.empty()) return false;
  auto verts = loop_vertices(g, loop);
  auto edges = edge_multiset(loop);
  std::sort(verts.begin(), verts.end());
  return std::adjacent_find(verts.begin(), verts.end()) == verts.end() &&
         std::adjacent_find(edges.begin(), edges.end()) == edges.end();
}

}  // namespace sgt
