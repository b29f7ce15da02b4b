#pragma once

#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "sgt/graph.hpp"
#include "sgt/walk.hpp"

namespace sgt::detail {

/// Label-setting shortest paths on the integer length lattice of a graph.
/// `Key` is std::int64_t when the lattice fits, BigInt otherwise.
template <class Key>
class DistanceField {
 public:
  DistanceField(const MetricGraph& g, std::span<const Key> weights, const EdgeSet* active = nullptr)
      : g_(g), weights_(weights), active_(active), dist_(g.vertex_count()), state_(g.vertex_count(), kUnseen) {}

  /// Multi-source search. With `stop_at`, returns as soon as that vertex is
  /// settled; with `limit`, never settles labels strictly above it. Only
  /// after an unrestricted run are all labels final.
  void run(std::span<const VertexId> sources, std::optional<VertexId> stop_at = std::nullopt,
           const Key* limit = nullptr) {
    using Entry = std::pair<Key, VertexId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    for (VertexId s : sources) {
      if (state_[s] == kUnseen) {
        dist_[s] = Key(0);
        state_[s] = kQueued;
        queue.emplace(Key(0), s);
      }
    }
    while (!queue.empty()) {
      auto [d, x] = queue.top();
      queue.pop();
      if (state_[x] == kSettled || d != dist_[x]) continue;
      if (limit && d > *limit) return;
      state_[x] = kSettled;
      if (stop_at && *stop_at == x) return;
      for (const auto& inc : g_.incidences(x)) {
        if (inc.other == x || !usable(inc.edge)) continue;
        Key candidate = d + weights_[inc.edge];
        auto& st = state_[inc.other];
        if (st == kUnseen || (st == kQueued && candidate < dist_[inc.other])) {
          dist_[inc.other] = candidate;
          st = kQueued;
          queue.emplace(std::move(candidate), inc.other);
        }
      }
    }
  }

  /// Ignores one more edge on top of the active mask.
  void exclude(EdgeId e) { skip_ = e; }

  bool settled(VertexId v) const { return state_[v] == kSettled; }
  const Key& distance(VertexId v) const { return dist_[v]; }

  /// From `from` down to a source along shortest-path edges, taking the
  /// smallest step at every vertex. That yields the lexicographically
  /// smallest step sequence among all shortest paths.
  std::vector<Step> descend(VertexId from) const {
    std::vector<Step> path;
    VertexId x = from;
    while (dist_[x] != Key(0)) {
      bool moved = false;
      for (const auto& inc : g_.incidences(x)) {
        if (inc.other == x || !usable(inc.edge) || state_[inc.other] != kSettled) continue;
        if (dist_[inc.other] + weights_[inc.edge] == dist_[x]) {
          path.push_back({inc.edge, inc.forward});
          x = inc.other;
          moved = true;
          break;
        }
      }
      if (!moved) throw GraphError("internal: broken shortest-path labels");
    }
    return path;
  }

 private:
  enum : unsigned char { kUnseen, kQueued, kSettled };

  bool usable(EdgeId e) const { return (!skip_ || *skip_ != e) && (!active_ || active_->contains(e)); }

  const MetricGraph& g_;
  std::span<const Key> weights_;
  const EdgeSet* active_;
  std::optional<EdgeId> skip_;
  std::vector<Key> dist_;
  std::vector<unsigned char> state_;
};

/// Calls f with the lattice weights as a span of the widest needed key type.
template <class F>
decltype(auto) with_lattice(const MetricGraph& g, F&& f) {
  const auto& lattice = g.lattice();
  if (lattice.fits_int64) return f(std::span<const std::int64_t>(lattice.small));
  return f(std::span<const BigInt>(lattice.big));
}

inline Rational to_rational(std::int64_t key, const Rational& unit) {
  Rational r(BigInt(static_cast<long>(key)));
  return r * unit;
}

inline Rational to_rational(const BigInt& key, const Rational& unit) { return Rational(key) * unit; }

}  // namespace sgt::detail
