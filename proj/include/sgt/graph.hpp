#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgt/rational.hpp"

namespace sgt {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Stored orientation u -> v is the positive direction for homology.
struct Edge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;
  Rational length;

  bool is_loop() const { return u == v; }
};

/// One end of an edge seen from a vertex. A self-loop appears twice at its
/// vertex, once in each direction.
struct Incidence {
  EdgeId edge = 0;
  VertexId other = 0;
  bool forward = true;  // leaving through u -> v
};

/// Edge lengths rescaled to integers over a common denominator. Shortest-path
/// searches run on these keys; comparisons are exact.
struct LengthLattice {
  Rational unit;                    // 1 / common denominator
  bool fits_int64 = false;
  std::vector<std::int64_t> small;  // filled when fits_int64
  std::vector<BigInt> big;          // always filled
};

/// Subset of the edges of a graph, used both as an active-edge mask for
/// deletion sequences and as a whole-edge subgraph.
class EdgeSet {
 public:
  EdgeSet() = default;
  static EdgeSet all(std::size_t edge_count) { return EdgeSet(edge_count, true); }
  static EdgeSet none(std::size_t edge_count) { return EdgeSet(edge_count, false); }
  static EdgeSet of(std::size_t edge_count, std::span<const EdgeId> ids);

  bool contains(EdgeId e) const { return member_[e] != 0; }
  void insert(EdgeId e);
  void erase(EdgeId e);
  std::size_t size() const { return count_; }
  std::size_t universe() const { return member_.size(); }
  std::vector<EdgeId> ids() const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  EdgeSet(std::size_t n, bool full) : member_(n, full ? 1 : 0), count_(full ? n : 0) {}

  std::vector<char> member_;
  std::size_t count_ = 0;
};

/// Finite weighted multigraph with exact positive edge lengths. Immutable.
class MetricGraph {
 public:
  /// Validates ids (0..e-1 in order), endpoints and positivity of lengths.
  /// Disconnected graphs are accepted; see connected().
  MetricGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  /// Incidences sorted by (edge id, forward first).
  std::span<const Incidence> incidences(VertexId v) const { return adjacency_.at(v); }

  std::size_t component_count() const { return components_; }
  bool connected() const { return components_ <= 1; }

  const LengthLattice& lattice() const { return lattice_; }

  friend bool operator==(const MetricGraph& a, const MetricGraph& b);

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::size_t components_ = 0;
  LengthLattice lattice_;
};

/// First Betti number e - v + (number of components).
std::size_t betti(const MetricGraph& g);

/// Betti number of the spanning subgraph keeping only `active` edges.
std::size_t betti(const MetricGraph& g, const EdgeSet& active);

/// Components of the spanning subgraph on `active` edges.
std::size_t component_count(const MetricGraph& g, const EdgeSet& active);

Rational total_length(const MetricGraph& g);

/// Every length multiplied by `factor` (> 0).
MetricGraph scale(const MetricGraph& g, const Rational& factor);

struct Normalized {
  MetricGraph graph;
  Rational scale;  // factor applied: betti / total_length
};

/// Rescales so the total length equals the Betti number. Throws GraphError on forests.
Normalized normalize(const MetricGraph& g);

/// Throws GraphError unless g is connected.
void require_connected(const MetricGraph& g, const char* what);

}  // namespace sgt
