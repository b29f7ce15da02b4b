#include "sgt/graph.hpp"

#include <algorithm>
#include <limits>

#include "detail/union_find.hpp"

namespace sgt {
namespace {

LengthLattice build_lattice(const std::vector<Edge>& edges) {
  LengthLattice lattice;
  BigInt denominator = 1;
  for (const auto& e : edges) {
    mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), e.length.get_den_mpz_t());
  }
  lattice.unit = Rational(1, denominator);
  lattice.unit.canonicalize();

  BigInt sum = 0;
  lattice.big.reserve(edges.size());
  for (const auto& e : edges) {
    BigInt k = e.length.get_num() * (denominator / e.length.get_den());
    sum += k;
    lattice.big.push_back(std::move(k));
  }
  // Any simple path or simple cycle sums to at most the total.
  const BigInt limit = BigInt(1) << 62;
  lattice.fits_int64 = sum < limit;
  if (lattice.fits_int64) {
    lattice.small.reserve(edges.size());
    for (const auto& k : lattice.big) lattice.small.push_back(k.get_si());
  }
  return lattice;
}

}  // namespace

EdgeSet EdgeSet::of(std::size_t edge_count, std::span<const EdgeId> ids) {
  EdgeSet s = none(edge_count);
  for (EdgeId e : ids) s.insert(e);
  return s;
}

void EdgeSet::insert(EdgeId e) {
  if (!member_.at(e)) {
    member_[e] = 1;
    ++count_;
  }
}

void EdgeSet::erase(EdgeId e) {
  if (member_.at(e)) {
    member_[e] = 0;
    --count_;
  }
}

std::vector<EdgeId> EdgeSet::ids() const {
  std::vector<EdgeId> out;
  out.reserve(count_);
  for (std::size_t e = 0; e < member_.size(); ++e) {
    if (member_[e]) out.push_back(static_cast<EdgeId>(e));
  }
  return out;
}

MetricGraph::MetricGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), adjacency_(vertex_count) {
  if (vertex_count_ > std::numeric_limits<VertexId>::max()) throw GraphError("too many vertices");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.id != i) {
      throw GraphError("edge ids must be 0..e-1 in order; found id " + std::to_string(e.id) +
                       " at position " + std::to_string(i));
    }
    if (e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw GraphError("edge " + std::to_string(e.id) + " has a dangling endpoint");
    }
    e.length.canonicalize();
    if (sgn(e.length) <= 0) {
      throw GraphError("edge " + std::to_string(e.id) + " has non-positive length " + to_string(e.length));
    }
    adjacency_[e.u].push_back({e.id, e.v, true});
    adjacency_[e.v].push_back({e.id, e.u, false});
  }
  // Insertion order already is (edge id, forward first).

  detail::UnionFind uf(vertex_count_);
  for (const auto& e : edges_) uf.unite(e.u, e.v);
  components_ = uf.sets();
  lattice_ = build_lattice(edges_);
}

bool operator==(const MetricGraph& a, const MetricGraph& b) {
  if (a.vertex_count_ != b.vertex_count_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto& x = a.edges_[i];
    const auto& y = b.edges_[i];
    if (x.id != y.id || x.u != y.u || x.v != y.v || x.length != y.length) return false;
  }
  return true;
}

std::size_t betti(const MetricGraph& g) {
  return g.edge_count() + g.component_count() - g.vertex_count();
}

std::size_t component_count(const MetricGraph& g, const EdgeSet& active) {
  detail::UnionFind uf(g.vertex_count());
  for (const auto& e : g.edges()) {
    if (active.contains(e.id)) uf.unite(e.u, e.v);
  }
  return uf.sets();
}

std::size_t betti(const MetricGraph& g, const EdgeSet& active) {
  return active.size() + component_count(g, active) - g.vertex_count();
}

Rational total_length(const MetricGraph& g) {
  Rational sum = 0;
  for (const auto& e : g.edges()) sum += e.length;
  return sum;
}

MetricGraph scale(const MetricGraph& g, const Rational& factor) {
  if (sgn(factor) <= 0) throw GraphError("scale factor must be positive");
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) e.length *= factor;
  return MetricGraph(g.vertex_count(), std::move(edges));
}

Normalized normalize(const MetricGraph& g) {
  const auto b = betti(g);
  if (b == 0) throw GraphError("cannot normalize a forest (first Betti number 0)");
  Rational factor = Rational(static_cast<unsigned long>(b)) / total_length(g);
  factor.canonicalize();
  if (factor == 1) return {g, factor};
  return {scale(g, factor), factor};
}

void require_connected(const MetricGraph& g, const char* what) {
  if (!g.connected()) {
    throw GraphError(std::string(what) + " requires a connected graph (found " +
                     std::to_string(g.component_count()) + " components)");
  }
}

}  // namespace sgt
