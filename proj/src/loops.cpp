#include "sgt/loops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "detail/union_find.hpp"
#include "sgt/metric.hpp"
#include "sgt/numeric.hpp"

namespace sgt {
namespace {

std::vector<EdgeId> loop_edges(const BasedLoop& loop) {
  std::vector<EdgeId> out;
  out.reserve(loop.steps.size());
  for (auto s : loop.steps) out.push_back(s.edge);
  return out;
}

VertexId smallest_vertex(const MetricGraph& g, const BasedLoop& loop) {
  const auto verts = loop_vertices(g, loop);
  return *std::min_element(verts.begin(), verts.end());
}

std::vector<CycleVector> vectors_of(const MetricGraph& g, std::span<const BasedLoop> loops) {
  std::vector<CycleVector> out;
  out.reserve(loops.size());
  for (const auto& l : loops) out.push_back(cycle_vector(g, l));
  return out;
}

Rational unit_scale(const MetricGraph& g, std::size_t b) {
  Rational s = total_length(g) / Rational(static_cast<unsigned long>(b));
  s.canonicalize();
  return s;
}

void check_arguments(const MetricGraph& g, unsigned n) {
  require_connected(g, "independent based loops");
  const auto b = betti(g);
  if (b < 2) throw GraphError("independent based loops need first Betti number >= 2 (got " + std::to_string(b) + ")");
  if (n < 1 || n > b) {
    throw std::invalid_argument("n must lie in [1, " + std::to_string(b) + "], got " + std::to_string(n));
  }
}

/// Guarantees shared by both branches.
void check_certificate(const MetricGraph& g, const LoopCertificate& cert) {
  if (cert.loops.size() != cert.n) throw InternalError("certificate holds the wrong number of loops");
  for (const auto& loop : cert.loops) {
    if (loop.base != cert.base) throw InternalError("loops do not share a base");
    if (walk_length(g, loop.steps) != loop.length) throw InternalError("loop length does not re-sum");
    if (!within_bound(loop.length, cert.bound)) {
      throw InternalError("loop of length " + to_string(loop.length) + " exceeds the bound " +
                          std::to_string(cert.bound));
    }
  }
  if (cert.rank_certificate.rank != cert.n) {
    throw InternalError("loops have rank " + std::to_string(cert.rank_certificate.rank) + ", expected " +
                        std::to_string(cert.n));
  }
}

LoopCertificate clustered_based_loops(const MetricGraph& g, unsigned n) {
  const auto b = betti(g);
  const Rational total = total_length(g);

  const auto sequence = short_cycle_sequence(g);
  std::vector<BasedLoop> cycles;
  cycles.reserve(sequence.size());
  for (const auto& s : sequence) cycles.push_back(s.cycle.cycle);

  ClusterReport report;
  for (const auto& s : sequence) {
    report.short_cycle_lengths.push_back(s.cycle.length);
    report.deleted_edges.push_back(s.deleted);
  }
  report.short_cycle_rank = rank(vectors_of(g, cycles)).rank;
  report.short_cycle_bound = short_cycle_bound(b, total);
  report.threshold = cluster_threshold(g, n);

  const auto clusters = cluster_by_threshold(g, cycles, report.threshold);
  for (const auto& c : clusters) report.cluster_sizes.push_back(c.members.size());
  auto chosen = std::find_if(clusters.begin(), clusters.end(), [n](const Cluster& c) { return c.members.size() >= n; });
  if (chosen == clusters.end()) {
    std::string diagnosis;
    try {
      auto direct = direct_based_loops(g, n);
      diagnosis = "the direct construction would have succeeded";
    } catch (const std::exception& ex) {
      diagnosis = std::string("the direct construction also fails: ") + ex.what();
    }
    throw InternalError("no cluster of short cycles reaches size " + std::to_string(n) + "; " + diagnosis);
  }
  report.cluster_index = static_cast<std::size_t>(chosen - clusters.begin());
  report.center = chosen->center;

  const BasedLoop& center = cycles[chosen->center];
  LoopCertificate cert;
  cert.base = smallest_vertex(g, center);
  cert.n = n;
  cert.betti = b;
  cert.total_length = total;
  cert.bound = loop_bound(b, n, total);
  cert.branch = Branch::clustered;

  const double inner_bound = (24.0 * std::log(static_cast<double>(b)) + 8.0 * n) * to_double(total) / b;
  for (std::size_t k = 0; k < n; ++k) {
    const BasedLoop& beta = cycles[chosen->members[k]];
    const auto gap = dist_subgraphs(g, loop_edges(center), loop_edges(beta));
    if (gap.distance > report.threshold) throw InternalError("cluster member lies beyond the threshold");
    auto loop = reroute_to_base(g, cert.base, center, beta);
    if (!within_bound(loop.length, inner_bound)) {
      throw InternalError("rerouted loop of length " + to_string(loop.length) + " exceeds " +
                          std::to_string(inner_bound));
    }
    cert.loops.push_back(std::move(loop));
  }
  cert.rank_certificate = rank(vectors_of(g, cert.loops));
  cert.cluster = std::move(report);
  return cert;
}

}  // namespace

double short_cycle_bound(std::size_t b, const Rational& total) {
  return 12.0 * std::log(static_cast<double>(b)) * to_double(total) / static_cast<double>(b);
}

double loop_bound(std::size_t b, unsigned n, const Rational& total) {
  return 24.0 * (std::log(static_cast<double>(b)) + n) * to_double(total) / static_cast<double>(b);
}

std::string to_string(Branch branch) { return branch == Branch::direct ? "direct" : "clustered"; }

std::vector<ShortCycle> short_cycle_sequence(const MetricGraph& g) {
  require_connected(g, "short cycle sequence");
  const auto b = betti(g);
  if (b < 3) throw GraphError("short cycle sequence needs first Betti number >= 3 (got " + std::to_string(b) + ")");

  const std::size_t count = (b + 1) / 2;
  const double bound = short_cycle_bound(b, total_length(g));
  EdgeSet active = EdgeSet::all(g.edge_count());
  std::vector<ShortCycle> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto sys = systole(g, active);
    if (!within_bound(sys.length, bound)) {
      throw InternalError("short cycle " + std::to_string(i) + " has length " + to_string(sys.length) +
                          " above 12 ln(b) scale " + std::to_string(bound));
    }
    const auto edges = edge_multiset(sys.cycle);
    const EdgeId deleted = edges.back();
    active.erase(deleted);
    out.push_back({std::move(sys), deleted});
  }
  if (component_count(g, active) != 1) throw InternalError("edge deletion disconnected the graph");

  std::vector<CycleVector> vectors;
  for (const auto& s : out) vectors.push_back(s.cycle.homology);
  if (rank(vectors).rank != count) throw InternalError("short cycles are not independent");
  return out;
}

Rational cluster_threshold(const MetricGraph& g, unsigned n) {
  const auto b = betti(g);
  if (b == 0) throw GraphError("cluster threshold needs first Betti number >= 1");
  Rational t = Rational(4 * static_cast<unsigned long>(n)) * unit_scale(g, b);
  t.canonicalize();
  return t;
}

std::vector<Cluster> cluster_by_threshold(const MetricGraph& g, std::span<const BasedLoop> cycles,
                                          const Rational& threshold) {
  std::vector<std::vector<VertexId>> verts;
  verts.reserve(cycles.size());
  for (const auto& c : cycles) verts.push_back(subgraph_vertices(g, loop_edges(c)));

  std::vector<char> assigned(cycles.size(), 0);
  std::vector<Cluster> out;
  for (std::size_t j = 0; j < cycles.size(); ++j) {
    if (assigned[j]) continue;
    Cluster cluster{j, {j}};
    assigned[j] = 1;
    const auto field = distances_to(g, verts[j]);
    for (std::size_t k = j + 1; k < cycles.size(); ++k) {
      if (assigned[k]) continue;
      std::optional<Rational> gap;
      for (auto x : verts[k]) {
        if (field[x] && (!gap || *field[x] < *gap)) gap = field[x];
      }
      if (gap && *gap <= threshold) {
        cluster.members.push_back(k);
        assigned[k] = 1;
      }
    }
    out.push_back(std::move(cluster));
  }
  return out;
}

std::vector<Cluster> cluster_short_cycles(const MetricGraph& g, std::span<const BasedLoop> cycles, unsigned n) {
  return cluster_by_threshold(g, cycles, cluster_threshold(g, n));
}

BasedLoop reroute_to_base(const MetricGraph& g, VertexId a, const BasedLoop& center, const BasedLoop& beta) {
  const auto center_verts = subgraph_vertices(g, loop_edges(center));
  if (!std::binary_search(center_verts.begin(), center_verts.end(), a)) {
    throw GraphError("base vertex " + std::to_string(a) + " is not on the center cycle");
  }
  const auto beta_edges = loop_edges(beta);
  const auto field = distances_to(g, subgraph_vertices(g, beta_edges));

  // Nearest point of the center to beta; a itself when it is one of them.
  std::optional<VertexId> near;
  for (auto x : center_verts) {
    if (field[x] && (!near || *field[x] < *field[*near])) near = x;
  }
  if (!near) throw GraphError("center and beta lie in different components");
  if (*field[a] == *field[*near]) near = a;

  const auto to_near = shortest_path(g, a, *near);
  const auto across = dist_to_subgraph(g, *near, beta_edges);
  const auto around = rotate_to(g, beta, across.attach);

  std::vector<Step> steps = to_near.walk;
  steps.insert(steps.end(), across.path.walk.begin(), across.path.walk.end());
  steps.insert(steps.end(), around.steps.begin(), around.steps.end());
  const auto back_across = reversed_walk(across.path.walk);
  const auto back_home = reversed_walk(to_near.walk);
  steps.insert(steps.end(), back_across.begin(), back_across.end());
  steps.insert(steps.end(), back_home.begin(), back_home.end());
  return make_loop(g, a, std::move(steps));
}

LoopCertificate direct_based_loops(const MetricGraph& g, unsigned n) {
  check_arguments(g, n);
  const auto b = betti(g);
  const Rational total = total_length(g);

  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId x, EdgeId y) { return g.edge(x).length < g.edge(y).length; });
  detail::UnionFind uf(g.vertex_count());
  EdgeSet tree = EdgeSet::none(g.edge_count());
  for (EdgeId e : order) {
    if (uf.unite(g.edge(e).u, g.edge(e).v)) tree.insert(e);
  }

  std::vector<BasedLoop> fundamental;
  for (const auto& e : g.edges()) {
    if (fundamental.size() == n) break;
    if (tree.contains(e.id)) continue;
    std::vector<Step> steps{Step{e.id, true}};
    if (!e.is_loop()) {
      auto back = shortest_path(g, e.v, e.u, tree).walk;
      steps.insert(steps.end(), back.begin(), back.end());
    }
    fundamental.push_back(make_loop(g, e.u, std::move(steps)));
  }

  LoopCertificate cert;
  cert.base = smallest_vertex(g, fundamental.front());
  cert.n = n;
  cert.betti = b;
  cert.total_length = total;
  cert.bound = loop_bound(b, n, total);
  cert.branch = Branch::direct;
  for (const auto& alpha : fundamental) {
    const auto conj = dist_to_subgraph(g, cert.base, loop_edges(alpha));
    const auto around = rotate_to(g, alpha, conj.attach);
    std::vector<Step> steps = conj.path.walk;
    steps.insert(steps.end(), around.steps.begin(), around.steps.end());
    const auto back = reversed_walk(conj.path.walk);
    steps.insert(steps.end(), back.begin(), back.end());
    auto loop = make_loop(g, cert.base, std::move(steps));
    if (loop.length > 2 * total) throw InternalError("conjugated fundamental cycle longer than 2 length(G)");
    cert.loops.push_back(std::move(loop));
  }
  cert.rank_certificate = rank(vectors_of(g, cert.loops));
  check_certificate(g, cert);
  return cert;
}

LoopCertificate independent_based_loops(const MetricGraph& g, unsigned n) {
  check_arguments(g, n);
  const auto b = betti(g);
  if (2 * static_cast<std::size_t>(n) >= b) return direct_based_loops(g, n);
  auto cert = clustered_based_loops(g, n);
  check_certificate(g, cert);
  return cert;
}

}  // namespace sgt
