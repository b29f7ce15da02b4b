#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgt/graph.hpp"
#include "sgt/homology.hpp"
#include "sgt/systole.hpp"
#include "sgt/walk.hpp"

namespace sgt {

/// Raised when a result violates a guarantee that should hold for every
/// input. Indicates a bug, never a legitimate outcome.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ShortCycle {
  SystolicCycle cycle;
  EdgeId deleted = 0;  // largest edge id on the cycle, removed before the next step
};

/// ceil(b/2) cycles obtained by repeatedly taking a systolic cycle of the
/// current graph and deleting its largest edge id. Each has length at most
/// 12 ln(b) * length(g) / b and together they are independent in H1(g).
/// Requires a connected graph with b >= 3.
std::vector<ShortCycle> short_cycle_sequence(const MetricGraph& g);

/// Lengths of short cycles are checked against this.
double short_cycle_bound(std::size_t b, const Rational& total);

struct Cluster {
  std::size_t center = 0;             // index into the cycle list
  std::vector<std::size_t> members;   // indices, list order, center first
};

/// Greedy partition: the first unassigned cycle becomes a center and takes
/// every unassigned cycle within `threshold` of it.
std::vector<Cluster> cluster_by_threshold(const MetricGraph& g, std::span<const BasedLoop> cycles,
                                          const Rational& threshold);

/// Threshold 4n in normalized units, i.e. 4n * length(g) / b.
std::vector<Cluster> cluster_short_cycles(const MetricGraph& g, std::span<const BasedLoop> cycles, unsigned n);

Rational cluster_threshold(const MetricGraph& g, unsigned n);

/// Conjugates `beta` to a loop at `a` (a vertex of `center`): shortest path
/// from a to the point of the center nearest to beta, across to beta, once
/// around beta, and back the same way. Homologous to beta.
BasedLoop reroute_to_base(const MetricGraph& g, VertexId a, const BasedLoop& center, const BasedLoop& beta);

enum class Branch { direct, clustered };

std::string to_string(Branch branch);

struct ClusterReport {
  std::vector<Rational> short_cycle_lengths;
  std::vector<EdgeId> deleted_edges;
  std::size_t short_cycle_rank = 0;
  double short_cycle_bound = 0.0;
  Rational threshold;
  std::vector<std::size_t> cluster_sizes;
  std::size_t cluster_index = 0;  // chosen cluster
  std::size_t center = 0;         // its center, index into the short cycles
};

struct LoopCertificate {
  VertexId base = 0;
  unsigned n = 0;
  std::size_t betti = 0;
  Rational total_length;
  std::vector<BasedLoop> loops;
  RankCertificate rank_certificate;
  double bound = 0.0;  // 24 (ln b + n) length / b
  Branch branch = Branch::direct;
  std::optional<ClusterReport> cluster;
};

double loop_bound(std::size_t b, unsigned n, const Rational& total);

/// n homologically independent loops at one base vertex, each of length at
/// most 24 (ln b + n) length(g) / b. Takes the direct branch when 2n >= b
/// and the clustered branch otherwise. Requires a connected graph with
/// b >= 2 and 1 <= n <= b; every guarantee is re-checked before returning.
LoopCertificate independent_based_loops(const MetricGraph& g, unsigned n);

/// The direct branch alone: the first n fundamental cycles of the minimum
/// spanning tree (ties by edge id), each conjugated by a shortest path from
/// the smallest vertex of the first one.
LoopCertificate direct_based_loops(const MetricGraph& g, unsigned n);

}  // namespace sgt
