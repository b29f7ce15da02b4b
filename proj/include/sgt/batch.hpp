#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sgt/generators.hpp"
#include "sgt/graph.hpp"
#include "sgt/loops.hpp"

namespace sgt {

/// Which n to test on a graph of Betti number b.
enum class NChoice { one, log, half, full };

/// Parses "one,log,half,full" style lists (also "1" and "b").
std::vector<NChoice> parse_n_policy(const std::string& text);
std::string to_string(NChoice choice);

/// Values of the policy on b: 1, max(1, floor(ln b)), ceil(b/2), b; clipped
/// to [1, b], duplicates dropped, first occurrence kept.
std::vector<unsigned> n_values(const std::vector<NChoice>& policy, unsigned b);

struct BatchOptions {
  std::size_t count = 0;
  std::uint64_t seed = 0;
  unsigned b_min = 2;
  unsigned b_max = 64;
  std::vector<NChoice> policy{NChoice::one, NChoice::log, NChoice::half, NChoice::full};
  std::optional<std::filesystem::path> out_dir;  // certificate and graph documents
  unsigned threads = 1;
};

/// Instance i of a batch: b uniform in [b_min, b_max], v uniform in [1, 3b],
/// unit or uniform(1/10, 10) lengths with equal probability, normalized to
/// total length b.
struct BatchInstance {
  std::size_t index = 0;
  std::uint64_t graph_seed = 0;
  unsigned b = 0;
  unsigned v = 0;
  std::string law;
};

BatchInstance batch_instance(const BatchOptions& options, std::size_t index);
MetricGraph batch_graph(const BatchInstance& instance);

struct RunOutcome {
  unsigned n = 0;
  bool ok = false;
  std::string failure;
  Branch branch = Branch::direct;
  double bound = 0.0;
  double max_length = 0.0;  // longest certified loop
  double max_ratio = 0.0;   // longest loop / bound, from the verifier
  std::optional<ClusterReport> cluster;
  std::string document;     // certificate document
};

struct InstanceOutcome {
  BatchInstance instance;
  bool bst_holds = false;
  double bst_lhs = 0.0;
  double bst_rhs = 0.0;
  std::vector<RunOutcome> runs;

  bool ok() const;
};

struct BatchSummary {
  std::vector<InstanceOutcome> instances;  // ordered by index
  std::size_t runs = 0;
  std::size_t failures = 0;
  double max_ratio = 0.0;

  bool ok() const { return failures == 0; }
};

/// Builds, certifies and independently verifies every instance. Instances
/// are spread over worker threads; results come back in index order.
BatchSummary run_batch(const BatchOptions& options);

}  // namespace sgt
