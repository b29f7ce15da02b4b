#include "sgt/batch.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sgt/certificate.hpp"
#include "sgt/graph_io.hpp"
#include "sgt/systole.hpp"

namespace sgt {
namespace {

std::string instance_stem(std::size_t index) {
  std::ostringstream out;
  out << "instance-";
  out.width(4);
  out.fill('0');
  out << index;
  return out.str();
}

InstanceOutcome process(const BatchOptions& options, std::size_t index) {
  InstanceOutcome out;
  out.instance = batch_instance(options, index);
  const MetricGraph g = batch_graph(out.instance);
  const auto stem = instance_stem(index);
  if (options.out_dir) save_graph_file(g, *options.out_dir / (stem + "-graph.json"));

  const auto bst = check_bst_bound(g);
  out.bst_holds = bst.holds;
  out.bst_lhs = to_double(bst.lhs);
  out.bst_rhs = bst.rhs;

  const nlohmann::json extra = {{"instance", index},
                                {"graph_seed", out.instance.graph_seed},
                                {"batch_seed", options.seed},
                                {"rng", kRngAlgorithm},
                                {"length_law", out.instance.law}};
  for (unsigned n : n_values(options.policy, out.instance.b)) {
    RunOutcome run;
    run.n = n;
    try {
      const auto cert = independent_based_loops(g, n);
      run.branch = cert.branch;
      run.bound = cert.bound;
      run.cluster = cert.cluster;
      for (const auto& l : cert.loops) run.max_length = std::max(run.max_length, to_double(l.length));
      run.document = certificate_document(g, cert, extra);
      const auto report = verify_certificate_document(g, run.document);
      run.ok = report.ok;
      run.max_ratio = report.max_ratio;
      if (!report.ok) run.failure = report.failures.front();
      if (options.out_dir) {
        write_text_file(*options.out_dir / (stem + "-n" + std::to_string(n) + ".json"), run.document);
      }
    } catch (const std::exception& ex) {
      run.ok = false;
      run.failure = ex.what();
    }
    out.runs.push_back(std::move(run));
  }
  return out;
}

}  // namespace

std::vector<NChoice> parse_n_policy(const std::string& text) {
  std::vector<NChoice> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token == "one" || token == "1") {
      out.push_back(NChoice::one);
    } else if (token == "log") {
      out.push_back(NChoice::log);
    } else if (token == "half") {
      out.push_back(NChoice::half);
    } else if (token == "full" || token == "b") {
      out.push_back(NChoice::full);
    } else {
      throw std::invalid_argument("unknown n-policy entry '" + token + "' (expected one, log, half, full)");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty n-policy");
  return out;
}

std::string to_string(NChoice choice) {
  switch (choice) {
    case NChoice::one: return "one";
    case NChoice::log: return "log";
    case NChoice::half: return "half";
    case NChoice::full: return "full";
  }
  return "?";
}

std::vector<unsigned> n_values(const std::vector<NChoice>& policy, unsigned b) {
  std::vector<unsigned> out;
  for (auto c : policy) {
    unsigned n = 1;
    switch (c) {
      case NChoice::one: n = 1; break;
      case NChoice::log: n = std::max(1u, static_cast<unsigned>(std::floor(std::log(static_cast<double>(b))))); break;
      case NChoice::half: n = (b + 1) / 2; break;
      case NChoice::full: n = b; break;
    }
    if (n < 1 || n > b) continue;
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  }
  return out;
}

BatchInstance batch_instance(const BatchOptions& options, std::size_t index) {
  if (options.b_min < 2 || options.b_max < options.b_min) {
    throw std::invalid_argument("batch needs 2 <= b-min <= b-max");
  }
  Rng rng(derive_seed(options.seed, index));
  BatchInstance inst;
  inst.index = index;
  inst.b = static_cast<unsigned>(rng.uniform(options.b_min, options.b_max));
  inst.v = static_cast<unsigned>(rng.uniform(1, 3 * static_cast<std::uint64_t>(inst.b)));
  inst.law = rng.uniform(0, 1) == 0 ? "unit" : "uniform(0.1,10)";
  inst.graph_seed = rng.next();
  return inst;
}

MetricGraph batch_graph(const BatchInstance& instance) {
  const LengthLaw law = instance.law == "unit" ? LengthLaw{UnitLengths{}} : LengthLaw{UniformLengths{0.1, 10.0}};
  return normalize(gen_random(instance.v, instance.b, instance.graph_seed, law)).graph;
}

bool InstanceOutcome::ok() const {
  return bst_holds && std::all_of(runs.begin(), runs.end(), [](const RunOutcome& r) { return r.ok; });
}

BatchSummary run_batch(const BatchOptions& options) {
  if (options.out_dir) std::filesystem::create_directories(*options.out_dir);
  BatchSummary summary;
  summary.instances.resize(options.count);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < options.count; i = next++) summary.instances[i] = process(options, i);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(options.count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& inst : summary.instances) {
    if (!inst.bst_holds) ++summary.failures;
    for (const auto& r : inst.runs) {
      ++summary.runs;
      if (!r.ok) ++summary.failures;
      summary.max_ratio = std::max(summary.max_ratio, r.max_ratio);
    }
  }
  return summary;
}

}  // namespace sgt
