// Command-line front end: graph reports, loop certificates, generators,
// brute-force oracles and the batch verification driver.

#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "sgt/batch.hpp"
#include "sgt/certificate.hpp"
#include "sgt/generators.hpp"
#include "sgt/graph.hpp"
#include "sgt/graph_io.hpp"
#include "sgt/homology.hpp"
#include "sgt/loops.hpp"
#include "sgt/oracle.hpp"
#include "sgt/systole.hpp"

namespace {

using namespace sgt;

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2, kInput = 3, kInternal = 4 };

/// Failure with a short machine-readable reason token.
struct CliError {
  int code;
  std::string reason;
  std::string message;
};

[[noreturn]] void fail(int code, std::string reason, std::string message) {
  throw CliError{code, std::move(reason), std::move(message)};
}

std::string exact(const Rational& r) {
  std::ostringstream out;
  out << to_string(r) << " (" << std::setprecision(10) << to_double(r) << ")";
  return out.str();
}

std::string render_walk(const std::vector<Step>& steps) {
  std::ostringstream out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    out << (i ? " " : "") << (steps[i].forward ? "+" : "-") << steps[i].edge;
  }
  return out.str();
}

MetricGraph load_input(const std::string& path) {
  try {
    return load_graph_file(path);
  } catch (const GraphError& ex) {
    fail(kInput, "parse", ex.what());
  } catch (const std::exception& ex) {
    fail(kInput, "io", ex.what());
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

Rational parse_length_arg(const std::string& text, const char* what) {
  try {
    auto r = parse_rational(text);
    if (sgn(r) <= 0) fail(kUsage, "usage", std::string(what) + " must be positive");
    return r;
  } catch (const std::invalid_argument& ex) {
    fail(kUsage, "usage", std::string(what) + ": " + ex.what());
  }
}

int cmd_info(const std::string& path) {
  const auto g = load_input(path);
  const auto b = betti(g);
  std::cout << "vertices: " << g.vertex_count() << "\n"
            << "edges: " << g.edge_count() << "\n"
            << "components: " << g.component_count() << "\n"
            << "betti: " << b << "\n"
            << "total_length: " << exact(total_length(g)) << "\n";
  if (!g.connected()) {
    std::cout << "systole: not computed (graph is disconnected)\n";
    return kOk;
  }
  if (b == 0) {
    std::cout << "systole: none (graph is a tree)\n";
    return kOk;
  }
  const auto sys = systole(g);
  std::cout << "systole: " << exact(sys.length) << "\n"
            << "systole_cycle: base " << sys.cycle.base << " steps " << render_walk(sys.cycle.steps) << "\n";
  if (b >= 2) {
    const auto bst = check_bst_bound(g);
    std::cout << "bst_bound: normalized systole " << exact(bst.lhs) << " <= 4 ln(b+1) = " << std::setprecision(10)
              << bst.rhs << " : " << (bst.holds ? "holds" : "VIOLATED") << "\n";
    return bst.holds ? kOk : kFailed;
  }
  std::cout << "bst_bound: not applicable (b < 2)\n";
  return kOk;
}

int cmd_systole(const std::string& path) {
  const auto g = load_input(path);
  if (!g.connected()) fail(kInput, "precondition", "graph is disconnected");
  if (betti(g) == 0) fail(kInput, "precondition", "graph is a forest; no systole");
  const auto sys = systole(g);
  std::cout << "systole: " << exact(sys.length) << "\n"
            << "base: " << sys.cycle.base << "\n"
            << "steps: " << render_walk(sys.cycle.steps) << "\n";
  return kOk;
}

int cmd_loops(const std::string& path, long n, const std::string& out_path) {
  const auto g = load_input(path);
  const auto b = betti(g);
  if (n < 1) fail(kUsage, "usage", "--n must be at least 1");
  if (!g.connected()) fail(kInput, "precondition", "graph is disconnected");
  if (b < 2) fail(kInput, "precondition", "first Betti number must be at least 2 (got " + std::to_string(b) + ")");
  if (static_cast<std::size_t>(n) > b) {
    fail(kUsage, "usage", "--n must not exceed the first Betti number " + std::to_string(b));
  }
  const auto cert = independent_based_loops(g, static_cast<unsigned>(n));
  const auto doc = certificate_document(g, cert);
  const auto report = verify_certificate_document(g, doc);
  emit(doc, out_path);
  if (!report.ok) fail(kFailed, "verification", report.failures.front());
  std::cerr << "certificate verified: " << cert.n << " loops at vertex " << cert.base << ", branch "
            << to_string(cert.branch) << ", max length/bound " << std::setprecision(6) << report.max_ratio << "\n";
  return kOk;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path) {
  const auto g = load_input(graph_path);
  std::string text;
  try {
    text = read_text_file(cert_path);
  } catch (const std::exception& ex) {
    fail(kInput, "io", ex.what());
  }
  const auto report = verify_certificate_document(g, text);
  if (!report.ok) {
    for (const auto& f : report.failures) std::cout << "FAIL " << f << "\n";
    fail(kFailed, "verification", report.failures.front());
  }
  std::cout << "OK max length/bound " << std::setprecision(6) << report.max_ratio << "\n";
  return kOk;
}

int cmd_verify_batch(const BatchOptions& options, const std::string& policy_text, bool quiet) {
  BatchOptions opts = options;
  try {
    opts.policy = parse_n_policy(policy_text);
  } catch (const std::invalid_argument& ex) {
    fail(kUsage, "usage", ex.what());
  }
  if (opts.b_min < 2 || opts.b_max < opts.b_min) fail(kUsage, "usage", "need 2 <= --b-min <= --b-max");

  const auto summary = run_batch(opts);
  std::cout << "# batch seed " << opts.seed << " count " << opts.count << " b in [" << opts.b_min << ", "
            << opts.b_max << "] rng " << kRngAlgorithm << "\n";
  std::cout << "# index graph_seed b v law n branch max_length bound ratio status\n";
  for (const auto& inst : summary.instances) {
    for (const auto& r : inst.runs) {
      if (quiet && r.ok) continue;
      std::cout << inst.instance.index << " " << inst.instance.graph_seed << " " << inst.instance.b << " "
                << inst.instance.v << " " << inst.instance.law << " " << r.n << " " << to_string(r.branch) << " "
                << std::setprecision(8) << r.max_length << " " << r.bound << " " << r.max_ratio << " "
                << (r.ok ? "pass" : "FAIL: " + r.failure) << "\n";
    }
    if (!inst.bst_holds) {
      std::cout << inst.instance.index << " bst FAIL: " << inst.bst_lhs << " > " << inst.bst_rhs << "\n";
    }
  }
  std::cout << "# runs " << summary.runs << " failures " << summary.failures << " max_ratio " << std::setprecision(8)
            << summary.max_ratio << "\n";
  if (!summary.ok()) fail(kFailed, "verification", std::to_string(summary.failures) + " failing checks");
  return kOk;
}

int cmd_growth(long rank, long radius) {
  if (rank < 1) fail(kUsage, "usage", "--rank must be at least 1");
  if (radius < 0) fail(kUsage, "usage", "--radius must be non-negative");
  std::cout << free_ball_size(static_cast<unsigned>(rank), static_cast<unsigned>(radius)).get_str() << "\n";
  return kOk;
}

int cmd_oracle_systole(const std::string& path) {
  const auto g = load_input(path);
  if (betti(g) == 0) fail(kInput, "precondition", "graph is a forest; no systole");
  std::cout << "brute_systole: " << exact(brute_systole(g)) << "\n";
  return kOk;
}

int cmd_oracle_rank(const std::string& path, const std::string& budget_text, std::optional<long> base,
                    std::uint64_t cap) {
  const auto g = load_input(path);
  const auto budget = parse_length_arg(budget_text, "--budget");
  if (base) {
    if (*base < 0 || static_cast<std::size_t>(*base) >= g.vertex_count()) fail(kUsage, "usage", "--base out of range");
    const auto r = max_rank_under_budget(g, static_cast<VertexId>(*base), budget, cap);
    std::cout << "rank: " << r.rank << "\nbase: " << *base << "\n";
    for (const auto& l : r.witness) std::cout << "loop: " << exact(l.length) << " steps " << render_walk(l.steps) << "\n";
    return kOk;
  }
  const auto best = best_base_rank(g, budget, cap);
  std::cout << "rank: " << best.rank << "\nbase: " << best.base << "\n";
  for (const auto& l : best.witness) std::cout << "loop: " << exact(l.length) << " steps " << render_walk(l.steps) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sgt: systoles, Betti numbers and short independent based loops of metric graphs"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string out_path;

  auto* info = app.add_subcommand("info", "Vertices, edges, Betti number, length, systole and the systole bound");
  info->add_option("graph", graph_path, "Graph document")->required();

  auto* sys = app.add_subcommand("systole", "Exact systole and a systolic cycle");
  sys->add_option("graph", graph_path, "Graph document")->required();

  long n = 0;
  auto* loops = app.add_subcommand("loops", "n independent loops at one base point, with a verified certificate");
  loops->add_option("graph", graph_path, "Graph document")->required();
  loops->add_option("--n", n, "Number of loops")->required();
  loops->add_option("--out", out_path, "Write the certificate here instead of stdout");

  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "Re-check a certificate against its graph");
  verify->add_option("graph", graph_path, "Graph document")->required();
  verify->add_option("certificate", cert_path, "Certificate document")->required();

  BatchOptions batch;
  batch.threads = std::max(1u, std::thread::hardware_concurrency());
  std::string policy = "one,log,half,full";
  std::string out_dir;
  bool quiet = false;
  auto* vb = app.add_subcommand("verify-batch", "Certify loops on seeded random graphs");
  vb->add_option("--count", batch.count, "Number of graphs")->required();
  vb->add_option("--seed", batch.seed, "Batch seed")->required();
  vb->add_option("--b-min", batch.b_min, "Smallest Betti number")->capture_default_str();
  vb->add_option("--b-max", batch.b_max, "Largest Betti number")->capture_default_str();
  vb->add_option("--n-policy", policy, "Comma list of one, log, half, full")->capture_default_str();
  vb->add_option("--out-dir", out_dir, "Write graphs and certificates to this directory");
  vb->add_option("--threads", batch.threads, "Worker threads")->capture_default_str();
  vb->add_flag("--quiet", quiet, "Only print failing rows");

  auto* gen = app.add_subcommand("gen", "Generate graph documents");
  gen->require_subcommand(1);
  unsigned star_m = 0, star_p = 0;
  std::string star_L, star_l;
  auto* star = gen->add_subcommand("star", "Star of bouquets: q bouquets of p circles on spokes of length L");
  star->add_option("--m", star_m, "First Betti number")->required();
  star->add_option("--p", star_p, "Circles per bouquet")->required();
  star->add_option("--L", star_L, "Spoke length")->required();
  star->add_option("--l", star_l, "Total length of each bouquet")->required();
  star->add_option("--out", out_path, "Output path");

  unsigned bouquet_b = 0;
  std::string bouquet_len = "1";
  std::vector<std::string> bouquet_lengths;
  auto* bouquet = gen->add_subcommand("bouquet", "Wedge of circles");
  bouquet->add_option("--b", bouquet_b, "Number of circles");
  bouquet->add_option("--length", bouquet_len, "Common circle length")->capture_default_str();
  bouquet->add_option("--lengths", bouquet_lengths, "Individual circle lengths");
  bouquet->add_option("--out", out_path, "Output path");

  unsigned rand_v = 0, rand_b = 0;
  std::uint64_t rand_seed = 0;
  std::string law = "unit";
  double lo = 0.1, hi = 10.0;
  bool normalized = false;
  auto* rnd = gen->add_subcommand("random", "Random spanning tree plus b extra edges");
  rnd->add_option("--v", rand_v, "Vertices")->required();
  rnd->add_option("--b", rand_b, "Extra edges (first Betti number)")->required();
  rnd->add_option("--seed", rand_seed, "Seed")->required();
  rnd->add_option("--law", law, "unit or uniform")->check(CLI::IsMember({"unit", "uniform"}))->capture_default_str();
  rnd->add_option("--lo", lo, "Uniform law lower end")->capture_default_str();
  rnd->add_option("--hi", hi, "Uniform law upper end")->capture_default_str();
  rnd->add_flag("--normalize", normalized, "Scale to total length b");
  rnd->add_option("--out", out_path, "Output path");

  unsigned sharp_b = 0, sharp_n = 0;
  double lambda = 24.0;
  auto* sharp = gen->add_subcommand("sharp", "Star of bouquets showing the loop bound is nearly sharp");
  sharp->add_option("--b", sharp_b, "First Betti number")->required();
  sharp->add_option("--n", sharp_n, "Number of loops")->required();
  sharp->add_option("--lambda", lambda, "Scale of the bound")->capture_default_str();
  sharp->add_option("--out", out_path, "Output path");

  auto* oracle = app.add_subcommand("oracle", "Brute-force ground truth for small graphs");
  oracle->require_subcommand(1);
  auto* osys = oracle->add_subcommand("systole", "Minimum over all simple cycles");
  osys->add_option("graph", graph_path, "Graph document")->required();
  std::string budget;
  std::optional<long> base;
  std::uint64_t cap = default_expansion_cap();
  auto* orank = oracle->add_subcommand("rank", "Rank of all based loops within a length budget");
  orank->add_option("graph", graph_path, "Graph document")->required();
  orank->add_option("--budget", budget, "Length budget")->required();
  orank->add_option("--base", base, "Base vertex (default: best over all vertices)");
  orank->add_option("--cap", cap, "Expansion cap (also SGT_ORACLE_CAP)");

  long g_rank = 0, g_radius = 0;
  auto* growth = app.add_subcommand("growth", "Size of the radius-R ball in the free group of rank K");
  growth->add_option("--rank", g_rank, "Rank K")->required();
  growth->add_option("--radius", g_radius, "Radius R")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*info) return cmd_info(graph_path);
    if (*sys) return cmd_systole(graph_path);
    if (*loops) return cmd_loops(graph_path, n, out_path);
    if (*verify) return cmd_verify(graph_path, cert_path);
    if (*vb) {
      if (!out_dir.empty()) batch.out_dir = out_dir;
      return cmd_verify_batch(batch, policy, quiet);
    }
    if (*growth) return cmd_growth(g_rank, g_radius);
    if (*star) {
      StarParams params{star_m, star_p, parse_length_arg(star_L, "--L"), parse_length_arg(star_l, "--l")};
      try {
        params.validate();
      } catch (const std::invalid_argument& ex) {
        fail(kUsage, "usage", ex.what());
      }
      emit(to_document(gen_star(params)), out_path);
      return kOk;
    }
    if (*bouquet) {
      std::vector<Rational> lengths;
      for (const auto& s : bouquet_lengths) lengths.push_back(parse_length_arg(s, "--lengths"));
      if (lengths.empty()) {
        if (bouquet_b < 1) fail(kUsage, "usage", "--b must be at least 1");
        lengths.assign(bouquet_b, parse_length_arg(bouquet_len, "--length"));
      } else if (bouquet_b != 0 && bouquet_b != lengths.size()) {
        fail(kUsage, "usage", "--b disagrees with the number of --lengths");
      }
      emit(to_document(gen_bouquet(lengths)), out_path);
      return kOk;
    }
    if (*rnd) {
      if (rand_v < 1) fail(kUsage, "usage", "--v must be at least 1");
      const LengthLaw length_law = law == "unit" ? LengthLaw{UnitLengths{}} : LengthLaw{UniformLengths{lo, hi}};
      auto g = gen_random(rand_v, rand_b, rand_seed, length_law);
      if (normalized) {
        if (rand_b == 0) fail(kUsage, "usage", "cannot normalize a tree");
        g = normalize(g).graph;
      }
      emit(to_document(g), out_path);
      return kOk;
    }
    if (*sharp) {
      SharpnessParams params;
      try {
        params = sharpness_params(sharp_b, sharp_n, lambda);
      } catch (const std::invalid_argument& ex) {
        fail(kUsage, "usage", ex.what());
      }
      if (!params.applicable) {
        fail(kUsage, "not-applicable",
             "b < floor(lambda (ln b + n)) + 1; every graph satisfies the claim (p = " + std::to_string(params.p) + ")");
      }
      emit(to_document(gen_star(params.star(sharp_b))), out_path);
      return kOk;
    }
    if (*osys) return cmd_oracle_systole(graph_path);
    if (*orank) return cmd_oracle_rank(graph_path, budget, base, cap);
  } catch (const CliError& ex) {
    std::cerr << "sgt: error: " << ex.reason << ": " << ex.message << "\n";
    return ex.code;
  } catch (const OracleLimitError& ex) {
    std::cerr << "sgt: error: oracle-limit: " << ex.what() << "\n";
    return kFailed;
  } catch (const InternalError& ex) {
    std::cerr << "sgt: error: internal: " << ex.what() << "\n";
    return kInternal;
  } catch (const GraphError& ex) {
    std::cerr << "sgt: error: precondition: " << ex.what() << "\n";
    return kInput;
  } catch (const std::exception& ex) {
    std::cerr << "sgt: error: runtime: " << ex.what() << "\n";
    return kInput;
  }
  return kUsage;
}
