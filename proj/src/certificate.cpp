#include "sgt/certificate.hpp"

#include <cmath>
#include <cstdint>

#include "sgt/graph_io.hpp"
#include "sgt/numeric.hpp"

namespace sgt {
namespace {

using nlohmann::json;

json rational_json(const Rational& r) { return to_string(r); }

json loop_json(const BasedLoop& loop) {
  json steps = json::array();
  for (auto s : loop.steps) steps.push_back(json::array({s.edge, s.forward ? 1 : -1}));
  return json{{"length", rational_json(loop.length)}, {"length_float", to_double(loop.length)}, {"steps", steps}};
}

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mod_mul(r, a);
    a = mod_mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t to_mod(std::int64_t x) {
  const auto m = static_cast<std::int64_t>(kPrime);
  auto r = x % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

/// Square integer matrix is nonsingular modulo 2^61 - 1. A nonzero
/// determinant mod p implies a nonzero determinant over Q.
bool nonsingular_mod_p(std::vector<std::vector<std::int64_t>> in) {
  const std::size_t n = in.size();
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = to_mod(in[i][j]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(a[p], a[c]);
    const auto inv = mod_pow(a[c][c], kPrime - 2);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const auto f = mod_mul(a[i][c], inv);
      for (std::size_t j = c; j < n; ++j) a[i][j] = (a[i][j] + kPrime - mod_mul(f, a[c][j])) % kPrime;
    }
  }
  return true;
}

bool nonsingular_exact(const std::vector<std::vector<std::int64_t>>& in) {
  const std::size_t n = in.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(static_cast<long>(in[i][j]));
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(a[p], a[c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return true;
}

}  // namespace

json certificate_to_json(const MetricGraph& g, const LoopCertificate& cert, const json& extra) {
  json doc;
  doc["format"] = kCertificateFormat;
  doc["graph_hash"] = content_hash(g);
  doc["betti"] = cert.betti;
  doc["n"] = cert.n;
  doc["base"] = cert.base;
  doc["total_length"] = rational_json(cert.total_length);
  doc["total_length_float"] = to_double(cert.total_length);
  doc["bound"] = cert.bound;
  doc["branch"] = to_string(cert.branch);
  json loops = json::array();
  for (const auto& l : cert.loops) loops.push_back(loop_json(l));
  doc["loops"] = loops;
  doc["rank"] = cert.rank_certificate.rank;
  doc["pivot_edges"] = cert.rank_certificate.pivots;
  if (cert.cluster) {
    const auto& c = *cert.cluster;
    json shorts = json::array();
    for (std::size_t i = 0; i < c.short_cycle_lengths.size(); ++i) {
      shorts.push_back({{"length", rational_json(c.short_cycle_lengths[i])},
                        {"length_float", to_double(c.short_cycle_lengths[i])},
                        {"deleted_edge", c.deleted_edges[i]}});
    }
    doc["cluster"] = {{"threshold", rational_json(c.threshold)},
                      {"threshold_float", to_double(c.threshold)},
                      {"cluster_index", c.cluster_index},
                      {"center", c.center},
                      {"cluster_sizes", c.cluster_sizes},
                      {"short_cycles", shorts},
                      {"short_cycle_rank", c.short_cycle_rank},
                      {"short_cycle_bound", c.short_cycle_bound}};
  } else {
    doc["cluster"] = nullptr;
  }
  for (const auto& [k, v] : extra.items()) doc[k] = v;
  return doc;
}

std::string certificate_document(const MetricGraph& g, const LoopCertificate& cert, const json& extra) {
  return certificate_to_json(g, cert, extra).dump(2) + "\n";
}

VerifyReport verify_certificate_document(const MetricGraph& g, std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& ex) {
    VerifyReport r;
    r.fail(std::string("certificate is not valid JSON: ") + ex.what());
    return r;
  }
  return verify_certificate(g, doc);
}

VerifyReport verify_certificate(const MetricGraph& g, const json& doc) {
  VerifyReport report;
  try {
    if (doc.value("format", "") != kCertificateFormat) report.fail("unknown certificate format");
    if (doc.at("graph_hash").get<std::string>() != content_hash(g)) {
      report.fail("certificate belongs to a different graph");
      return report;
    }
    const auto b = g.edge_count() + g.component_count() - g.vertex_count();
    if (g.component_count() != 1) report.fail("graph is not connected");
    if (doc.at("betti").get<std::size_t>() != b) report.fail("recorded Betti number is wrong");
    const auto n = doc.at("n").get<std::size_t>();
    const auto base = doc.at("base").get<std::size_t>();
    const auto& loops = doc.at("loops");
    if (n < 1 || n > b) report.fail("n outside [1, b]");
    if (loops.size() != n) report.fail("expected " + std::to_string(n) + " loops, found " + std::to_string(loops.size()));
    if (base >= g.vertex_count()) {
      report.fail("base vertex does not exist");
      return report;
    }

    Rational total = 0;
    for (const auto& e : g.edges()) total += e.length;
    const double bound = 24.0 * (std::log(static_cast<double>(b)) + static_cast<double>(n)) * total.get_d() /
                         static_cast<double>(b);
    const double stated = doc.at("bound").get<double>();
    if (std::abs(stated - bound) > 1e-9 * std::max(1.0, bound)) report.fail("recorded bound disagrees with 24(ln b + n) L / b");

    std::vector<std::vector<std::int64_t>> vectors;
    for (std::size_t i = 0; i < loops.size(); ++i) {
      const auto& loop = loops[i];
      const std::string tag = "loop " + std::to_string(i) + ": ";
      std::vector<std::int64_t> vec(g.edge_count(), 0);
      std::size_t at = base;
      Rational length = 0;
      bool walkable = true;
      for (const auto& step : loop.at("steps")) {
        const auto id = step.at(0).get<std::size_t>();
        const auto dir = step.at(1).get<int>();
        if (id >= g.edge_count() || (dir != 1 && dir != -1)) {
          report.fail(tag + "malformed step");
          walkable = false;
          break;
        }
        const auto& e = g.edges()[id];
        const std::size_t from = dir == 1 ? e.u : e.v;
        const std::size_t to = dir == 1 ? e.v : e.u;
        if (from != at) {
          report.fail(tag + "step along edge " + std::to_string(id) + " does not continue the walk");
          walkable = false;
          break;
        }
        at = to;
        vec[id] += dir;
        length += e.length;
      }
      if (!walkable) continue;
      if (at != base) report.fail(tag + "walk does not return to the base");
      if (length != parse_rational(loop.at("length").get<std::string>())) report.fail(tag + "length does not re-sum");
      if (!within_bound(length, bound)) {
        report.fail(tag + "length " + to_string(length) + " exceeds bound " + std::to_string(bound));
      }
      report.max_ratio = std::max(report.max_ratio, length.get_d() / bound);
      vectors.push_back(std::move(vec));
    }

    const auto pivots = doc.at("pivot_edges").get<std::vector<std::size_t>>();
    if (doc.at("rank").get<std::size_t>() != n) report.fail("recorded rank differs from n");
    if (pivots.size() != n || vectors.size() != n) {
      report.fail("pivot witness has the wrong size");
    } else {
      std::vector<std::vector<std::int64_t>> minor(n, std::vector<std::int64_t>(n));
      bool in_range = true;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (pivots[j] >= g.edge_count()) {
            in_range = false;
            break;
          }
          minor[i][j] = vectors[i][pivots[j]];
        }
      }
      if (!in_range) {
        report.fail("pivot edge out of range");
      } else if (!nonsingular_mod_p(minor) && !nonsingular_exact(minor)) {
        report.fail("loops restricted to the pivot edges are singular; independence not witnessed");
      }
    }
  } catch (const std::exception& ex) {
    report.fail(std::string("malformed certificate: ") + ex.what());
  }
  return report;
}

}  // namespace sgt
