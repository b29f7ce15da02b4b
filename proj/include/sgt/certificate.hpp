#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sgt/graph.hpp"
#include "sgt/loops.hpp"

namespace sgt {

inline constexpr std::string_view kCertificateFormat = "sgt-loop-certificate/1";

/// Structured certificate: graph hash, base, per-loop steps as [edge, +1|-1]
/// pairs, exact lengths as fraction strings next to float approximations,
/// pivot edges, bound and branch. `extra` is merged in at the top level.
nlohmann::json certificate_to_json(const MetricGraph& g, const LoopCertificate& cert,
                                   const nlohmann::json& extra = nlohmann::json::object());

std::string certificate_document(const MetricGraph& g, const LoopCertificate& cert,
                                 const nlohmann::json& extra = nlohmann::json::object());

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> failures;
  double max_ratio = 0.0;  // largest loop length / bound

  void fail(std::string why) {
    ok = false;
    failures.push_back(std::move(why));
  }
};

/// Re-checks a certificate document from scratch against the graph: content
/// hash, closure of every walk, exact lengths, the bound, and independence of
/// the loops (non-vanishing minor on the pivot edges). Shares no code with the
/// construction beyond the graph model.
VerifyReport verify_certificate(const MetricGraph& g, const nlohmann::json& doc);
VerifyReport verify_certificate_document(const MetricGraph& g, std::string_view document);

}  // namespace sgt
