#include "sgt/graph_io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include <json.hpp>

namespace sgt {
namespace {

using nlohmann::json;

Rational length_from_json(const json& value, std::size_t index) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& ex) {
      throw GraphError("edge entry " + std::to_string(index) + ": " + ex.what());
    }
  }
  if (value.is_number_integer()) return Rational(value.get<long>());
  throw GraphError("edge entry " + std::to_string(index) + ": length must be a decimal or fraction string");
}

std::uint64_t unsigned_field(const json& obj, const char* key, std::size_t index) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw GraphError("edge entry " + std::to_string(index) + " is missing '" + key + "'");
  }
  if (!it->is_number_integer() || it->get<long long>() < 0) {
    throw GraphError("edge entry " + std::to_string(index) + ": '" + key + "' must be a non-negative integer");
  }
  return it->get<std::uint64_t>();
}

MetricGraph load_structured(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& ex) {
    throw GraphError(std::string("malformed graph document: ") + ex.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
    throw GraphError("graph document needs 'vertices' and 'edges'");
  }
  if (!doc["vertices"].is_number_integer() || doc["vertices"].get<long long>() < 0) {
    throw GraphError("'vertices' must be a non-negative integer");
  }
  if (!doc["edges"].is_array()) throw GraphError("'edges' must be an array");

  const auto vertex_count = doc["vertices"].get<std::size_t>();
  std::vector<Edge> edges;
  std::size_t index = 0;
  for (const auto& entry : doc["edges"]) {
    if (!entry.is_object()) throw GraphError("edge entry " + std::to_string(index) + " is not an object");
    if (!entry.contains("length")) {
      throw GraphError("edge entry " + std::to_string(index) + " is missing 'length'");
    }
    Edge e;
    e.id = static_cast<EdgeId>(unsigned_field(entry, "id", index));
    auto u = unsigned_field(entry, "u", index);
    auto v = unsigned_field(entry, "v", index);
    if (u >= vertex_count || v >= vertex_count) {
      throw GraphError("edge " + std::to_string(e.id) + " has a dangling endpoint");
    }
    e.u = static_cast<VertexId>(u);
    e.v = static_cast<VertexId>(v);
    e.length = length_from_json(entry["length"], index);
    edges.push_back(std::move(e));
    ++index;
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].id == edges[i - 1].id) throw GraphError("duplicate edge id " + std::to_string(edges[i].id));
  }
  return MetricGraph(vertex_count, std::move(edges));
}

MetricGraph load_edge_list(std::string_view document) {
  std::istringstream in{std::string(document)};
  std::string line;
  std::vector<Edge> edges;
  std::size_t vertex_count = 0;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string su, sv, sl, extra;
    if (!(fields >> su)) continue;
    if (!(fields >> sv >> sl) || (fields >> extra)) {
      throw GraphError("line " + std::to_string(line_no) + ": expected 'u v length'");
    }
    Edge e;
    try {
      auto u = std::stoull(su);
      auto v = std::stoull(sv);
      if (su.find_first_not_of("0123456789") != std::string::npos ||
          sv.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("endpoint");
      }
      e.u = static_cast<VertexId>(u);
      e.v = static_cast<VertexId>(v);
      e.length = parse_rational(sl);
    } catch (const std::exception& ex) {
      throw GraphError("line " + std::to_string(line_no) + ": " + ex.what());
    }
    e.id = static_cast<EdgeId>(edges.size());
    vertex_count = std::max<std::size_t>({vertex_count, e.u + std::size_t{1}, e.v + std::size_t{1}});
    edges.push_back(std::move(e));
  }
  return MetricGraph(vertex_count, std::move(edges));
}

}  // namespace

MetricGraph load_graph(std::string_view document) {
  auto first = document.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && document[first] == '{') return load_structured(document);
  return load_edge_list(document);
}

MetricGraph load_graph_file(const std::filesystem::path& path) { return load_graph(read_text_file(path)); }

std::string to_document(const MetricGraph& g) {
  std::ostringstream out;
  out << "{\n  \"vertices\": " << g.vertex_count() << ",\n  \"edges\": [";
  for (const auto& e : g.edges()) {
    out << (e.id == 0 ? "\n" : ",\n");
    out << "    {\"id\": " << e.id << ", \"u\": " << e.u << ", \"v\": " << e.v << ", \"length\": \""
        << to_string(e.length) << "\"}";
  }
  out << (g.edge_count() ? "\n  ]\n}\n" : "]\n}\n");
  return out.str();
}

void save_graph_file(const MetricGraph& g, const std::filesystem::path& path) {
  write_text_file(path, to_document(g));
}

std::string sha256_hex(std::string_view data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int size = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &size) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::ostringstream hex;
  hex << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < size; ++i) hex << std::setw(2) << static_cast<int>(digest[i]);
  return hex.str();
}

std::string content_hash(const MetricGraph& g) { return sha256_hex(to_document(g)); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace sgt
