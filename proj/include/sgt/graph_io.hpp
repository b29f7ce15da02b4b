#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sgt/graph.hpp"

namespace sgt {

/// Reads a graph document. Two forms are accepted:
///
///   {"vertices": 3, "edges": [{"id": 0, "u": 0, "v": 1, "length": "3/2"}, ...]}
///
/// or plain edge-list lines "u v length" ('#' starts a comment), in which case
/// edge ids follow line order and the vertex count is one more than the
/// largest endpoint. Lengths are decimal ("1.5") or fraction ("3/2") strings.
MetricGraph load_graph(std::string_view document);
MetricGraph load_graph_file(const std::filesystem::path& path);

/// Canonical structured form, edges sorted by id, one edge per line.
std::string to_document(const MetricGraph& g);
void save_graph_file(const MetricGraph& g, const std::filesystem::path& path);

/// Lowercase hex SHA-256 of to_document(g).
std::string content_hash(const MetricGraph& g);

std::string sha256_hex(std::string_view data);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace sgt
