#pragma once

#include "parrig/framework.hpp"

#include <optional>
#include <string>
#include <unordered_map>

namespace parrig {

struct SymmetryBlock {
  int n = 0;
  std::unordered_map<Vertex, Vertex> omega;
};

/// On-disk form of a framework: format tag, vertices with coordinates
/// (decimal or exact rational "p/q"), edge list, optional symmetry block,
/// optional free-form metadata (preserved verbatim as JSON text).
struct FrameworkDocument {
  std::string format = "parrig/1";
  Framework framework;
  std::optional<SymmetryBlock> symmetry;
  std::string metadata_json;  // empty = absent

  static FrameworkDocument wrap(Framework fw);
};

/// Throws std::invalid_argument with location context on malformed input:
/// bad JSON, unknown format, missing or non-finite coordinates, duplicate
/// ids or edges, loops, malformed rationals, bad symmetry blocks.
FrameworkDocument parse_document(const std::string& text);

/// Canonical serialization; parse followed by serialize is the identity on
/// canonical documents. Exact coordinates are written as "p/q" strings.
std::string serialize_document(const FrameworkDocument& doc);

FrameworkDocument load_document(const std::string& path);
void save_document(const FrameworkDocument& doc, const std::string& path);

}  // namespace parrig
