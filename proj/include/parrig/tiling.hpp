#pragma once

#include "parrig/framework.hpp"
#include "parrig/graph.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace parrig {

/// Exact scalar (p + q*sqrt(3)) / 4. Every coordinate of all nine tilings
/// lives on this lattice, and so do hexagon centers added by augmentation.
struct ExactPoint {
  std::int64_t p = 0;
  std::int64_t q = 0;

  bool operator==(const ExactPoint& o) const { return p == o.p && q == o.q; }
  ExactPoint operator+(const ExactPoint& o) const { return {p + o.p, q + o.q}; }
  ExactPoint operator-(const ExactPoint& o) const { return {p - o.p, q - o.q}; }
  double to_double() const;
};

struct ExactCoord {
  ExactPoint x;
  ExactPoint y;

  bool operator==(const ExactCoord& o) const { return x == o.x && y == o.y; }
  ExactCoord operator+(const ExactCoord& o) const { return {x + o.x, y + o.y}; }
  ExactCoord operator-(const ExactCoord& o) const { return {x - o.x, y - o.y}; }
  Vec2 to_vec2() const;
};

struct PatchVertexInfo {
  std::pair<int, int> cell;  // lattice cell that first produced the vertex
  std::string role;          // motif vertex label, "aug" for hexagon centers
  ExactCoord coord;
};

struct Patch {
  Framework framework;
  std::string tiling;
  int extent = 0;
  bool augmented = false;
  std::unordered_map<Vertex, PatchVertexInfo> provenance;
  std::vector<Edge> augmented_edges;  // flagged so renderers can hide them
  std::vector<std::string> warnings;
};

/// Supported tiling names.
const std::vector<std::string>& tiling_names();

/// Deterministic patch of the named tiling. extent >= 1 is the patch radius
/// in fundamental-domain cells. Throws on unknown names (message lists the
/// supported ones) and extent < 1.
Patch generate_patch(const std::string& name, int extent);

/// Adds one center vertex per empty unit-hexagon face, joined to three
/// alternating corners. Returns the input (plus a warning) when the patch
/// has no hexagonal faces. Idempotent: augmented hexagons are no longer
/// empty.
Patch augment_hexagons(const Patch& patch);

}  // namespace parrig
