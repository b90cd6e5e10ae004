#pragma once

#include "parrig/apc.hpp"
#include "parrig/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace parrig {

enum class Color : std::uint8_t { Red, Blue };

/// Red/blue edge coloring, aligned with the graph's edge indices.
struct EdgeColoring {
  std::vector<Color> color;

  bool surjective() const;
  int red_count() const;
};

struct NacVerdict {
  bool ok = false;
  std::string reason;  // set when !ok
  /// Cycle with exactly one edge of some color (closed, first == last).
  std::vector<Vertex> witness_cycle;
  /// Vertex pair joined by both a red and a blue path.
  std::optional<std::pair<Vertex, Vertex>> witness_pair;
};

/// Surjective and no cycle has exactly one edge of either color. Checked via
/// components: every red edge must join distinct blue components and vice
/// versa.
NacVerdict is_nac(const Graph& g, const EdgeColoring& coloring);

/// NAC and no vertex pair is joined by both a red and a blue path, i.e.
/// v -> (red component, blue component) is injective.
NacVerdict is_cartesian_nac(const Graph& g, const EdgeColoring& coloring);

/// Equivalent characterization: every chordless non-monochromatic cycle has
/// at least three color changes. Enumerates chordless cycles, so it refuses
/// graphs with more than max_vertices vertices.
NacVerdict verify_color_changes(const Graph& g, const EdgeColoring& coloring,
                                int max_vertices = 16);

/// The 2^(l-1) - 1 surjective class-monochromatic colorings, one per proper
/// nonempty class subset up to red/blue swap (class 0 is always blue).
/// Throws when the class count exceeds max_classes.
std::vector<EdgeColoring> colorings_from_apc(const Graph& g, const APCPartition& classes,
                                             int max_classes = 20);

}  // namespace parrig
