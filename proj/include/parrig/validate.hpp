#pragma once

#include "parrig/cycles.hpp"
#include "parrig/framework.hpp"

#include <vector>

namespace parrig {

struct ValidationReport {
  bool injective = true;
  std::vector<std::pair<Vertex, Vertex>> coincident_pairs;  // sorted
  std::vector<Quad> not_parallelogram;                      // chordless 4-cycles failing closure
  std::vector<Quad> degenerate_quads;                       // collinear or coincident corners

  bool valid() const {
    return injective && not_parallelogram.empty() && degenerate_quads.empty();
  }
};

/// Checks that the placement is injective and that every chordless 4-cycle
/// closes up as a non-degenerate parallelogram. Exact mode compares exactly.
ValidationReport validate_parallelogram_placement(const Framework& fw);

/// 3-cycles whose corners are collinear within tolerance (exact: exactly).
std::vector<Triangle> degenerate_triangles(const Framework& fw);

}  // namespace parrig
