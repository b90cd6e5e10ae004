#pragma once

#include "parrig/apc.hpp"
#include "parrig/flex.hpp"
#include "parrig/framework.hpp"
#include "parrig/nac.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace parrig {

/// Cyclic symmetry of order n: a vertex permutation generating Z_n, paired
/// with the counterclockwise rotation by 2*pi/n about the origin.
struct CyclicAction {
  int n = 0;
  std::unordered_map<Vertex, Vertex> omega;

  Vertex apply(Vertex v, int k = 1) const;
};

struct CnValidation {
  bool valid = false;
  std::vector<std::string> problems;
  std::vector<Vertex> invariant_vertices;  // fixed by omega, sorted
};

/// Graph side: omega is an automorphism of order exactly n, invariant
/// vertices form an independent set, partially invariant vertices are
/// invariant. Geometry side: rho(omega v) = Theta rho(v) and invariant
/// vertices sit at the origin.
CnValidation validate_cn_symmetric(const Framework& fw, const CyclicAction& action);

struct CnAPCPartition {
  APCPartition base;                     // plain angle-preserving classes
  std::vector<int> cn_class_of;          // by base class id
  std::vector<std::vector<int>> classes; // base class ids per Cn-class, canonical order

  int size() const { return static_cast<int>(classes.size()); }
};

/// Coarsening of the classes under the action's edge orbits.
CnAPCPartition compute_cn_apc(const Graph& g, const CyclicAction& action);

/// Symmetric flex: all classes of a Cn-class share one angle, and the
/// center of gravity of the base vertex orbit is subtracted, which makes the
/// result equivariant. t has one angle per Cn-class, t[0] == 0.
Placement evaluate_cn_flex(const FlexParametrization& fp, const CyclicAction& action,
                           const CnAPCPartition& cn, const std::vector<double>& t);

/// NAC coloring that is invariant under the action and has no edge joining
/// two partially invariant components of either color subgraph.
NacVerdict is_cn_symmetric_nac(const Graph& g, const CyclicAction& action,
                               const EdgeColoring& coloring);

/// Builds the vertex permutation realized by rotating the placement by
/// 2*pi/n counterclockwise about the given center. Throws when the rotation
/// does not permute the vertex positions.
CyclicAction action_from_rotation(const Framework& fw, Vec2 center, int n);

/// Largest subframework closed under rotation about the center, translated
/// so the center becomes the origin. Useful for cutting symmetric windows
/// out of larger patches.
std::pair<Framework, CyclicAction> symmetric_restriction(const Framework& fw, Vec2 center,
                                                         int n);

}  // namespace parrig
