#pragma once

#include "parrig/apc.hpp"
#include "parrig/framework.hpp"
#include "parrig/walk.hpp"

#include <optional>
#include <vector>

namespace parrig {

/// Decomposition of the placement into per-class displacement fields:
/// rho_i(v) sums the class-i edge vectors along a walk from the base vertex.
/// components[i] is indexed by dense vertex index.
struct FlexParametrization {
  Framework framework;
  APCPartition classes;
  Vertex base = -1;
  std::vector<std::vector<Vec2>> components;
  std::optional<std::vector<std::vector<RatVec2>>> exact_components;

  int class_count() const { return classes.size(); }
};

/// Requires walk-independence (verified internally; throws otherwise).
FlexParametrization decompose(const Framework& fw, const APCPartition& classes, Vertex base);

/// rho_t(v) = sum_i Rot(t_i) rho_i(v) with Rot the clockwise rotation.
/// t must have one angle per class and t[0] == 0.
Placement evaluate_flex(const FlexParametrization& fp, const std::vector<double>& t);

struct InfinitesimalFlex {
  int class_id = -1;
  std::vector<Vec2> velocity;  // by dense vertex index
};

/// phi(w) = R * rho_r(w), R the counterclockwise quarter turn. r must be a
/// non-base class (r != 0).
InfinitesimalFlex infinitesimal_flex(const FlexParametrization& fp, int r);

/// A velocity field is trivial when phi(v) = A rho(v) + b with A
/// skew-symmetric. Least-squares fit; returns the max residual when asked.
bool is_trivial_flex(const Framework& fw, const std::vector<Vec2>& velocity,
                     double* max_residual = nullptr);

struct RigidityVerdict {
  bool flexible = false;
  int class_count = 0;
  int dof = 0;  // class_count - 1 when flexible, else 0
  WalkIndependenceReport walk;
};

/// Rigid iff a walk-independent framework has a single class. Throws when
/// walk-independence fails (the verdict would not be meaningful).
RigidityVerdict rigidity_verdict(const Framework& fw);

/// |E| x 2|V| matrix with row (rho(u)-rho(v)) in u's columns and its
/// negative in v's columns. Row order = edge order, column order = dense
/// vertex order.
std::vector<std::vector<double>> rigidity_matrix(const Framework& fw);

/// Numeric rank: singular values above eps * sigma_max.
int rigidity_matrix_rank(const Framework& fw);

}  // namespace parrig
