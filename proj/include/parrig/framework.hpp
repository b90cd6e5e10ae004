#pragma once

#include "parrig/exact.hpp"
#include "parrig/geometry.hpp"
#include "parrig/graph.hpp"

#include <unordered_map>

namespace parrig {

/// Assignment of plane positions to vertex ids. Exact rational coordinates
/// may be carried alongside the double view; exact-mode operations use them.
class Placement {
 public:
  void set(Vertex v, Vec2 p);
  void set_exact(Vertex v, RatVec2 p);  // keeps the double view in sync

  bool has(Vertex v) const { return pos_.count(v) > 0; }
  Vec2 at(Vertex v) const;
  /// nullptr when the vertex has no exact coordinates.
  const RatVec2* exact_at(Vertex v) const;
  bool covers(const Graph& g) const;
  bool fully_exact(const Graph& g) const;
  size_t size() const { return pos_.size(); }

 private:
  std::unordered_map<Vertex, Vec2> pos_;
  std::unordered_map<Vertex, RatVec2> exact_;
};

struct Framework {
  Graph graph;
  Placement placement;
  ToleranceConfig tol;

  /// Validates structural invariants: placement covers every vertex,
  /// tolerance config is coherent, exact mode has exact coordinates.
  static Framework make(Graph graph, Placement placement, ToleranceConfig tol = {});

  bool exact_mode() const { return tol.mode == NumericMode::ExactRational; }
  Vec2 pos(Vertex v) const { return placement.at(v); }
};

}  // namespace parrig
