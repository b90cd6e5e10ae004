#pragma once

#include "parrig/graph.hpp"

#include <vector>

namespace parrig {

/// 3-cycle, canonical: a < b < c.
struct Triangle {
  Vertex a, b, c;
  bool operator==(const Triangle& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator<(const Triangle& o) const;
};

/// 4-cycle a-b-c-d, canonical: a is the smallest vertex and b < d.
struct Quad {
  Vertex a, b, c, d;
  bool operator==(const Quad& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator<(const Quad& o) const;
};

Quad make_canonical_quad(Vertex a, Vertex b, Vertex c, Vertex d);

struct CycleList {
  std::vector<Triangle> triangles;      // sorted
  std::vector<Quad> induced_quads;      // sorted
};

/// Every 3-cycle and every chordless 4-cycle, each exactly once.
CycleList enumerate_cycles(const Graph& g);

}  // namespace parrig
