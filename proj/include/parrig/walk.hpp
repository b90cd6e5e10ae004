#pragma once

#include "parrig/apc.hpp"
#include "parrig/framework.hpp"

#include <vector>

namespace parrig {

/// BFS spanning tree. Vectors are indexed by dense vertex index.
struct SpanningTree {
  Vertex root = -1;
  std::vector<Vertex> parent;      // parent vertex id; root maps to itself
  std::vector<int> parent_edge;    // edge index to parent; -1 for root
  std::vector<int> depth;
  std::vector<bool> edge_in_tree;  // by edge index
};

SpanningTree bfs_spanning_tree(const Graph& g, Vertex root);

struct WalkViolation {
  std::vector<Vertex> cycle;  // closed walk, first vertex repeated at the end
  int closing_edge = -1;      // the non-tree edge index
  int class_id = -1;          // class whose vector sum fails to vanish
  Vec2 sum;                   // the offending sum
};

struct WalkIndependenceReport {
  bool independent = false;
  std::vector<WalkViolation> violations;
  SpanningTree tree;
};

/// Per-class vector sums over closed walks must vanish. Verified on the
/// fundamental cycles of a BFS tree rooted at the smallest vertex id, by
/// accumulating per-class sums z_r along tree paths. With strong=true every
/// class appearing on the cycle is checked; strong=false checks only the
/// class of the closing edge.
WalkIndependenceReport check_walk_independence(const Framework& fw, const APCPartition& classes,
                                               bool strong = true);

/// Oracle: checks the defining condition on an explicit enumeration of all
/// simple cycles. Throws when the cycle count exceeds max_cycles.
WalkIndependenceReport brute_force_walk_independence(const Framework& fw,
                                                     const APCPartition& classes,
                                                     long max_cycles = 2000000);

}  // namespace parrig
