#pragma once

#include "parrig/framework.hpp"
#include "parrig/graph.hpp"

#include <vector>

namespace parrig {

/// Union-find with union by rank, path compression and a live set counter.
class DisjointSet {
 public:
  explicit DisjointSet(int n);
  int find(int x) const;
  /// Returns true when two sets were merged.
  bool unite(int a, int b);
  int set_count() const { return sets_; }
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  mutable std::vector<int> parent_;
  std::vector<int> rank_;
  int sets_;
};

/// Partition of the edge set. Class ids are canonical: classes are ordered
/// by their smallest edge index, and edge indices within a class are sorted.
struct APCPartition {
  std::vector<int> class_of_edge;          // by edge index
  std::vector<std::vector<int>> classes;   // edge indices per class

  int size() const { return static_cast<int>(classes.size()); }
};

using RibbonPartition = APCPartition;

/// Angle-preserving classes: the finest partition merging edges that share a
/// 3-cycle and opposite edges of any 4-cycle subgraph. Near-linear time.
/// With early_stop, returns as soon as a single class is certain.
APCPartition compute_apc(const Graph& g, bool early_stop = false);

/// Closure under the 4-cycle relation alone.
RibbonPartition compute_ribbons(const Graph& g);

/// Non-adjacent vertex pair with >= 3 common neighbors, three of which are
/// pairwise non-adjacent: an induced K_{2,3}. Its presence certifies that no
/// parallelogram placement of the graph exists.
struct K2sEntry {
  Vertex u, v;                    // u < v, non-adjacent
  std::vector<Vertex> witnesses;  // all common neighbors, sorted
};

std::vector<K2sEntry> detect_induced_k2s(const Graph& g);

struct PFrameworkVerdict {
  bool is_p = false;
  bool placement_ok = false;
  /// When a ribbon fails to be an edge cut: its id and an edge of it whose
  /// endpoints stay connected after removing the ribbon.
  int offending_ribbon = -1;
  int offending_edge = -1;
  RibbonPartition ribbons;
};

/// Parallelogram placement + every ribbon an edge cut.
PFrameworkVerdict is_p_framework(const Framework& fw);

struct BraceSuggestion {
  bool possible = false;
  std::vector<Edge> braces;  // diagonals of chordless 4-cycles, lexicographic greedy
  /// When impossible: groups of class ids not joinable by any single diagonal.
  std::vector<std::vector<int>> unreachable_groups;
};

/// Minimum-cardinality set of diagonals whose insertion merges all classes
/// into one. Requires at least 2 classes.
BraceSuggestion suggest_braces(const Graph& g, const APCPartition& classes);

}  // namespace parrig
