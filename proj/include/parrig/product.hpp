#pragma once

#include "parrig/apc.hpp"
#include "parrig/graph.hpp"

#include <vector>

namespace parrig {

/// Quotient along one class: nodes are the connected components of the graph
/// with that class removed, joined when some class edge links them.
/// Component ids are assigned by smallest contained vertex.
struct QuotientGraph {
  int class_id = -1;
  Graph graph;                         // vertex ids = component ids 0..k-1
  std::vector<int> component_of;       // by dense vertex index of the source graph
  std::vector<Vertex> representative;  // smallest source vertex per component
};

/// One quotient per class. Requires >= 2 classes; throws when some class is
/// not an edge cut (cannot happen for verified walk-independent frameworks).
std::vector<QuotientGraph> quotient_graphs(const Graph& g, const APCPartition& classes);

struct ProductEmbedding {
  /// h(v) = (component in Q_1, ..., component in Q_l), by dense vertex index.
  std::vector<std::vector<int>> coords;
  std::vector<int> projection_sizes;  // distinct values per coordinate
};

/// Injective homomorphism of the graph into the Cartesian product of its
/// quotients; every projection uses >= 2 values. Violations of these
/// guarantees are internal errors and throw.
ProductEmbedding embed(const Graph& g, const APCPartition& classes,
                       const std::vector<QuotientGraph>& quotients);

}  // namespace parrig
