#include "parrig/product.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace parrig {

std::vector<QuotientGraph> quotient_graphs(const Graph& g, const APCPartition& classes) {
  require_connected(g, "quotient_graphs");
  if (static_cast<int>(classes.class_of_edge.size()) != g.edge_count())
    throw std::invalid_argument("class partition does not match the graph's edge set");
  if (classes.size() < 2)
    throw std::invalid_argument("quotient_graphs: at least two classes required");

  const int n = g.vertex_count();
  std::vector<QuotientGraph> out;
  out.reserve(static_cast<size_t>(classes.size()));
  for (int cls = 0; cls < classes.size(); ++cls) {
    DisjointSet dsu(n);
    for (int e = 0; e < g.edge_count(); ++e) {
      if (classes.class_of_edge[static_cast<size_t>(e)] == cls) continue;
      const Edge& edge = g.edge(e);
      dsu.unite(g.index_of(edge.u), g.index_of(edge.v));
    }
    // component ids ordered by smallest contained vertex (vertices are sorted)
    std::vector<int> id_of_root(static_cast<size_t>(n), -1);
    std::vector<Vertex> representative;
    std::vector<int> component_of(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      int root = dsu.find(i);
      if (id_of_root[static_cast<size_t>(root)] < 0) {
        id_of_root[static_cast<size_t>(root)] = static_cast<int>(representative.size());
        representative.push_back(g.vertex_at(i));
      }
      component_of[static_cast<size_t>(i)] = id_of_root[static_cast<size_t>(root)];
    }

    std::vector<Edge> quotient_edges;
    for (int idx : classes.classes[static_cast<size_t>(cls)]) {
      const Edge& edge = g.edge(idx);
      int cu = component_of[static_cast<size_t>(g.index_of(edge.u))];
      int cv = component_of[static_cast<size_t>(g.index_of(edge.v))];
      if (cu == cv)
        throw std::invalid_argument("quotient_graphs: class " + std::to_string(cls) +
                                    " is not an edge cut");
      quotient_edges.push_back(Edge{cu, cv});
    }
    std::sort(quotient_edges.begin(), quotient_edges.end());
    quotient_edges.erase(std::unique(quotient_edges.begin(), quotient_edges.end()),
                         quotient_edges.end());
    std::vector<std::pair<Vertex, Vertex>> edge_pairs;
    edge_pairs.reserve(quotient_edges.size());
    for (const Edge& e : quotient_edges) edge_pairs.emplace_back(e.u, e.v);

    QuotientGraph q;
    q.class_id = cls;
    q.graph = Graph::from_edges(edge_pairs);
    q.component_of = std::move(component_of);
    q.representative = std::move(representative);
    out.push_back(std::move(q));
  }
  return out;
}

ProductEmbedding embed(const Graph& g, const APCPartition& classes,
                       const std::vector<QuotientGraph>& quotients) {
  if (static_cast<int>(quotients.size()) != classes.size())
    throw std::invalid_argument("embed: one quotient per class required");
  const int n = g.vertex_count();

  ProductEmbedding embedding;
  embedding.coords.assign(static_cast<size_t>(n), std::vector<int>(quotients.size()));
  for (int i = 0; i < n; ++i)
    for (size_t k = 0; k < quotients.size(); ++k)
      embedding.coords[static_cast<size_t>(i)][k] = quotients[k].component_of[static_cast<size_t>(i)];

  // homomorphism: an edge of class r moves coordinate r along a quotient edge
  // and keeps every other coordinate fixed
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    int r = classes.class_of_edge[static_cast<size_t>(e)];
    const auto& cu = embedding.coords[static_cast<size_t>(g.index_of(edge.u))];
    const auto& cv = embedding.coords[static_cast<size_t>(g.index_of(edge.v))];
    for (size_t k = 0; k < quotients.size(); ++k) {
      bool same = cu[k] == cv[k];
      if (static_cast<int>(k) == r) {
        if (same || quotients[k].graph.edge_index(cu[k], cv[k]) < 0)
          throw std::runtime_error("embed: edge does not project to a quotient edge");
      } else if (!same) {
        throw std::runtime_error("embed: edge moves a foreign coordinate");
      }
    }
  }

  std::vector<std::vector<int>> sorted = embedding.coords;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::runtime_error("embed: image is not injective");

  for (const QuotientGraph& q : quotients) {
    embedding.projection_sizes.push_back(q.graph.vertex_count());
    if (q.graph.vertex_count() < 2)
      throw std::runtime_error("embed: a projection uses fewer than two values");
  }
  return embedding;
}

}  // namespace parrig
