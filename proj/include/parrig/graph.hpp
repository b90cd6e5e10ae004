#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace parrig {

using Vertex = int;

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = -1;
  Vertex v = -1;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
  bool operator<(const Edge& o) const { return u != o.u ? u < o.u : v < o.v; }
};

/// Simple undirected graph over nonnegative integer vertex ids.
/// Ids need not be contiguous; edges are kept sorted, so the index of an
/// edge in edges() is its canonical id.
class Graph {
 public:
  Graph() = default;

  /// Vertex set = endpoints of the given edges. Throws on loops and
  /// duplicate edges.
  static Graph from_edges(const std::vector<std::pair<Vertex, Vertex>>& edges);

  /// Explicit vertex set (isolated vertices allowed).
  static Graph with_vertices(std::vector<Vertex> vertices,
                             const std::vector<std::pair<Vertex, Vertex>>& edges);

  int vertex_count() const { return static_cast<int>(verts_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Vertex>& vertices() const { return verts_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[static_cast<size_t>(index)]; }

  bool has_vertex(Vertex v) const { return vert_index_.count(v) > 0; }
  bool has_edge(Vertex u, Vertex v) const { return edge_index(u, v) >= 0; }
  /// Index into edges(), or -1 when absent.
  int edge_index(Vertex u, Vertex v) const;
  /// Dense index into vertices(), or -1 when absent.
  int index_of(Vertex v) const;
  Vertex vertex_at(int dense_index) const { return verts_[static_cast<size_t>(dense_index)]; }

  /// Sorted neighbor list. Throws on unknown vertex.
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;

  bool is_connected() const;

 private:
  std::vector<Vertex> verts_;              // sorted ascending
  std::vector<Edge> edges_;                // sorted lexicographically
  std::vector<std::vector<Vertex>> adj_;   // by dense index, sorted
  std::unordered_map<Vertex, int> vert_index_;
  std::unordered_map<std::uint64_t, int> edge_index_;

  static std::uint64_t edge_key(Vertex u, Vertex v);
  void build(std::vector<Vertex> vertices, std::vector<Edge> edges);
};

/// Throws std::invalid_argument when the graph is disconnected or empty.
void require_connected(const Graph& g, const char* operation);

}  // namespace parrig
