#include "parrig/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace parrig {

std::uint64_t Graph::edge_key(Vertex u, Vertex v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

Graph Graph::from_edges(const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<Vertex> verts;
  for (auto [u, v] : edges) {
    verts.push_back(u);
    verts.push_back(v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  Graph g;
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) es.emplace_back(u, v);
  g.build(std::move(verts), std::move(es));
  return g;
}

Graph Graph::with_vertices(std::vector<Vertex> vertices,
                           const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::sort(vertices.begin(), vertices.end());
  auto dup = std::adjacent_find(vertices.begin(), vertices.end());
  if (dup != vertices.end())
    throw std::invalid_argument("duplicate vertex id " + std::to_string(*dup));
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) es.emplace_back(u, v);
  Graph g;
  g.build(std::move(vertices), std::move(es));
  return g;
}

void Graph::build(std::vector<Vertex> vertices, std::vector<Edge> edges) {
  verts_ = std::move(vertices);
  for (Vertex v : verts_) {
    if (v < 0) throw std::invalid_argument("vertex ids must be nonnegative");
    vert_index_.emplace(v, static_cast<int>(vert_index_.size()));
  }
  std::sort(edges.begin(), edges.end());
  for (size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (!vert_index_.count(e.u) || !vert_index_.count(e.v))
      throw std::invalid_argument("edge endpoint not in vertex set");
    if (i > 0 && edges[i - 1] == e)
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
  }
  edges_ = std::move(edges);
  adj_.assign(verts_.size(), {});
  for (size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adj_[static_cast<size_t>(index_of(e.u))].push_back(e.v);
    adj_[static_cast<size_t>(index_of(e.v))].push_back(e.u);
    edge_index_.emplace(edge_key(e.u, e.v), static_cast<int>(i));
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

int Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  if (u < 0) return -1;
  auto it = edge_index_.find(edge_key(u, v));
  return it == edge_index_.end() ? -1 : it->second;
}

int Graph::index_of(Vertex v) const {
  auto it = vert_index_.find(v);
  return it == vert_index_.end() ? -1 : it->second;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  int i = index_of(v);
  if (i < 0) throw std::invalid_argument("unknown vertex " + std::to_string(v));
  return adj_[static_cast<size_t>(i)];
}

int Graph::max_degree() const {
  size_t d = 0;
  for (const auto& nbrs : adj_) d = std::max(d, nbrs.size());
  return static_cast<int>(d);
}

bool Graph::is_connected() const {
  if (verts_.empty()) return false;
  std::vector<bool> seen(verts_.size(), false);
  std::vector<int> stack = {0};
  seen[0] = true;
  size_t visited = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (Vertex w : adj_[static_cast<size_t>(i)]) {
      int j = index_of(w);
      if (!seen[static_cast<size_t>(j)]) {
        seen[static_cast<size_t>(j)] = true;
        ++visited;
        stack.push_back(j);
      }
    }
  }
  return visited == verts_.size();
}

void require_connected(const Graph& g, const char* operation) {
  if (!g.is_connected())
    throw std::invalid_argument(std::string(operation) + " requires a connected, nonempty graph");
}

}  // namespace parrig
