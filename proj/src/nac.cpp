#include "parrig/nac.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace parrig {

bool EdgeColoring::surjective() const {
  bool red = false, blue = false;
  for (Color c : color) (c == Color::Red ? red : blue) = true;
  return red && blue;
}

int EdgeColoring::red_count() const {
  return static_cast<int>(std::count(color.begin(), color.end(), Color::Red));
}

namespace {

void require_coloring_match(const Graph& g, const EdgeColoring& coloring) {
  if (static_cast<int>(coloring.color.size()) != g.edge_count())
    throw std::invalid_argument("coloring does not match the graph's edge set");
}

/// Component labels induced by the edges of one color.
std::vector<int> color_components(const Graph& g, const EdgeColoring& coloring, Color c) {
  DisjointSet dsu(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    if (coloring.color[static_cast<size_t>(e)] != c) continue;
    const Edge& edge = g.edge(e);
    dsu.unite(g.index_of(edge.u), g.index_of(edge.v));
  }
  std::vector<int> label(static_cast<size_t>(g.vertex_count()));
  for (int i = 0; i < g.vertex_count(); ++i) label[static_cast<size_t>(i)] = dsu.find(i);
  return label;
}

/// Path from u to v using only edges of one color; empty when none exists.
std::vector<Vertex> monochromatic_path(const Graph& g, const EdgeColoring& coloring, Color c,
                                       Vertex u, Vertex v) {
  std::vector<int> prev(static_cast<size_t>(g.vertex_count()), -2);
  prev[static_cast<size_t>(g.index_of(u))] = -1;
  std::deque<Vertex> queue = {u};
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (x == v) break;
    for (Vertex y : g.neighbors(x)) {
      int e = g.edge_index(x, y);
      if (coloring.color[static_cast<size_t>(e)] != c) continue;
      size_t yi = static_cast<size_t>(g.index_of(y));
      if (prev[yi] != -2) continue;
      prev[yi] = x;
      queue.push_back(y);
    }
  }
  if (prev[static_cast<size_t>(g.index_of(v))] == -2) return {};
  std::vector<Vertex> path;
  for (Vertex x = v; x != -1; x = prev[static_cast<size_t>(g.index_of(x))]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

const char* color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

}  // namespace

NacVerdict is_nac(const Graph& g, const EdgeColoring& coloring) {
  require_coloring_match(g, coloring);
  NacVerdict verdict;
  if (!coloring.surjective()) {
    verdict.reason = "coloring is not surjective";
    return verdict;
  }
  for (Color own : {Color::Red, Color::Blue}) {
    Color other = own == Color::Red ? Color::Blue : Color::Red;
    std::vector<int> comp = color_components(g, coloring, other);
    for (int e = 0; e < g.edge_count(); ++e) {
      if (coloring.color[static_cast<size_t>(e)] != own) continue;
      const Edge& edge = g.edge(e);
      if (comp[static_cast<size_t>(g.index_of(edge.u))] !=
          comp[static_cast<size_t>(g.index_of(edge.v))])
        continue;
      // cycle with exactly one `own` edge: the other-colored path plus e
      verdict.reason = std::string("cycle with exactly one ") + color_name(own) + " edge";
      verdict.witness_cycle = monochromatic_path(g, coloring, other, edge.u, edge.v);
      verdict.witness_cycle.push_back(edge.u);
      return verdict;
    }
  }
  verdict.ok = true;
  return verdict;
}

NacVerdict is_cartesian_nac(const Graph& g, const EdgeColoring& coloring) {
  NacVerdict verdict = is_nac(g, coloring);
  if (!verdict.ok) return verdict;
  std::vector<int> red = color_components(g, coloring, Color::Red);
  std::vector<int> blue = color_components(g, coloring, Color::Blue);
  std::vector<int> order(static_cast<size_t>(g.vertex_count()));
  for (int i = 0; i < g.vertex_count(); ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    size_t ai = static_cast<size_t>(a), bi = static_cast<size_t>(b);
    if (red[ai] != red[bi]) return red[ai] < red[bi];
    return blue[ai] < blue[bi];
  });
  for (size_t i = 0; i + 1 < order.size(); ++i) {
    size_t ai = static_cast<size_t>(order[i]), bi = static_cast<size_t>(order[i + 1]);
    if (red[ai] != red[bi] || blue[ai] != blue[bi]) continue;
    Vertex u = g.vertex_at(order[i]), v = g.vertex_at(order[i + 1]);
    if (u > v) std::swap(u, v);
    verdict.ok = false;
    verdict.reason = "two vertices joined by both a red and a blue path";
    verdict.witness_pair = {u, v};
    return verdict;
  }
  return verdict;
}

namespace {

struct ChordlessEnumerator {
  const Graph& g;
  const EdgeColoring& coloring;
  NacVerdict& verdict;
  std::vector<Vertex> path;
  std::vector<bool> on_path;
  bool done = false;

  bool adjacent(Vertex a, Vertex b) const { return g.edge_index(a, b) >= 0; }

  /// Color changes around the closed cycle; 2 changes on a non-monochromatic
  /// chordless cycle is the violation we are looking for.
  void emit(Vertex start) {
    std::vector<Color> ring;
    ring.reserve(path.size());
    for (size_t i = 0; i + 1 < path.size(); ++i)
      ring.push_back(coloring.color[static_cast<size_t>(g.edge_index(path[i], path[i + 1]))]);
    ring.push_back(coloring.color[static_cast<size_t>(g.edge_index(path.back(), start))]);
    int changes = 0;
    for (size_t i = 0; i < ring.size(); ++i)
      if (ring[i] != ring[(i + 1) % ring.size()]) ++changes;
    if (changes == 0 || changes >= 3) return;
    verdict.ok = false;
    verdict.reason = "chordless non-monochromatic cycle with fewer than three color changes";
    verdict.witness_cycle = path;
    verdict.witness_cycle.push_back(start);
    done = true;
  }

  void extend(Vertex start) {
    if (done) return;
    Vertex last = path.back();
    bool must_close = path.size() >= 3 && adjacent(last, start);
    for (Vertex y : g.neighbors(last)) {
      if (done) return;
      if (y == start) {
        if (path.size() >= 3 && path[1] < last) emit(start);
        continue;
      }
      if (must_close) continue;  // any extension would leave the chord (last,start)
      if (y < start || on_path[static_cast<size_t>(g.index_of(y))]) continue;
      bool chord = false;  // y may touch only `last` (and start, which forces closing)
      for (size_t i = 1; i + 1 < path.size(); ++i)
        if (adjacent(y, path[i])) {
          chord = true;
          break;
        }
      if (chord) continue;
      path.push_back(y);
      on_path[static_cast<size_t>(g.index_of(y))] = true;
      extend(start);
      on_path[static_cast<size_t>(g.index_of(y))] = false;
      path.pop_back();
    }
  }
};

}  // namespace

NacVerdict verify_color_changes(const Graph& g, const EdgeColoring& coloring,
                                int max_vertices) {
  require_coloring_match(g, coloring);
  if (g.vertex_count() > max_vertices)
    throw std::length_error(
        "verify_color_changes: graph too large for chordless cycle enumeration");
  NacVerdict verdict;
  if (!coloring.surjective()) {
    verdict.reason = "coloring is not surjective";
    return verdict;
  }
  verdict.ok = true;
  ChordlessEnumerator enumerator{g, coloring, verdict,
                                 {},
                                 std::vector<bool>(static_cast<size_t>(g.vertex_count()), false)};
  for (Vertex start : g.vertices()) {
    if (enumerator.done) break;
    enumerator.path = {start};
    enumerator.on_path[static_cast<size_t>(g.index_of(start))] = true;
    enumerator.extend(start);
    enumerator.on_path[static_cast<size_t>(g.index_of(start))] = false;
  }
  return verdict;
}

std::vector<EdgeColoring> colorings_from_apc(const Graph& g, const APCPartition& classes,
                                             int max_classes) {
  if (static_cast<int>(classes.class_of_edge.size()) != g.edge_count())
    throw std::invalid_argument("class partition does not match the graph's edge set");
  if (classes.size() > max_classes)
    throw std::length_error("colorings_from_apc: too many classes to enumerate");
  std::vector<EdgeColoring> out;
  if (classes.size() < 2) return out;
  const unsigned long top = 1ul << (classes.size() - 1);
  for (unsigned long mask = 1; mask < top; ++mask) {
    EdgeColoring coloring;
    coloring.color.resize(static_cast<size_t>(g.edge_count()), Color::Blue);
    for (int e = 0; e < g.edge_count(); ++e) {
      int cls = classes.class_of_edge[static_cast<size_t>(e)];
      // bit k of mask governs class k+1; class 0 stays blue
      if (cls > 0 && (mask >> (cls - 1)) & 1ul)
        coloring.color[static_cast<size_t>(e)] = Color::Red;
    }
    out.push_back(std::move(coloring));
  }
  return out;
}

}  // namespace parrig
