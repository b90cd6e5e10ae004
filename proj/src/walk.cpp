#include "parrig/walk.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace parrig {

SpanningTree bfs_spanning_tree(const Graph& g, Vertex root) {
  require_connected(g, "spanning tree construction");
  if (!g.has_vertex(root)) throw std::invalid_argument("spanning tree root not in graph");
  const size_t n = static_cast<size_t>(g.vertex_count());
  SpanningTree tree;
  tree.root = root;
  tree.parent.assign(n, -1);
  tree.parent_edge.assign(n, -1);
  tree.depth.assign(n, -1);
  tree.edge_in_tree.assign(static_cast<size_t>(g.edge_count()), false);

  std::deque<Vertex> queue = {root};
  size_t ri = static_cast<size_t>(g.index_of(root));
  tree.parent[ri] = root;
  tree.depth[ri] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    size_t vi = static_cast<size_t>(g.index_of(v));
    for (Vertex w : g.neighbors(v)) {
      size_t wi = static_cast<size_t>(g.index_of(w));
      if (tree.depth[wi] >= 0) continue;
      tree.depth[wi] = tree.depth[vi] + 1;
      tree.parent[wi] = v;
      int e = g.edge_index(v, w);
      tree.parent_edge[wi] = e;
      tree.edge_in_tree[static_cast<size_t>(e)] = true;
      queue.push_back(w);
    }
  }
  return tree;
}

namespace {

// Sparse per-class vector sums along the tree path from the root, kept
// sorted by class id. One entry is touched per tree edge.
template <typename V>
using ClassSums = std::vector<std::pair<int, V>>;

template <typename V>
void add_to(ClassSums<V>& sums, int cls, const V& delta) {
  auto it = std::lower_bound(sums.begin(), sums.end(), cls,
                             [](const auto& entry, int c) { return entry.first < c; });
  if (it != sums.end() && it->first == cls) {
    it->second = it->second + delta;
  } else {
    sums.insert(it, {cls, delta});
  }
}

template <typename V>
const V* lookup(const ClassSums<V>& sums, int cls) {
  auto it = std::lower_bound(sums.begin(), sums.end(), cls,
                             [](const auto& entry, int c) { return entry.first < c; });
  if (it != sums.end() && it->first == cls) return &it->second;
  return nullptr;
}

struct FloatKernel {
  const Framework& fw;
  using V = Vec2;
  V pos(Vertex v) const { return fw.pos(v); }
  bool is_zero(const V& x) const { return x.norm() <= fw.tol.eps; }
  static Vec2 report(const V& x) { return x; }
  static V subtract(const V& a, const V& b) { return a - b; }
};

struct ExactKernel {
  const Framework& fw;
  using V = RatVec2;
  V pos(Vertex v) const { return *fw.placement.exact_at(v); }
  bool is_zero(const V& x) const { return x.is_zero(); }
  static Vec2 report(const V& x) { return {to_double(x.x), to_double(x.y)}; }
  static V subtract(const V& a, const V& b) { return a - b; }
};

std::vector<Vertex> fundamental_cycle(const Graph& g, const SpanningTree& tree, Vertex u,
                                      Vertex v) {
  // closed walk: u -> v along the tree, then the edge (v,u)
  std::vector<Vertex> up, down;
  Vertex a = u, b = v;
  int da = tree.depth[static_cast<size_t>(g.index_of(a))];
  int db = tree.depth[static_cast<size_t>(g.index_of(b))];
  while (da > db) {
    up.push_back(a);
    a = tree.parent[static_cast<size_t>(g.index_of(a))];
    --da;
  }
  while (db > da) {
    down.push_back(b);
    b = tree.parent[static_cast<size_t>(g.index_of(b))];
    --db;
  }
  while (a != b) {
    up.push_back(a);
    down.push_back(b);
    a = tree.parent[static_cast<size_t>(g.index_of(a))];
    b = tree.parent[static_cast<size_t>(g.index_of(b))];
  }
  up.push_back(a);  // the meeting vertex
  std::vector<Vertex> cycle = std::move(up);
  for (auto it = down.rbegin(); it != down.rend(); ++it) cycle.push_back(*it);
  cycle.push_back(u);  // close the walk
  return cycle;
}

template <typename Kernel>
WalkIndependenceReport check_impl(const Framework& fw, const APCPartition& classes, bool strong,
                                  const Kernel& kernel) {
  using V = typename Kernel::V;
  const Graph& g = fw.graph;
  WalkIndependenceReport report;
  report.tree = bfs_spanning_tree(g, g.vertices().front());
  const SpanningTree& tree = report.tree;
  const size_t n = static_cast<size_t>(g.vertex_count());

  // z tables, accumulated top-down in BFS depth order
  std::vector<ClassSums<V>> z(n);
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return tree.depth[a] < tree.depth[b];
  });
  for (size_t idx : order) {
    if (tree.parent_edge[idx] < 0) continue;  // root
    Vertex v = g.vertex_at(static_cast<int>(idx));
    Vertex p = tree.parent[idx];
    size_t pi = static_cast<size_t>(g.index_of(p));
    z[idx] = z[pi];
    int cls = classes.class_of_edge[static_cast<size_t>(tree.parent_edge[idx])];
    add_to(z[idx], cls, Kernel::subtract(kernel.pos(v), kernel.pos(p)));
  }

  for (int e = 0; e < g.edge_count(); ++e) {
    if (tree.edge_in_tree[static_cast<size_t>(e)]) continue;
    const Edge& edge = g.edge(e);
    Vertex u = edge.u, v = edge.v;
    size_t ui = static_cast<size_t>(g.index_of(u));
    size_t vi = static_cast<size_t>(g.index_of(v));
    int r = classes.class_of_edge[static_cast<size_t>(e)];

    // classes to inspect: r always; with the strong check also every class
    // present on the tree path (i.e. in either endpoint's table)
    std::vector<int> keys = {r};
    if (strong) {
      for (const auto& [cls, sum] : z[ui])
        if (cls != r) keys.push_back(cls);
      for (const auto& [cls, sum] : z[vi])
        if (cls != r && !lookup(z[ui], cls)) keys.push_back(cls);
    }

    std::vector<Vertex> cycle;  // built lazily, shared by this edge's violations
    for (int cls : keys) {
      const V* zu = lookup(z[ui], cls);
      const V* zv = lookup(z[vi], cls);
      V diff{};
      if (zu && zv)
        diff = Kernel::subtract(*zv, *zu);
      else if (zv)
        diff = *zv;
      else if (zu)
        diff = Kernel::subtract(V{}, *zu);
      // class-restricted sum over the closed walk u ->tree-> v ->edge-> u
      V walk_sum = diff;
      if (cls == r) walk_sum = walk_sum + Kernel::subtract(kernel.pos(u), kernel.pos(v));
      if (kernel.is_zero(walk_sum)) continue;
      if (cycle.empty()) cycle = fundamental_cycle(g, tree, u, v);
      WalkViolation violation;
      violation.cycle = cycle;
      violation.closing_edge = e;
      violation.class_id = cls;
      violation.sum = Kernel::report(walk_sum);
      report.violations.push_back(std::move(violation));
    }
  }
  report.independent = report.violations.empty();
  return report;
}

}  // namespace

WalkIndependenceReport check_walk_independence(const Framework& fw, const APCPartition& classes,
                                               bool strong) {
  require_connected(fw.graph, "check_walk_independence");
  if (static_cast<int>(classes.class_of_edge.size()) != fw.graph.edge_count())
    throw std::invalid_argument("class partition does not match the graph's edge set");
  if (fw.exact_mode()) return check_impl(fw, classes, strong, ExactKernel{fw});
  return check_impl(fw, classes, strong, FloatKernel{fw});
}

namespace {

template <typename Kernel>
void check_cycle(const Framework& fw, const APCPartition& classes, const Kernel& kernel,
                 const std::vector<Vertex>& cycle, WalkIndependenceReport& report) {
  using V = typename Kernel::V;
  const Graph& g = fw.graph;
  ClassSums<V> sums;
  for (size_t i = 0; i + 1 < cycle.size(); ++i) {
    int e = g.edge_index(cycle[i], cycle[i + 1]);
    int cls = classes.class_of_edge[static_cast<size_t>(e)];
    add_to(sums, cls, Kernel::subtract(kernel.pos(cycle[i + 1]), kernel.pos(cycle[i])));
  }
  for (const auto& [cls, sum] : sums) {
    if (kernel.is_zero(sum)) continue;
    WalkViolation violation;
    violation.cycle = cycle;
    violation.closing_edge = g.edge_index(cycle[cycle.size() - 2], cycle.back());
    violation.class_id = cls;
    violation.sum = Kernel::report(sum);
    report.violations.push_back(std::move(violation));
  }
}

// Enumerates every simple cycle exactly once: paths rooted at their smallest
// vertex, emitted only in one direction.
template <typename Kernel>
void enumerate_cycles_from(const Framework& fw, const APCPartition& classes,
                           const Kernel& kernel, Vertex start, std::vector<Vertex>& path,
                           std::vector<bool>& on_path, long& budget, long max_cycles,
                           WalkIndependenceReport& report) {
  const Graph& g = fw.graph;
  Vertex current = path.back();
  for (Vertex next : g.neighbors(current)) {
    if (next == start && path.size() >= 3) {
      if (path[1] < current) {  // canonical direction
        if (++budget > max_cycles)
          throw std::length_error("brute-force walk check: too many simple cycles");
        std::vector<Vertex> cycle = path;
        cycle.push_back(start);
        check_cycle(fw, classes, kernel, cycle, report);
      }
    } else if (next > start && !on_path[static_cast<size_t>(g.index_of(next))]) {
      path.push_back(next);
      on_path[static_cast<size_t>(g.index_of(next))] = true;
      enumerate_cycles_from(fw, classes, kernel, start, path, on_path, budget, max_cycles,
                            report);
      on_path[static_cast<size_t>(g.index_of(next))] = false;
      path.pop_back();
    }
  }
}

template <typename Kernel>
WalkIndependenceReport brute_impl(const Framework& fw, const APCPartition& classes,
                                  const Kernel& kernel, long max_cycles) {
  const Graph& g = fw.graph;
  WalkIndependenceReport report;
  long budget = 0;
  std::vector<bool> on_path(static_cast<size_t>(g.vertex_count()), false);
  for (Vertex start : g.vertices()) {
    std::vector<Vertex> path = {start};
    on_path[static_cast<size_t>(g.index_of(start))] = true;
    enumerate_cycles_from(fw, classes, kernel, start, path, on_path, budget, max_cycles,
                          report);
    on_path[static_cast<size_t>(g.index_of(start))] = false;
  }
  report.independent = report.violations.empty();
  return report;
}

}  // namespace

WalkIndependenceReport brute_force_walk_independence(const Framework& fw,
                                                     const APCPartition& classes,
                                                     long max_cycles) {
  require_connected(fw.graph, "brute_force_walk_independence");
  if (static_cast<int>(classes.class_of_edge.size()) != fw.graph.edge_count())
    throw std::invalid_argument("class partition does not match the graph's edge set");
  if (fw.exact_mode()) return brute_impl(fw, classes, ExactKernel{fw}, max_cycles);
  return brute_impl(fw, classes, FloatKernel{fw}, max_cycles);
}

}  // namespace parrig
