#pragma once

#include "parrig/apc.hpp"
#include "parrig/document.hpp"
#include "parrig/framework.hpp"
#include "parrig/graph.hpp"
#include "parrig/nac.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#ifndef PARRIG_DATA_DIR
#error "PARRIG_DATA_DIR must point at the corpus directory"
#endif

namespace testutil {

inline std::string data_path(const std::string& name) {
  return std::string(PARRIG_DATA_DIR) + "/" + name;
}

inline parrig::FrameworkDocument load_corpus(const std::string& name) {
  return parrig::load_document(data_path(name));
}

struct CorpusEntry {
  const char* file;
  int vertices;
  int edges;
  std::vector<int> class_sizes;  // ascending
  bool walk_independent;
  bool symmetric;
};

inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"c4.json", 4, 4, {2, 2}, true, false},
      {"eqclasses_left.json", 9, 15, {6, 9}, true, false},
      {"exflex.json", 9, 13, {3, 3, 7}, true, false},
      {"newframework.json", 14, 25, {5, 8, 12}, true, false},
      {"crossingprop_middle.json", 14, 25, {5, 8, 12}, false, false},
      {"pnottp.json", 20, 34, {4, 4, 6, 6, 7, 7}, true, false},
      {"symflex.json", 21, 39, {9, 12, 18}, true, true},
  };
  return entries;
}

inline std::vector<int> sorted_class_sizes(const parrig::APCPartition& p) {
  std::vector<int> sizes;
  sizes.reserve(p.classes.size());
  for (const auto& cls : p.classes) sizes.push_back(static_cast<int>(cls.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Order-free view of a partition for equality checks.
inline std::set<std::set<int>> partition_key(const parrig::APCPartition& p) {
  std::set<std::set<int>> key;
  for (const auto& cls : p.classes) key.insert(std::set<int>(cls.begin(), cls.end()));
  return key;
}

// ---------------------------------------------------------------------------
// Randomized instances. Every suite seeds its own engine so runs stay
// reproducible and independent of test order.

inline int rand_int(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline parrig::Graph random_connected_graph(std::mt19937& rng, int min_v = 4, int max_v = 12,
                                            int max_extra = 6) {
  int n = rand_int(rng, min_v, max_v);
  std::vector<std::pair<parrig::Vertex, parrig::Vertex>> edges;
  std::set<std::pair<int, int>> seen;
  for (int v = 1; v < n; ++v) {
    int u = rand_int(rng, 0, v - 1);
    edges.emplace_back(u, v);
    seen.insert({u, v});
  }
  int extra = rand_int(rng, 0, max_extra);
  for (int i = 0; i < extra; ++i) {
    int u = rand_int(rng, 0, n - 1);
    int v = rand_int(rng, 0, n - 1);
    if (u == v) continue;
    auto key = std::minmax(u, v);
    if (seen.count(key)) continue;
    seen.insert(key);
    edges.emplace_back(key.first, key.second);
  }
  return parrig::Graph::from_edges(edges);
}

inline parrig::Framework random_placed(std::mt19937& rng, const parrig::Graph& g) {
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  parrig::Placement pl;
  for (parrig::Vertex v : g.vertices()) pl.set(v, {coord(rng), coord(rng)});
  return parrig::Framework::make(g, pl);
}

inline parrig::EdgeColoring random_coloring(std::mt19937& rng, const parrig::Graph& g) {
  parrig::EdgeColoring c;
  c.color.resize(static_cast<size_t>(g.edge_count()));
  for (auto& col : c.color)
    col = rand_int(rng, 0, 1) ? parrig::Color::Red : parrig::Color::Blue;
  return c;
}

/// Cartesian product of two random trees, placed as a sheared grid:
/// pos(a,b) = A(a)*u + B(b)*w. Closed walks project to closed walks in each
/// tree, so the placement is walk-independent by construction.
inline parrig::Framework random_tree_product(std::mt19937& rng, int max_side = 4) {
  int n1 = rand_int(rng, 2, max_side);
  int n2 = rand_int(rng, 2, max_side);
  auto tree = [&](int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(rand_int(rng, 0, v - 1), v);
    return edges;
  };
  auto t1 = tree(n1);
  auto t2 = tree(n2);
  auto id = [&](int a, int b) { return a * n2 + b; };
  std::vector<std::pair<parrig::Vertex, parrig::Vertex>> edges;
  for (auto [a, a2] : t1)
    for (int b = 0; b < n2; ++b) edges.emplace_back(id(a, b), id(a2, b));
  for (auto [b, b2] : t2)
    for (int a = 0; a < n1; ++a) edges.emplace_back(id(a, b), id(a, b2));

  std::uniform_real_distribution<double> scale(0.5, 1.5);
  std::vector<double> A(static_cast<size_t>(n1)), B(static_cast<size_t>(n2));
  for (int a = 1; a < n1; ++a) A[static_cast<size_t>(a)] = A[a - 1] + scale(rng);
  for (int b = 1; b < n2; ++b) B[static_cast<size_t>(b)] = B[b - 1] + scale(rng);
  parrig::Vec2 u{1.0, 0.3}, w{-0.2, 1.0};
  parrig::Placement pl;
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b)
      pl.set(id(a, b), A[static_cast<size_t>(a)] * u + B[static_cast<size_t>(b)] * w);
  return parrig::Framework::make(parrig::Graph::from_edges(edges), pl);
}

// ---------------------------------------------------------------------------
// Oracles. Deliberately brute force and structurally unrelated to the
// library implementations.

/// Label propagation to a fixpoint over all triangles and all (not only
/// chordless) 4-cycles. O(n^4) per pass.
inline parrig::APCPartition naive_apc(const parrig::Graph& g) {
  int m = g.edge_count();
  std::vector<int> label(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) label[static_cast<size_t>(i)] = i;

  auto pull = [&](int a, int b) {
    int low = std::min(label[static_cast<size_t>(a)], label[static_cast<size_t>(b)]);
    bool changed = label[static_cast<size_t>(a)] != low || label[static_cast<size_t>(b)] != low;
    label[static_cast<size_t>(a)] = label[static_cast<size_t>(b)] = low;
    return changed;
  };

  const auto& vs = g.vertices();
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j) {
        if (!g.has_edge(vs[i], vs[j])) continue;
        for (size_t k = j + 1; k < vs.size(); ++k) {
          if (!g.has_edge(vs[i], vs[k]) || !g.has_edge(vs[j], vs[k])) continue;
          int e1 = g.edge_index(vs[i], vs[j]);
          int e2 = g.edge_index(vs[i], vs[k]);
          int e3 = g.edge_index(vs[j], vs[k]);
          changed |= pull(e1, e2);
          changed |= pull(e2, e3);
        }
      }
    // 4-cycles a-b-c-d: opposite edges merge
    for (parrig::Vertex a : vs)
      for (parrig::Vertex b : vs)
        for (parrig::Vertex c : vs)
          for (parrig::Vertex d : vs) {
            if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
            if (!g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(c, d) ||
                !g.has_edge(d, a))
              continue;
            changed |= pull(g.edge_index(a, b), g.edge_index(c, d));
            changed |= pull(g.edge_index(b, c), g.edge_index(d, a));
          }
  }

  // normalize labels into canonical class ids (ordered by smallest edge)
  parrig::APCPartition part;
  part.class_of_edge.assign(static_cast<size_t>(m), -1);
  std::map<int, int> first_seen;
  for (int e = 0; e < m; ++e) {
    int root = label[static_cast<size_t>(e)];
    auto [it, inserted] = first_seen.try_emplace(root, static_cast<int>(part.classes.size()));
    if (inserted) part.classes.emplace_back();
    part.class_of_edge[static_cast<size_t>(e)] = it->second;
    part.classes[static_cast<size_t>(it->second)].push_back(e);
  }
  return part;
}

/// All simple cycles as vertex lists (first vertex not repeated). DFS from
/// the smallest cycle vertex; throws std::length_error past the cap.
inline std::vector<std::vector<parrig::Vertex>> all_simple_cycles(const parrig::Graph& g,
                                                                  size_t cap = 500000) {
  std::vector<std::vector<parrig::Vertex>> cycles;
  const auto& vs = g.vertices();
  std::vector<parrig::Vertex> path;
  std::set<parrig::Vertex> on_path;

  auto dfs = [&](auto&& self, parrig::Vertex start, parrig::Vertex v) -> void {
    for (parrig::Vertex w : g.neighbors(v)) {
      if (w == start && path.size() >= 3) {
        // count each cycle once: direction fixed by second vertex < last
        if (path[1] < path.back()) {
          cycles.push_back(path);
          if (cycles.size() > cap) throw std::length_error("too many simple cycles");
        }
        continue;
      }
      if (w <= start || on_path.count(w)) continue;
      path.push_back(w);
      on_path.insert(w);
      self(self, start, w);
      path.pop_back();
      on_path.erase(w);
    }
  };

  for (parrig::Vertex s : vs) {
    path = {s};
    on_path = {s};
    dfs(dfs, s, s);
  }
  return cycles;
}

/// Definition-level NAC check: no simple cycle carries exactly one edge of
/// either color. Surjectivity checked first.
inline bool nac_by_cycle_enumeration(const parrig::Graph& g, const parrig::EdgeColoring& c) {
  if (!c.surjective()) return false;
  for (const auto& cyc : all_simple_cycles(g)) {
    int red = 0, blue = 0;
    for (size_t i = 0; i < cyc.size(); ++i) {
      int e = g.edge_index(cyc[i], cyc[(i + 1) % cyc.size()]);
      (c.color[static_cast<size_t>(e)] == parrig::Color::Red ? red : blue)++;
    }
    if (red == 1 || blue == 1) return false;
  }
  return true;
}

/// Re-evaluates a reported walk violation on the framework it came from.
inline parrig::Vec2 resum_class_on_cycle(const parrig::Framework& fw,
                                         const parrig::APCPartition& classes,
                                         const std::vector<parrig::Vertex>& closed_cycle,
                                         int class_id) {
  parrig::Vec2 sum{0.0, 0.0};
  for (size_t i = 0; i + 1 < closed_cycle.size(); ++i) {
    parrig::Vertex a = closed_cycle[i], b = closed_cycle[i + 1];
    int e = fw.graph.edge_index(a, b);
    if (e < 0) throw std::invalid_argument("witness cycle uses a non-edge");
    if (classes.class_of_edge[static_cast<size_t>(e)] != class_id) continue;
    sum += fw.pos(b) - fw.pos(a);
  }
  return sum;
}

}  // namespace testutil
