#include "parrig/apc.hpp"

#include "parrig/cycles.hpp"
#include "parrig/validate.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace parrig {

DisjointSet::DisjointSet(int n) : parent_(n), rank_(n, 0), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSet::find(int x) const {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSet::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --sets_;
  return true;
}

namespace {

// Key for an unordered vertex pair; ids fit in 32 bits.
std::uint64_t pair_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

struct PairEntry {
  Vertex first_witness;
  int count;
};

APCPartition partition_from_dsu(const Graph& g, const DisjointSet& dsu) {
  const int m = g.edge_count();
  APCPartition part;
  part.class_of_edge.assign(m, -1);
  // Classes in order of their smallest edge index; edge lists come out sorted
  // because edges are scanned in index order.
  std::unordered_map<int, int> root_to_class;
  for (int e = 0; e < m; ++e) {
    int root = dsu.find(e);
    auto [it, inserted] = root_to_class.emplace(root, static_cast<int>(part.classes.size()));
    if (inserted) part.classes.emplace_back();
    part.class_of_edge[e] = it->second;
    part.classes[it->second].push_back(e);
  }
  return part;
}

// Shared loop of the class computation. with_triangles distinguishes the
// full angle-preserving closure from the ribbon (4-cycle only) closure.
APCPartition closure_classes(const Graph& g, bool with_triangles, bool early_stop) {
  const int m = g.edge_count();
  DisjointSet dsu(std::max(m, 1));
  std::unordered_map<std::uint64_t, PairEntry> pair_table;
  if (m > 0) pair_table.reserve(static_cast<size_t>(m) * 2);

  auto done = [&] { return early_stop && m > 0 && dsu.set_count() == 1; };

  // Hubs are processed in ascending vertex order, so a triple {u,v,w} was
  // recorded by an earlier hub exactly when it spans a triangle and w is not
  // its smallest corner. That replaces the seen-triples table.
  for (Vertex w : g.vertices()) {
    const auto& nbrs = g.neighbors(w);
    for (size_t i = 0; i < nbrs.size(); ++i) {
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        Vertex u = nbrs[i], v = nbrs[j];
        int uw = g.edge_index(u, w);
        int vw = g.edge_index(v, w);
        if (with_triangles) {
          int uv = g.edge_index(u, v);
          if (uv >= 0 && (u < w || v < w)) {
            // repeated triangle triple: all three edges share one class
            dsu.unite(uv, vw);
            dsu.unite(vw, uw);
            if (done()) return partition_from_dsu(g, dsu);
            continue;
          }
        }
        // w is one more common neighbor of the pair {u,v}: the 4-cycle
        // u-w-v-w' pairs uw with vw' and vw with uw'. The third witness
        // additionally merges uw with vw, which chains every later witness
        // into a single class.
        auto [it, inserted] = pair_table.emplace(pair_key(u, v), PairEntry{w, 1});
        if (!inserted) {
          PairEntry& entry = it->second;
          Vertex w1 = entry.first_witness;
          dsu.unite(uw, g.edge_index(v, w1));
          dsu.unite(vw, g.edge_index(u, w1));
          if (entry.count == 2) dsu.unite(uw, vw);
          ++entry.count;
          if (done()) return partition_from_dsu(g, dsu);
        }
      }
    }
  }
  return partition_from_dsu(g, dsu);
}

}  // namespace

APCPartition compute_apc(const Graph& g, bool early_stop) {
  require_connected(g, "compute_apc");
  return closure_classes(g, true, early_stop);
}

RibbonPartition compute_ribbons(const Graph& g) {
  require_connected(g, "compute_ribbons");
  return closure_classes(g, false, false);
}

std::vector<K2sEntry> detect_induced_k2s(const Graph& g) {
  require_connected(g, "detect_induced_k2s");
  std::vector<K2sEntry> out;
  const auto& verts = g.vertices();
  for (size_t i = 0; i < verts.size(); ++i) {
    for (size_t j = i + 1; j < verts.size(); ++j) {
      Vertex u = verts[i], v = verts[j];
      if (g.has_edge(u, v)) continue;
      const auto& nu = g.neighbors(u);
      const auto& nv = g.neighbors(v);
      std::vector<Vertex> common;
      std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                            std::back_inserter(common));
      if (common.size() < 3) continue;
      // need three pairwise non-adjacent witnesses for an induced K_{2,3}
      bool found = false;
      for (size_t a = 0; a < common.size() && !found; ++a)
        for (size_t b = a + 1; b < common.size() && !found; ++b) {
          if (g.has_edge(common[a], common[b])) continue;
          for (size_t c = b + 1; c < common.size() && !found; ++c)
            if (!g.has_edge(common[a], common[c]) && !g.has_edge(common[b], common[c]))
              found = true;
        }
      if (found) out.push_back({u, v, std::move(common)});
    }
  }
  return out;
}

PFrameworkVerdict is_p_framework(const Framework& fw) {
  require_connected(fw.graph, "is_p_framework");
  PFrameworkVerdict verdict;
  verdict.placement_ok = validate_parallelogram_placement(fw).valid();
  verdict.ribbons = compute_ribbons(fw.graph);
  if (!verdict.placement_ok) return verdict;

  const Graph& g = fw.graph;
  const int n = g.vertex_count();
  // Each ribbon must be an edge cut: removing it separates the endpoints of
  // every one of its edges.
  for (int r = 0; r < verdict.ribbons.size(); ++r) {
    const auto& ribbon = verdict.ribbons.classes[static_cast<size_t>(r)];
    std::vector<bool> removed(static_cast<size_t>(g.edge_count()), false);
    for (int e : ribbon) removed[static_cast<size_t>(e)] = true;
    // component labels in G minus the ribbon
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
      if (comp[static_cast<size_t>(s)] >= 0) continue;
      std::vector<int> stack = {s};
      comp[static_cast<size_t>(s)] = ncomp;
      while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        Vertex vi = g.vertex_at(i);
        for (Vertex wv : g.neighbors(vi)) {
          int e = g.edge_index(vi, wv);
          if (removed[static_cast<size_t>(e)]) continue;
          int wi = g.index_of(wv);
          if (comp[static_cast<size_t>(wi)] < 0) {
            comp[static_cast<size_t>(wi)] = ncomp;
            stack.push_back(wi);
          }
        }
      }
      ++ncomp;
    }
    for (int e : ribbon) {
      const Edge& edge = g.edge(e);
      if (comp[static_cast<size_t>(g.index_of(edge.u))] ==
          comp[static_cast<size_t>(g.index_of(edge.v))]) {
        verdict.offending_ribbon = r;
        verdict.offending_edge = e;
        return verdict;
      }
    }
  }
  verdict.is_p = true;
  return verdict;
}

BraceSuggestion suggest_braces(const Graph& g, const APCPartition& classes) {
  BraceSuggestion suggestion;
  const int l = classes.size();
  if (l < 2) throw std::invalid_argument("suggest_braces: already a single class (rigid)");

  // Candidate braces are the diagonals of chordless 4-cycles; inserting a
  // diagonal creates two triangles and merges the cycle's two classes.
  struct Candidate {
    Edge diagonal;
    int class_a;
    int class_b;
  };
  std::vector<Candidate> candidates;
  CycleList cycles = enumerate_cycles(g);
  for (const Quad& q : cycles.induced_quads) {
    int ab = classes.class_of_edge[static_cast<size_t>(g.edge_index(q.a, q.b))];
    int bc = classes.class_of_edge[static_cast<size_t>(g.edge_index(q.b, q.c))];
    if (ab == bc) continue;
    candidates.push_back({Edge(q.a, q.c), ab, bc});
    candidates.push_back({Edge(q.b, q.d), ab, bc});
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& x, const Candidate& y) { return x.diagonal < y.diagonal; });

  // Lexicographically greedy spanning forest over the class graph.
  DisjointSet dsu(l);
  for (const Candidate& c : candidates) {
    if (dsu.set_count() == 1) break;
    if (dsu.unite(c.class_a, c.class_b)) suggestion.braces.push_back(c.diagonal);
  }
  if (dsu.set_count() == 1) {
    suggestion.possible = true;
  } else {
    suggestion.braces.clear();
    std::unordered_map<int, std::vector<int>> groups;
    for (int c = 0; c < l; ++c) groups[dsu.find(c)].push_back(c);
    for (auto& [root, members] : groups) suggestion.unreachable_groups.push_back(members);
    std::sort(suggestion.unreachable_groups.begin(), suggestion.unreachable_groups.end());
  }
  return suggestion;
}

}  // namespace parrig
