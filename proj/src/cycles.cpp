#include "parrig/cycles.hpp"

#include <algorithm>
#include <tuple>

namespace parrig {

bool Triangle::operator<(const Triangle& o) const {
  return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
}

bool Quad::operator<(const Quad& o) const {
  return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
}

Quad make_canonical_quad(Vertex a, Vertex b, Vertex c, Vertex d) {
  // Cycle a-b-c-d; rotate the smallest vertex to the front, then pick the
  // direction that puts the smaller neighbor second.
  Vertex vs[4] = {a, b, c, d};
  int start = 0;
  for (int i = 1; i < 4; ++i)
    if (vs[i] < vs[start]) start = i;
  Vertex p = vs[start];
  Vertex next = vs[(start + 1) % 4];
  Vertex prev = vs[(start + 3) % 4];
  Vertex opposite = vs[(start + 2) % 4];
  if (next < prev) return {p, next, opposite, prev};
  return {p, prev, opposite, next};
}

CycleList enumerate_cycles(const Graph& g) {
  CycleList out;

  // Triangles: per edge (u,v), common neighbors above v.
  for (const Edge& e : g.edges()) {
    const auto& nu = g.neighbors(e.u);
    const auto& nv = g.neighbors(e.v);
    size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
      if (nu[i] < nv[j]) {
        ++i;
      } else if (nu[i] > nv[j]) {
        ++j;
      } else {
        if (nu[i] > e.v) out.triangles.push_back({e.u, e.v, nu[i]});
        ++i;
        ++j;
      }
    }
  }
  std::sort(out.triangles.begin(), out.triangles.end());

  // Chordless 4-cycles p-w1-q-w2: p,q non-adjacent with common neighbors
  // w1,w2 that are themselves non-adjacent. Found via the diagonal (p,q)
  // with p < q and dedup'd, since both diagonals generate the cycle.
  std::vector<Quad> quads;
  const auto& verts = g.vertices();
  for (size_t pi = 0; pi < verts.size(); ++pi) {
    Vertex p = verts[pi];
    const auto& np = g.neighbors(p);
    for (size_t qi = pi + 1; qi < verts.size(); ++qi) {
      Vertex q = verts[qi];
      if (g.has_edge(p, q)) continue;
      const auto& nq = g.neighbors(q);
      std::vector<Vertex> common;
      std::set_intersection(np.begin(), np.end(), nq.begin(), nq.end(),
                            std::back_inserter(common));
      for (size_t i = 0; i < common.size(); ++i)
        for (size_t j = i + 1; j < common.size(); ++j)
          if (!g.has_edge(common[i], common[j]))
            quads.push_back(make_canonical_quad(p, common[i], q, common[j]));
    }
  }
  std::sort(quads.begin(), quads.end());
  quads.erase(std::unique(quads.begin(), quads.end()), quads.end());
  out.induced_quads = std::move(quads);
  return out;
}

}  // namespace parrig
