#include "parrig/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace parrig {

namespace {

// Exact coordinates for all four corners, or nullptr logic via bool.
bool quad_exact(const Framework& fw, const Quad& q, RatVec2 out[4]) {
  const Vertex vs[4] = {q.a, q.b, q.c, q.d};
  for (int i = 0; i < 4; ++i) {
    const RatVec2* p = fw.placement.exact_at(vs[i]);
    if (!p) return false;
    out[i] = *p;
  }
  return true;
}

bool collinear_exact(const RatVec2& a, const RatVec2& b, const RatVec2& c) {
  Rat cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return cross == 0;
}

bool collinear_float(Vec2 a, Vec2 b, Vec2 c, double eps) {
  return std::abs((b - a).cross(c - a)) <= eps;
}

}  // namespace

ValidationReport validate_parallelogram_placement(const Framework& fw) {
  ValidationReport report;
  const Graph& g = fw.graph;
  const bool exact = fw.exact_mode();
  const double eps = fw.tol.eps;

  // Injectivity over all vertex pairs. Floating mode buckets positions on an
  // eps grid and compares within neighboring buckets.
  const auto& verts = g.vertices();
  if (exact) {
    std::vector<std::pair<Vertex, const RatVec2*>> pts;
    pts.reserve(verts.size());
    for (Vertex v : verts) pts.emplace_back(v, fw.placement.exact_at(v));
    std::sort(pts.begin(), pts.end(), [](const auto& l, const auto& r) {
      if (l.second->x != r.second->x) return l.second->x < r.second->x;
      if (l.second->y != r.second->y) return l.second->y < r.second->y;
      return l.first < r.first;
    });
    for (size_t i = 0; i + 1 < pts.size(); ++i)
      if (*pts[i].second == *pts[i + 1].second)
        report.coincident_pairs.emplace_back(std::min(pts[i].first, pts[i + 1].first),
                                             std::max(pts[i].first, pts[i + 1].first));
  } else {
    const double cell = std::max(eps, 1e-300);
    std::unordered_map<std::uint64_t, std::vector<Vertex>> buckets;
    auto key = [cell](double x, double y) {
      auto ix = static_cast<std::int64_t>(std::floor(x / cell));
      auto iy = static_cast<std::int64_t>(std::floor(y / cell));
      return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(ix)) << 32) ^
             static_cast<std::uint32_t>(iy);
    };
    for (Vertex v : verts) {
      Vec2 p = fw.pos(v);
      for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy) {
          auto it = buckets.find(key(p.x + dx * cell, p.y + dy * cell));
          if (it == buckets.end()) continue;
          for (Vertex u : it->second)
            if ((fw.pos(u) - p).norm() <= eps)
              report.coincident_pairs.emplace_back(std::min(u, v), std::max(u, v));
        }
      buckets[key(p.x, p.y)].push_back(v);
    }
  }
  std::sort(report.coincident_pairs.begin(), report.coincident_pairs.end());
  report.coincident_pairs.erase(
      std::unique(report.coincident_pairs.begin(), report.coincident_pairs.end()),
      report.coincident_pairs.end());
  report.injective = report.coincident_pairs.empty();

  // Every chordless 4-cycle a-b-c-d must close as a parallelogram:
  // rho(a) - rho(b) + rho(c) - rho(d) = 0, corners not all collinear.
  CycleList cycles = enumerate_cycles(g);
  for (const Quad& q : cycles.induced_quads) {
    RatVec2 ep[4];
    if (exact && quad_exact(fw, q, ep)) {
      RatVec2 closure = ep[0] - ep[1] + ep[2] - ep[3];
      if (!closure.is_zero()) report.not_parallelogram.push_back(q);
      bool degenerate = collinear_exact(ep[0], ep[1], ep[2]) &&
                        collinear_exact(ep[0], ep[1], ep[3]) &&
                        collinear_exact(ep[0], ep[2], ep[3]);
      // coincident corners are degenerate as well
      for (int i = 0; i < 4 && !degenerate; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (ep[i] == ep[j]) {
            degenerate = true;
            break;
          }
      if (degenerate) report.degenerate_quads.push_back(q);
    } else {
      Vec2 pa = fw.pos(q.a), pb = fw.pos(q.b), pc = fw.pos(q.c), pd = fw.pos(q.d);
      Vec2 closure = pa - pb + pc - pd;
      if (closure.norm() > eps) report.not_parallelogram.push_back(q);
      bool degenerate = collinear_float(pa, pb, pc, eps) && collinear_float(pa, pb, pd, eps) &&
                        collinear_float(pa, pc, pd, eps);
      const Vec2 pts[4] = {pa, pb, pc, pd};
      for (int i = 0; i < 4 && !degenerate; ++i)
        for (int j = i + 1; j < 4; ++j)
          if ((pts[i] - pts[j]).norm() <= eps) {
            degenerate = true;
            break;
          }
      if (degenerate) report.degenerate_quads.push_back(q);
    }
  }
  return report;
}

std::vector<Triangle> degenerate_triangles(const Framework& fw) {
  std::vector<Triangle> out;
  CycleList cycles = enumerate_cycles(fw.graph);
  const bool exact = fw.exact_mode();
  for (const Triangle& t : cycles.triangles) {
    if (exact) {
      const RatVec2* pa = fw.placement.exact_at(t.a);
      const RatVec2* pb = fw.placement.exact_at(t.b);
      const RatVec2* pc = fw.placement.exact_at(t.c);
      if (pa && pb && pc) {
        if (collinear_exact(*pa, *pb, *pc)) out.push_back(t);
        continue;
      }
    }
    if (collinear_float(fw.pos(t.a), fw.pos(t.b), fw.pos(t.c), fw.tol.eps)) out.push_back(t);
  }
  return out;
}

}  // namespace parrig
