#include "parrig/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace parrig {

namespace {

constexpr double kFallbackEps = 1e-9;

/// Geometry comparisons stay in doubles even for exact placements; a zero
/// tolerance is replaced so irrational rotations remain checkable.
double geometric_eps(const Framework& fw) {
  return fw.tol.eps > 0.0 ? fw.tol.eps : kFallbackEps;
}

/// Rotation by 2*pi*k/n counterclockwise, exact for the half and quarter turns.
Vec2 rotate_ccw_by(int k, int n, Vec2 v) {
  k = ((k % n) + n) % n;
  if (k == 0) return v;
  if (2 * k == n) return {-v.x, -v.y};
  if (4 * k == n) return quarter_turn(v);
  if (4 * k == 3 * n) return {v.y, -v.x};
  return rotate_ccw(2.0 * M_PI * k / n, v);
}

void require_action_on(const Graph& g, const CyclicAction& action, const char* op) {
  if (action.n < 2) throw std::invalid_argument(std::string(op) + ": order must be at least 2");
  for (Vertex v : g.vertices()) {
    auto it = action.omega.find(v);
    if (it == action.omega.end() || !g.has_vertex(it->second))
      throw std::invalid_argument(std::string(op) + ": action is not defined on every vertex");
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (g.edge_index(action.omega.at(edge.u), action.omega.at(edge.v)) < 0)
      throw std::invalid_argument(std::string(op) + ": action is not a graph automorphism");
  }
}

}  // namespace

Vertex CyclicAction::apply(Vertex v, int k) const {
  if (n <= 0) throw std::logic_error("CyclicAction::apply on an empty action");
  k = ((k % n) + n) % n;
  for (int i = 0; i < k; ++i) {
    auto it = omega.find(v);
    if (it == omega.end()) throw std::invalid_argument("action not defined on vertex");
    v = it->second;
  }
  return v;
}

CnValidation validate_cn_symmetric(const Framework& fw, const CyclicAction& action) {
  const Graph& g = fw.graph;
  CnValidation result;
  auto problem = [&result](std::string msg) { result.problems.push_back(std::move(msg)); };

  if (action.n < 2) {
    problem("order must be at least 2");
    return result;
  }

  // omega must be a bijection of the vertex set
  std::vector<Vertex> image;
  for (Vertex v : g.vertices()) {
    auto it = action.omega.find(v);
    if (it == action.omega.end() || !g.has_vertex(it->second)) {
      problem("action is not defined on vertex " + std::to_string(v));
      return result;
    }
    image.push_back(it->second);
  }
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
    problem("action is not a bijection of the vertex set");
    return result;
  }

  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (g.edge_index(action.omega.at(edge.u), action.omega.at(edge.v)) < 0)
      problem("action does not preserve edge (" + std::to_string(edge.u) + "," +
              std::to_string(edge.v) + ")");
  }

  // order = lcm of the cycle lengths, must be exactly n
  long order = 1;
  std::vector<int> cycle_length(static_cast<size_t>(g.vertex_count()), 0);
  for (Vertex v : g.vertices()) {
    size_t vi = static_cast<size_t>(g.index_of(v));
    if (cycle_length[vi] > 0) continue;
    std::vector<Vertex> cycle = {v};
    for (Vertex w = action.omega.at(v); w != v; w = action.omega.at(w)) {
      cycle.push_back(w);
      if (static_cast<int>(cycle.size()) > g.vertex_count()) {
        problem("action is not a permutation");
        return result;
      }
    }
    for (Vertex w : cycle)
      cycle_length[static_cast<size_t>(g.index_of(w))] = static_cast<int>(cycle.size());
    order = std::lcm(order, static_cast<long>(cycle.size()));
  }
  if (order != action.n) {
    problem("action has order " + std::to_string(order) + ", expected " +
            std::to_string(action.n));
    return result;
  }

  for (Vertex v : g.vertices()) {
    size_t vi = static_cast<size_t>(g.index_of(v));
    if (cycle_length[vi] == 1)
      result.invariant_vertices.push_back(v);
    else if (cycle_length[vi] < action.n)
      problem("vertex " + std::to_string(v) + " is partially invariant but not invariant");
  }
  for (Vertex u : result.invariant_vertices)
    for (Vertex v : result.invariant_vertices)
      if (u < v && g.edge_index(u, v) >= 0)
        problem("invariant vertices " + std::to_string(u) + " and " + std::to_string(v) +
                " are adjacent");

  const double eps = geometric_eps(fw);
  for (Vertex v : result.invariant_vertices)
    if (fw.pos(v).norm() > eps)
      problem("invariant vertex " + std::to_string(v) + " is not at the origin");
  for (Vertex v : g.vertices()) {
    Vec2 expected = rotate_ccw_by(1, action.n, fw.pos(v));
    if ((fw.pos(action.omega.at(v)) - expected).norm() > eps)
      problem("position of the image of vertex " + std::to_string(v) +
              " is not the rotated position");
  }

  result.valid = result.problems.empty();
  return result;
}

CnAPCPartition compute_cn_apc(const Graph& g, const CyclicAction& action) {
  require_action_on(g, action, "compute_cn_apc");
  CnAPCPartition out;
  out.base = compute_apc(g);

  DisjointSet dsu(out.base.size());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    int image = g.edge_index(action.omega.at(edge.u), action.omega.at(edge.v));
    dsu.unite(out.base.class_of_edge[static_cast<size_t>(e)],
              out.base.class_of_edge[static_cast<size_t>(image)]);
  }

  // canonical ids ordered by smallest base class id
  std::vector<int> id_of_root(static_cast<size_t>(out.base.size()), -1);
  out.cn_class_of.resize(static_cast<size_t>(out.base.size()));
  for (int c = 0; c < out.base.size(); ++c) {
    int root = dsu.find(c);
    if (id_of_root[static_cast<size_t>(root)] < 0) {
      id_of_root[static_cast<size_t>(root)] = static_cast<int>(out.classes.size());
      out.classes.emplace_back();
    }
    int id = id_of_root[static_cast<size_t>(root)];
    out.cn_class_of[static_cast<size_t>(c)] = id;
    out.classes[static_cast<size_t>(id)].push_back(c);
  }
  return out;
}

Placement evaluate_cn_flex(const FlexParametrization& fp, const CyclicAction& action,
                           const CnAPCPartition& cn, const std::vector<double>& t) {
  if (static_cast<int>(t.size()) != cn.size())
    throw std::invalid_argument("evaluate_cn_flex: one angle per Cn-class required");
  if (!t.empty() && t[0] != 0.0)
    throw std::invalid_argument("evaluate_cn_flex: the base Cn-class angle must be 0");
  if (cn.base.size() != fp.class_count())
    throw std::invalid_argument("evaluate_cn_flex: Cn-classes do not match the parametrization");

  std::vector<double> expanded(static_cast<size_t>(fp.class_count()));
  for (int c = 0; c < fp.class_count(); ++c)
    expanded[static_cast<size_t>(c)] = t[static_cast<size_t>(cn.cn_class_of[static_cast<size_t>(c)])];
  Placement moved = evaluate_flex(fp, expanded);

  // recentering on the base orbit makes the flex equivariant and restores the
  // input placement exactly at t = 0
  Vec2 centroid{0.0, 0.0};
  for (int j = 0; j < action.n; ++j) centroid += moved.at(action.apply(fp.base, j));
  centroid = centroid * (1.0 / action.n);

  Placement out;
  for (Vertex v : fp.framework.graph.vertices()) out.set(v, moved.at(v) - centroid);
  return out;
}

NacVerdict is_cn_symmetric_nac(const Graph& g, const CyclicAction& action,
                               const EdgeColoring& coloring) {
  require_action_on(g, action, "is_cn_symmetric_nac");
  NacVerdict verdict = is_nac(g, coloring);
  if (!verdict.ok) return verdict;

  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    int image = g.edge_index(action.omega.at(edge.u), action.omega.at(edge.v));
    if (coloring.color[static_cast<size_t>(e)] != coloring.color[static_cast<size_t>(image)]) {
      verdict.ok = false;
      verdict.reason = "coloring is not invariant under the action";
      verdict.witness_pair = {edge.u, edge.v};
      return verdict;
    }
  }

  for (Color c : {Color::Red, Color::Blue}) {
    DisjointSet dsu(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
      if (coloring.color[static_cast<size_t>(e)] != c) continue;
      const Edge& edge = g.edge(e);
      dsu.unite(g.index_of(edge.u), g.index_of(edge.v));
    }
    // a component is partially invariant when some proper power of the
    // action maps it onto itself; invariant colorings map components to
    // components, so testing one member suffices
    std::vector<bool> partially_invariant(static_cast<size_t>(g.vertex_count()), false);
    for (int i = 0; i < g.vertex_count(); ++i) {
      if (dsu.find(i) != i) continue;
      Vertex rep = g.vertex_at(i);
      for (int k = 1; k < action.n; ++k) {
        if (dsu.find(g.index_of(action.apply(rep, k))) == i) {
          partially_invariant[static_cast<size_t>(i)] = true;
          break;
        }
      }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      int cu = dsu.find(g.index_of(edge.u));
      int cv = dsu.find(g.index_of(edge.v));
      if (cu == cv) continue;
      if (partially_invariant[static_cast<size_t>(cu)] &&
          partially_invariant[static_cast<size_t>(cv)]) {
        verdict.ok = false;
        verdict.reason = std::string("edge joins two partially invariant ") + (c == Color::Red ? "red" : "blue") +
                         " components";
        verdict.witness_pair = {edge.u, edge.v};
        return verdict;
      }
    }
  }
  return verdict;
}

CyclicAction action_from_rotation(const Framework& fw, Vec2 center, int n) {
  if (n < 2) throw std::invalid_argument("action_from_rotation: order must be at least 2");
  const Graph& g = fw.graph;
  const double eps = geometric_eps(fw);
  CyclicAction action;
  action.n = n;
  for (Vertex v : g.vertices()) {
    Vec2 target = center + rotate_ccw_by(1, n, fw.pos(v) - center);
    Vertex match = -1;
    for (Vertex w : g.vertices()) {
      if ((fw.pos(w) - target).norm() <= eps) {
        match = w;
        break;
      }
    }
    if (match < 0)
      throw std::invalid_argument("action_from_rotation: rotation does not permute the placement");
    action.omega[v] = match;
  }
  return action;
}

std::pair<Framework, CyclicAction> symmetric_restriction(const Framework& fw, Vec2 center,
                                                         int n) {
  if (n < 2) throw std::invalid_argument("symmetric_restriction: order must be at least 2");
  const Graph& g = fw.graph;
  const double eps = geometric_eps(fw);

  std::vector<bool> keep(static_cast<size_t>(g.vertex_count()), true);
  auto image_of = [&](Vertex v) -> Vertex {
    Vec2 target = center + rotate_ccw_by(1, n, fw.pos(v) - center);
    for (Vertex w : g.vertices()) {
      if (!keep[static_cast<size_t>(g.index_of(w))]) continue;
      if ((fw.pos(w) - target).norm() <= eps) return w;
    }
    return -1;
  };

  // dropping a vertex can strand the preimages of others, so iterate to a
  // fixed point
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v : g.vertices()) {
      size_t vi = static_cast<size_t>(g.index_of(v));
      if (!keep[vi]) continue;
      if (image_of(v) < 0) {
        keep[vi] = false;
        changed = true;
      }
    }
  }

  std::vector<Vertex> vertices;
  for (Vertex v : g.vertices())
    if (keep[static_cast<size_t>(g.index_of(v))]) vertices.push_back(v);
  if (vertices.empty())
    throw std::invalid_argument("symmetric_restriction: no rotation-closed subframework");

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (keep[static_cast<size_t>(g.index_of(edge.u))] &&
        keep[static_cast<size_t>(g.index_of(edge.v))])
      edges.emplace_back(edge.u, edge.v);
  }

  Placement placement;
  for (Vertex v : vertices) placement.set(v, fw.pos(v) - center);
  Framework restricted =
      Framework::make(Graph::with_vertices(vertices, edges), std::move(placement), fw.tol);
  CyclicAction action = action_from_rotation(restricted, Vec2{0.0, 0.0}, n);
  return {std::move(restricted), std::move(action)};
}

}  // namespace parrig
