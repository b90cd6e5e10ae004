#include "parrig/flex.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace parrig {

FlexParametrization decompose(const Framework& fw, const APCPartition& classes, Vertex base) {
  require_connected(fw.graph, "decompose");
  if (!fw.graph.has_vertex(base)) throw std::invalid_argument("decompose: base vertex not in graph");
  WalkIndependenceReport walk = check_walk_independence(fw, classes, /*strong=*/true);
  if (!walk.independent)
    throw std::invalid_argument(
        "decompose: placement is not walk-independent for this class partition; "
        "run the walk-independence check for a witness cycle");

  const Graph& g = fw.graph;
  const size_t n = static_cast<size_t>(g.vertex_count());
  const size_t cls_count = static_cast<size_t>(classes.size());

  FlexParametrization fp;
  fp.framework = fw;
  fp.classes = classes;
  fp.base = base;
  fp.components.assign(cls_count, std::vector<Vec2>(n, Vec2{0.0, 0.0}));
  const bool exact = fw.exact_mode();
  if (exact)
    fp.exact_components = std::vector<std::vector<RatVec2>>(cls_count,
                                                            std::vector<RatVec2>(n));

  SpanningTree tree = bfs_spanning_tree(g, base);
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return tree.depth[a] < tree.depth[b]; });
  for (size_t idx : order) {
    if (tree.parent_edge[idx] < 0) continue;  // base
    Vertex v = g.vertex_at(static_cast<int>(idx));
    Vertex p = tree.parent[idx];
    size_t pi = static_cast<size_t>(g.index_of(p));
    int cls = classes.class_of_edge[static_cast<size_t>(tree.parent_edge[idx])];
    for (size_t k = 0; k < cls_count; ++k) fp.components[k][idx] = fp.components[k][pi];
    fp.components[static_cast<size_t>(cls)][idx] += fw.pos(v) - fw.pos(p);
    if (exact) {
      auto& ex = *fp.exact_components;
      for (size_t k = 0; k < cls_count; ++k) ex[k][idx] = ex[k][pi];
      ex[static_cast<size_t>(cls)][idx] =
          ex[static_cast<size_t>(cls)][idx] +
          (*fw.placement.exact_at(v) - *fw.placement.exact_at(p));
    }
  }
  return fp;
}

Placement evaluate_flex(const FlexParametrization& fp, const std::vector<double>& t) {
  if (static_cast<int>(t.size()) != fp.class_count())
    throw std::invalid_argument("evaluate_flex: one angle per class required");
  if (!t.empty() && t[0] != 0.0)
    throw std::invalid_argument("evaluate_flex: the base class angle must be 0");

  const Graph& g = fp.framework.graph;
  Placement out;
  for (Vertex v : g.vertices()) {
    size_t idx = static_cast<size_t>(g.index_of(v));
    Vec2 p{0.0, 0.0};
    for (size_t k = 0; k < t.size(); ++k) p += rotate_cw(t[k], fp.components[k][idx]);
    out.set(v, p);  // base vertex lands at the origin
  }
  return out;
}

InfinitesimalFlex infinitesimal_flex(const FlexParametrization& fp, int r) {
  if (r <= 0 || r >= fp.class_count())
    throw std::invalid_argument("infinitesimal_flex: class id must be a non-base class");
  InfinitesimalFlex flex;
  flex.class_id = r;
  const auto& rho = fp.components[static_cast<size_t>(r)];
  flex.velocity.resize(rho.size());
  for (size_t i = 0; i < rho.size(); ++i) flex.velocity[i] = quarter_turn(rho[i]);
  return flex;
}

bool is_trivial_flex(const Framework& fw, const std::vector<Vec2>& velocity,
                     double* max_residual) {
  const Graph& g = fw.graph;
  const int n = g.vertex_count();
  if (static_cast<int>(velocity.size()) != n)
    throw std::invalid_argument("is_trivial_flex: one velocity per vertex required");

  // phi(v) = A rho(v) + b with A = [[0,-a],[a,0]]: unknowns (a, b1, b2)
  Eigen::MatrixXd design(2 * n, 3);
  Eigen::VectorXd rhs(2 * n);
  double scale = 1.0;
  for (int i = 0; i < n; ++i) {
    Vec2 p = fw.pos(g.vertex_at(i));
    design(2 * i, 0) = -p.y;
    design(2 * i, 1) = 1.0;
    design(2 * i, 2) = 0.0;
    design(2 * i + 1, 0) = p.x;
    design(2 * i + 1, 1) = 0.0;
    design(2 * i + 1, 2) = 1.0;
    rhs(2 * i) = velocity[static_cast<size_t>(i)].x;
    rhs(2 * i + 1) = velocity[static_cast<size_t>(i)].y;
    scale = std::max({scale, p.norm(), velocity[static_cast<size_t>(i)].norm()});
  }
  Eigen::Vector3d fit = design.colPivHouseholderQr().solve(rhs);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    Vec2 p = fw.pos(g.vertex_at(i));
    Vec2 predicted{-fit(0) * p.y + fit(1), fit(0) * p.x + fit(2)};
    worst = std::max(worst, (velocity[static_cast<size_t>(i)] - predicted).norm());
  }
  if (max_residual) *max_residual = worst;
  return worst <= fw.tol.eps * scale;
}

RigidityVerdict rigidity_verdict(const Framework& fw) {
  require_connected(fw.graph, "rigidity_verdict");
  APCPartition classes = compute_apc(fw.graph);
  RigidityVerdict verdict;
  verdict.walk = check_walk_independence(fw, classes, /*strong=*/true);
  if (!verdict.walk.independent)
    throw std::invalid_argument(
        "rigidity_verdict: placement is not walk-independent; run the "
        "walk-independence check for a witness cycle");
  verdict.class_count = classes.size();
  verdict.flexible = classes.size() >= 2;
  verdict.dof = verdict.flexible ? classes.size() - 1 : 0;
  return verdict;
}

std::vector<std::vector<double>> rigidity_matrix(const Framework& fw) {
  const Graph& g = fw.graph;
  const int n = g.vertex_count();
  std::vector<std::vector<double>> m(static_cast<size_t>(g.edge_count()),
                                     std::vector<double>(static_cast<size_t>(2 * n), 0.0));
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    Vec2 d = fw.pos(edge.u) - fw.pos(edge.v);
    int ui = g.index_of(edge.u), vi = g.index_of(edge.v);
    auto& row = m[static_cast<size_t>(e)];
    row[static_cast<size_t>(2 * ui)] = d.x;
    row[static_cast<size_t>(2 * ui + 1)] = d.y;
    row[static_cast<size_t>(2 * vi)] = -d.x;
    row[static_cast<size_t>(2 * vi + 1)] = -d.y;
  }
  return m;
}

namespace {

int exact_rank(const Framework& fw) {
  const Graph& g = fw.graph;
  const int n = g.vertex_count();
  std::vector<std::vector<Rat>> m(static_cast<size_t>(g.edge_count()),
                                  std::vector<Rat>(static_cast<size_t>(2 * n), Rat(0)));
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    RatVec2 d = *fw.placement.exact_at(edge.u) - *fw.placement.exact_at(edge.v);
    int ui = g.index_of(edge.u), vi = g.index_of(edge.v);
    auto& row = m[static_cast<size_t>(e)];
    row[static_cast<size_t>(2 * ui)] = d.x;
    row[static_cast<size_t>(2 * ui + 1)] = d.y;
    row[static_cast<size_t>(2 * vi)] = -d.x;
    row[static_cast<size_t>(2 * vi + 1)] = -d.y;
  }
  const size_t rows = m.size(), cols = static_cast<size_t>(2 * n);
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      Rat factor = m[r][col] / m[rank][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace

int rigidity_matrix_rank(const Framework& fw) {
  if (fw.exact_mode()) return exact_rank(fw);
  const Graph& g = fw.graph;
  if (g.edge_count() == 0) return 0;
  auto m = rigidity_matrix(fw);
  Eigen::MatrixXd mat(g.edge_count(), 2 * g.vertex_count());
  for (int r = 0; r < g.edge_count(); ++r)
    for (int c = 0; c < 2 * g.vertex_count(); ++c)
      mat(r, c) = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
  Eigen::BDCSVD<Eigen::MatrixXd> svd(mat);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0) return 0;
  double cutoff = fw.tol.eps * sigma(0);
  int rank = 0;
  for (int i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cutoff) ++rank;
  return rank;
}

}  // namespace parrig
