#include "parrig/cycles.hpp"
#include "parrig/graph.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace parrig;

TEST_CASE("graph construction and lookups") {
  Graph g = Graph::from_edges({{3, 1}, {1, 0}, {0, 3}, {2, 0}});

  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.vertices() == std::vector<Vertex>{0, 1, 2, 3});

  // edges are normalized and sorted; index order is canonical
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(3) == Edge{1, 3});
  CHECK(g.edge_index(3, 1) == 3);
  CHECK(g.edge_index(1, 2) == -1);
  CHECK(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(2, 3));

  CHECK(g.neighbors(0) == std::vector<Vertex>{1, 2, 3});
  CHECK(g.degree(0) == 3);
  CHECK(g.max_degree() == 3);
  CHECK(g.index_of(3) == 3);
  CHECK(g.vertex_at(2) == 2);
}

TEST_CASE("graph rejects loops and duplicates") {
  CHECK_THROWS_AS((void)Graph::from_edges({{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS((void)Graph::from_edges({{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("sparse vertex ids and isolated vertices") {
  Graph g = Graph::with_vertices({7, 2, 40}, {{2, 40}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.degree(7) == 0);
  CHECK_FALSE(g.is_connected());
  CHECK_THROWS_AS(require_connected(g, "test"), std::invalid_argument);

  Graph h = Graph::from_edges({{10, 20}, {20, 30}});
  CHECK(h.is_connected());
  CHECK_THROWS_AS((void)h.neighbors(5), std::invalid_argument);
}

TEST_CASE("cycle enumeration on K4: triangles only") {
  Graph k4 = Graph::from_edges({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CycleList cl = enumerate_cycles(k4);
  CHECK(cl.triangles.size() == 4);
  // every 4-cycle of K4 has a chord
  CHECK(cl.induced_quads.empty());
}

TEST_CASE("cycle enumeration on C4 and C5") {
  CycleList sq = enumerate_cycles(Graph::from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  CHECK(sq.triangles.empty());
  REQUIRE(sq.induced_quads.size() == 1);
  CHECK(sq.induced_quads[0] == Quad{0, 1, 2, 3});

  CycleList pent =
      enumerate_cycles(Graph::from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
  CHECK(pent.triangles.empty());
  CHECK(pent.induced_quads.empty());
}

TEST_CASE("cycle enumeration on the cube graph") {
  // 3-cube: chordless 4-cycles are exactly the six faces
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (int w = v ^ (1 << b); v < w) edges.emplace_back(v, w);
  CycleList cl = enumerate_cycles(Graph::from_edges(edges));
  CHECK(cl.triangles.empty());
  CHECK(cl.induced_quads.size() == 6);
}

TEST_CASE("quad canonicalization") {
  Quad q = make_canonical_quad(3, 2, 0, 1);
  CHECK(q.a == 0);
  CHECK(q.b < q.d);
  // all rotations and reflections canonicalize identically
  CHECK(make_canonical_quad(2, 0, 1, 3) == q);
  CHECK(make_canonical_quad(1, 0, 2, 3) == q);
  CHECK(make_canonical_quad(0, 1, 2, 3) == make_canonical_quad(0, 3, 2, 1));
}

TEST_CASE("triangle and quad ordering") {
  CHECK(Triangle{0, 1, 2} < Triangle{0, 1, 3});
  CHECK(Triangle{0, 1, 2} < Triangle{1, 2, 3});
  CHECK(Quad{0, 1, 2, 3} < Quad{0, 1, 3, 2});
}
