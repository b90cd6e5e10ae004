#include "parrig/nac.hpp"

#include "parrig/apc.hpp"
#include "util.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace parrig;

namespace {

EdgeColoring coloring_of(const Graph& g, std::initializer_list<int> red_edges) {
  EdgeColoring c;
  c.color.assign(static_cast<size_t>(g.edge_count()), Color::Blue);
  for (int e : red_edges) c.color[static_cast<size_t>(e)] = Color::Red;
  return c;
}

/// A witness cycle must contain exactly one edge of some color.
void check_witness(const Graph& g, const EdgeColoring& c, const std::vector<Vertex>& cycle) {
  REQUIRE(cycle.size() >= 4);
  REQUIRE(cycle.front() == cycle.back());
  int red = 0, blue = 0;
  for (size_t i = 0; i + 1 < cycle.size(); ++i) {
    int e = g.edge_index(cycle[i], cycle[i + 1]);
    REQUIRE(e >= 0);
    (c.color[static_cast<size_t>(e)] == Color::Red ? red : blue)++;
  }
  CHECK((red == 1 || blue == 1));
}

}  // namespace

TEST_CASE("coloring basics") {
  Graph c4 = Graph::from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EdgeColoring c = coloring_of(c4, {0});
  CHECK(c.surjective());
  CHECK(c.red_count() == 1);
  CHECK_FALSE(coloring_of(c4, {}).surjective());
  CHECK_FALSE(coloring_of(c4, {0, 1, 2, 3}).surjective());
}

TEST_CASE("single odd edge on a cycle is rejected with a witness") {
  Graph c4 = Graph::from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  NacVerdict v = is_nac(c4, coloring_of(c4, {0}));
  CHECK_FALSE(v.ok);
  check_witness(c4, coloring_of(c4, {0}), v.witness_cycle);

  // opposite edges red: every cycle crosses color changes twice per color
  EdgeColoring opposite = coloring_of(c4, {0, 3});  // edges (0,1) and (2,3)
  CHECK(c4.edge(0) == Edge{0, 1});
  CHECK(c4.edge(3) == Edge{2, 3});
  CHECK(is_nac(c4, opposite).ok);
  CHECK(is_cartesian_nac(c4, opposite).ok);
  CHECK(verify_color_changes(c4, opposite).ok);
}

TEST_CASE("non-surjective colorings fail everywhere") {
  Graph c4 = Graph::from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EdgeColoring all_blue = coloring_of(c4, {});
  CHECK_FALSE(is_nac(c4, all_blue).ok);
  CHECK_FALSE(is_cartesian_nac(c4, all_blue).ok);
  CHECK_FALSE(verify_color_changes(c4, all_blue).ok);
}

TEST_CASE("NAC but not cartesian: red and blue paths join one pair") {
  // two adjacent red edges on the 4-cycle: each color still appears twice on
  // the cycle, but vertices 1 and 3 share both a red and a blue component
  Graph c4 = Graph::from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EdgeColoring adjacent = coloring_of(c4, {0, 1});  // (0,1) and (0,3)
  CHECK(is_nac(c4, adjacent).ok);
  NacVerdict cart = is_cartesian_nac(c4, adjacent);
  CHECK_FALSE(cart.ok);
  REQUIRE(cart.witness_pair.has_value());
  CHECK(cart.witness_pair->first != cart.witness_pair->second);
  CHECK_FALSE(verify_color_changes(c4, adjacent).ok);
}

TEST_CASE("component test matches the cycle-enumeration definition") {
  std::mt19937 rng(0xc0105e5);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = testutil::random_connected_graph(rng);
    EdgeColoring c = testutil::random_coloring(rng, g);
    CAPTURE(trial);
    NacVerdict v = is_nac(g, c);
    CHECK(v.ok == testutil::nac_by_cycle_enumeration(g, c));
    if (!v.ok && !v.witness_cycle.empty()) check_witness(g, c, v.witness_cycle);
  }
}

TEST_CASE("chordless color-change test matches the cartesian component test") {
  std::mt19937 rng(0x7e57ab1e);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = testutil::random_connected_graph(rng);
    EdgeColoring c = testutil::random_coloring(rng, g);
    CAPTURE(trial);
    CHECK(verify_color_changes(g, c).ok == is_cartesian_nac(g, c).ok);
  }
}

TEST_CASE("chordless enumeration refuses oversized graphs") {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 1; v < 20; ++v) edges.emplace_back(v - 1, v);
  Graph path = Graph::from_edges(edges);
  EdgeColoring c;
  c.color.assign(static_cast<size_t>(path.edge_count()), Color::Blue);
  c.color[0] = Color::Red;
  CHECK_THROWS_AS((void)verify_color_changes(path, c), std::length_error);
  CHECK_NOTHROW((void)verify_color_changes(path, c, 32));
}

TEST_CASE("class-monochromatic colorings from the partition") {
  for (const auto& entry : testutil::corpus()) {
    CAPTURE(entry.file);
    Graph g = testutil::load_corpus(entry.file).framework.graph;
    APCPartition classes = compute_apc(g);
    auto colorings = colorings_from_apc(g, classes);
    CHECK(colorings.size() == (size_t{1} << (classes.size() - 1)) - 1);
    for (const auto& c : colorings) {
      CHECK(c.surjective());
      // classes stay monochromatic
      for (const auto& cls : classes.classes) {
        Color first = c.color[static_cast<size_t>(cls.front())];
        for (int e : cls) CHECK(c.color[static_cast<size_t>(e)] == first);
      }
      // on walk-independent graphs these are cartesian NAC-colorings
      if (entry.walk_independent) CHECK(is_cartesian_nac(g, c).ok);
    }
  }
}

TEST_CASE("class 0 is always blue in generated colorings") {
  Graph g = testutil::load_corpus("exflex.json").framework.graph;
  APCPartition classes = compute_apc(g);
  for (const auto& c : colorings_from_apc(g, classes)) {
    CHECK(c.color[static_cast<size_t>(classes.classes[0].front())] == Color::Blue);
  }
}

TEST_CASE("too many classes are refused") {
  // a long path has one class per edge
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 1; v < 25; ++v) edges.emplace_back(v - 1, v);
  Graph path = Graph::from_edges(edges);
  APCPartition classes = compute_apc(path);
  REQUIRE(classes.size() == 24);
  CHECK_THROWS_AS((void)colorings_from_apc(path, classes), std::length_error);
}
