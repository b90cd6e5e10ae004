#include <doctest.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "parrig/apc.hpp"
#include "parrig/document.hpp"
#include "parrig/tiling.hpp"
#include "parrig/validate.hpp"
#include "parrig/walk.hpp"

using namespace parrig;

namespace {

int augmented_class_count(const std::string& name, int extent) {
  Patch aug = augment_hexagons(generate_patch(name, extent));
  return compute_apc(aug.framework.graph).size();
}

std::string canonical_bytes(const Patch& patch) {
  return serialize_document(FrameworkDocument::wrap(patch.framework));
}

}  // namespace

TEST_CASE("square tiling window is exact") {
  Patch one = generate_patch("square", 1);
  CHECK(one.framework.graph.vertex_count() == 9);
  CHECK(one.framework.graph.edge_count() == 12);
  CHECK(compute_apc(one.framework.graph).size() == 4);

  Patch two = generate_patch("4^4", 2);
  CHECK(two.tiling == "[4^4]");
  CHECK(two.extent == 2);
  CHECK(two.framework.graph.vertex_count() == 25);
  CHECK(two.framework.graph.edge_count() == 40);
  CHECK(compute_apc(two.framework.graph).size() == 8);
}

TEST_CASE("aliases resolve to the canonical definition") {
  const std::string reference = canonical_bytes(generate_patch("[3.6.3.6]", 2));
  for (const char* alias : {"kagome", "3636", "3.6.3.6", " [ 3.6.3.6 ] ", "KAGOME"})
    CHECK(canonical_bytes(generate_patch(alias, 2)) == reference);

  CHECK(generate_patch("honeycomb", 1).tiling == "[6^3]");
  CHECK(generate_patch("666", 1).tiling == "[6^3]");
  CHECK(generate_patch("triangular", 1).tiling == "[3^6]");
  CHECK(generate_patch("44", 1).tiling == "[4^4]");
}

TEST_CASE("unknown names and bad extents are rejected") {
  CHECK_THROWS_AS(generate_patch("nope", 2), std::invalid_argument);
  try {
    generate_patch("nope", 2);
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find("unknown tiling \"nope\"") != std::string::npos);
    for (const std::string& name : tiling_names())
      CHECK(msg.find(name) != std::string::npos);
  }
  CHECK_THROWS_AS(generate_patch("square", 0), std::invalid_argument);
  CHECK_THROWS_AS(generate_patch("square", -3), std::invalid_argument);
}

TEST_CASE("augmentation is a no-op without empty hexagonal faces") {
  for (const char* name : {"3^6", "4^4"}) {
    Patch raw = generate_patch(name, 1);
    Patch aug = augment_hexagons(raw);
    CHECK(aug.framework.graph.vertex_count() == raw.framework.graph.vertex_count());
    CHECK(aug.framework.graph.edge_count() == raw.framework.graph.edge_count());
    CHECK_FALSE(aug.augmented);
    REQUIRE(aug.warnings.size() == 1);
    CHECK(aug.warnings.back() == "no empty hexagonal faces; patch unchanged");
  }
}

TEST_CASE("hexagonal tiling gains one center and three spokes per hexagon") {
  Patch raw = generate_patch("6^3", 1);
  CHECK(raw.framework.graph.vertex_count() == 30);
  CHECK(raw.framework.graph.edge_count() == 38);

  Patch aug = augment_hexagons(raw);
  CHECK(aug.augmented);
  CHECK(aug.framework.graph.vertex_count() == 39);
  CHECK(aug.framework.graph.edge_count() == 65);
  CHECK(aug.augmented_edges.size() == 27);

  int centers = 0;
  for (const auto& [v, info] : aug.provenance) centers += info.role == "aug";
  CHECK(centers == 9);

  Patch again = augment_hexagons(aug);
  CHECK(again.framework.graph.vertex_count() == 39);
  CHECK(again.framework.graph.edge_count() == 65);
  REQUIRE_FALSE(again.warnings.empty());
  CHECK(again.warnings.back() == "no empty hexagonal faces; patch unchanged");
}

TEST_CASE("augmented class counts match the tiling, not the window") {
  const std::map<std::string, int> pinned = {
      {"[3^6]", 1},
      {"[3.6.3.6]", 4},
      {"[3^6;3^2.4.3.4;3^2.4.3.4]", 2},
      {"[3.4.6.4;3^2.4.3.4]", 5},
      {"[3.3.4.3.4;3.4.6.4;3.4.4.6]", 5},
      {"[3^2.6^2;3.6.3.6;6^3]", 7},
  };
  for (const auto& [name, classes] : pinned) {
    CAPTURE(name);
    CHECK(augmented_class_count(name, 2) == classes);
  }

  // window independence: the counts are stable across extents
  for (int extent : {1, 2, 3}) {
    CAPTURE(extent);
    CHECK(augmented_class_count("kagome", extent) == 4);
    CHECK(augmented_class_count("[3.4.6.4;3^2.4.3.4]", extent) == 5);
    CHECK(augmented_class_count("[3^2.6^2;3.6.3.6;6^3]", extent) == 7);
  }
}

TEST_CASE("ladder tiling grows new classes with the window") {
  std::vector<int> counts;
  for (int extent = 1; extent <= 4; ++extent)
    counts.push_back(augmented_class_count("[3.4.6.4;3.4.6.4;3.4.4.6]", extent));
  CHECK(counts == std::vector<int>{12, 24, 36, 48});
  for (size_t i = 1; i < counts.size(); ++i) CHECK(counts[i - 1] < counts[i]);
}

TEST_CASE("every augmented patch is a walk-independent parallelogram placement") {
  for (const std::string& name : tiling_names()) {
    CAPTURE(name);
    Patch aug = augment_hexagons(generate_patch(name, 2));
    const Framework& fw = aug.framework;

    CHECK(fw.graph.is_connected());
    const std::vector<Vertex>& verts = fw.graph.vertices();
    for (int i = 0; i < fw.graph.vertex_count(); ++i)
      CHECK(verts[static_cast<size_t>(i)] == i);
    CHECK(aug.provenance.size() == static_cast<size_t>(fw.graph.vertex_count()));
    for (Vertex v : verts) {
      const PatchVertexInfo& info = aug.provenance.at(v);
      Vec2 exact = info.coord.to_vec2();
      Vec2 placed = fw.placement.at(v);
      CHECK(exact.x == doctest::Approx(placed.x).epsilon(1e-12));
      CHECK(exact.y == doctest::Approx(placed.y).epsilon(1e-12));
    }

    CHECK(validate_parallelogram_placement(fw).valid());
    APCPartition part = compute_apc(fw.graph);
    CHECK(check_walk_independence(fw, part).independent);
  }
}

TEST_CASE("generation is deterministic") {
  for (const char* name : {"kagome", "[3^2.6^2;3.6.3.6;6^3]"}) {
    Patch a = augment_hexagons(generate_patch(name, 2));
    Patch b = augment_hexagons(generate_patch(name, 2));
    CHECK(canonical_bytes(a) == canonical_bytes(b));
    CHECK(a.augmented_edges == b.augmented_edges);
  }
}

TEST_CASE("kagome boundary erosion keeps the bulk") {
  Patch aug = augment_hexagons(generate_patch("kagome", 2));
  CHECK(aug.framework.graph.vertex_count() == 366);
  CHECK(aug.framework.graph.edge_count() == 755);
  CHECK(aug.augmented_edges.size() == 209);

  // spokes merge each hexagon's opposite edge pairs, so four classes remain
  // and each contains interior spokes
  APCPartition part = compute_apc(aug.framework.graph);
  REQUIRE(part.size() == 4);
  for (const auto& cls : part.classes) CHECK(cls.size() > 100);
}
