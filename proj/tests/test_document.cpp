#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "parrig/document.hpp"
#include "parrig/exact.hpp"
#include "util.hpp"

using namespace parrig;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string parse_error(const std::string& text) {
  try {
    parse_document(text);
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  FAIL("expected parse_document to throw");
  return {};
}

const char* kMinimal = R"({
  "format": "parrig/1",
  "vertices": [
    {"id": 0, "x": 0.0, "y": 0.0},
    {"id": 1, "x": 1.0, "y": 0.0},
    {"id": 2, "x": 1.0, "y": 1.0},
    {"id": 3, "x": 0.0, "y": 1.0}
  ],
  "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]
})";

}  // namespace

TEST_CASE("corpus files are canonical: parse then serialize is the identity") {
  for (const auto& entry : testutil::corpus()) {
    CAPTURE(entry.file);
    std::string raw = slurp(testutil::data_path(entry.file));
    FrameworkDocument doc = parse_document(raw);
    CHECK(doc.framework.graph.vertex_count() == entry.vertices);
    CHECK(doc.framework.graph.edge_count() == entry.edges);
    CHECK(doc.symmetry.has_value() == entry.symmetric);

    std::string once = serialize_document(doc);
    CHECK(once == raw);
    CHECK(serialize_document(parse_document(once)) == once);
  }
}

TEST_CASE("exact rational coordinates survive parsing") {
  FrameworkDocument doc = testutil::load_corpus("c4.json");
  REQUIRE(doc.framework.graph.vertex_count() == 4);
  REQUIRE(doc.framework.placement.fully_exact(doc.framework.graph));
  const RatVec2* p2 = doc.framework.placement.exact_at(2);
  REQUIRE(p2 != nullptr);
  CHECK(p2->x == Rat(1));
  CHECK(p2->y == Rat(1));
  CHECK(doc.framework.pos(2).x == 1.0);

  FrameworkDocument nf = testutil::load_corpus("newframework.json");
  const RatVec2* p1 = nf.framework.placement.exact_at(1);
  REQUIRE(p1 != nullptr);
  CHECK(p1->x == Rat(13) / 10);
}

TEST_CASE("decimal strings parse exactly and serialize as rationals") {
  std::string text = R"({
    "format": "parrig/1",
    "vertices": [
      {"id": 0, "x": "0.25", "y": "0"},
      {"id": 1, "x": "-3/2", "y": "1"}
    ],
    "edges": [[0, 1]]
  })";
  FrameworkDocument doc = parse_document(text);
  const RatVec2* p0 = doc.framework.placement.exact_at(0);
  REQUIRE(p0 != nullptr);
  CHECK(p0->x == Rat(1) / 4);
  std::string out = serialize_document(doc);
  CHECK(out.find("\"1/4\"") != std::string::npos);
  CHECK(out.find("\"-3/2\"") != std::string::npos);
  CHECK(out.find("\"0\"") != std::string::npos);
}

TEST_CASE("mixed exact and floating vertices keep only full pairs exact") {
  std::string text = R"({
    "format": "parrig/1",
    "vertices": [
      {"id": 0, "x": "1/2", "y": 0.5},
      {"id": 1, "x": 1.0, "y": 0.0}
    ],
    "edges": [[0, 1]]
  })";
  FrameworkDocument doc = parse_document(text);
  CHECK(doc.framework.placement.exact_at(0) == nullptr);
  CHECK(doc.framework.pos(0).x == 0.5);
}

TEST_CASE("metadata is preserved verbatim") {
  FrameworkDocument doc = testutil::load_corpus("newframework.json");
  CHECK(doc.metadata_json == R"({"name":"newframework"})");
  std::string out = serialize_document(doc);
  CHECK(out.find("\"metadata\"") != std::string::npos);
  CHECK(out.find("\"newframework\"") != std::string::npos);
}

TEST_CASE("minified input parses to the same document") {
  FrameworkDocument a = parse_document(kMinimal);
  std::string minified = R"({"format":"parrig/1","vertices":[{"id":0,"x":0.0,"y":0.0},)"
                         R"({"id":1,"x":1.0,"y":0.0},{"id":2,"x":1.0,"y":1.0},)"
                         R"({"id":3,"x":0.0,"y":1.0}],"edges":[[0,1],[1,2],[2,3],[3,0]]})";
  FrameworkDocument b = parse_document(minified);
  CHECK(serialize_document(a) == serialize_document(b));
}

TEST_CASE("save and load round-trip through a file") {
  FrameworkDocument doc = parse_document(kMinimal);
  doc.metadata_json = R"({"note":"temporary"})";
  auto path = std::filesystem::temp_directory_path() / "parrig_doc_roundtrip.json";
  save_document(doc, path.string());
  FrameworkDocument back = load_document(path.string());
  CHECK(serialize_document(back) == serialize_document(doc));
  std::filesystem::remove(path);

  CHECK_THROWS_AS(load_document((path / "missing.json").string()), std::invalid_argument);
}

TEST_CASE("parse errors carry their location") {
  CHECK(parse_error("[1, 2]").find("top level") != std::string::npos);
  CHECK(parse_error("{ not json").find("document:") != std::string::npos);

  std::string unknown = kMinimal;
  unknown.insert(1, "\"extra\": 1,");
  CHECK(parse_error(unknown).find("unknown field") != std::string::npos);

  std::string wrong_format(kMinimal);
  wrong_format.replace(wrong_format.find("parrig/1"), 8, "parrig/9");
  CHECK(parse_error(wrong_format).find("unsupported") != std::string::npos);

  auto message_with = [&](const std::string& vertices, const std::string& edges) {
    return parse_error(R"({"format":"parrig/1","vertices":)" + vertices +
                       R"(,"edges":)" + edges + "}");
  };

  std::string square_verts = R"([{"id":0,"x":0.0,"y":0.0},{"id":1,"x":1.0,"y":0.0}])";
  CHECK(message_with(R"([{"id":0,"x":0,"y":0},{"id":0,"x":1,"y":0}])", "[]")
            .find("duplicate vertex id") != std::string::npos);
  CHECK(message_with(square_verts, "[[0,1],[1,0]]").find("duplicate edge") !=
        std::string::npos);
  CHECK(message_with(square_verts, "[[1,1]]").find("loop edge") != std::string::npos);
  CHECK(message_with(square_verts, "[[0,7]]").find("unknown endpoint") != std::string::npos);
  CHECK(message_with(R"([{"id":-1,"x":0,"y":0}])", "[]").find("non-negative") !=
        std::string::npos);
  CHECK(message_with(R"([{"id":0,"x":"3/0","y":0}])", "[]").find("malformed rational") !=
        std::string::npos);
  CHECK(message_with(R"([{"id":0,"x":true,"y":0}])", "[]")
            .find("number or a rational string") != std::string::npos);
  CHECK(message_with(R"([{"id":0,"y":0}])", "[]").find("missing x or y") !=
        std::string::npos);
  CHECK(message_with("[]", "[]").find("empty vertex list") != std::string::npos);
}

TEST_CASE("symmetry block errors carry their location") {
  auto with_symmetry = [](const std::string& sym) {
    return R"({"format":"parrig/1","vertices":[{"id":0,"x":0.0,"y":0.0},)"
           R"({"id":1,"x":1.0,"y":0.0}],"edges":[[0,1]],"symmetry":)" +
           sym + "}";
  };
  CHECK(parse_error(with_symmetry(R"({"n":1,"omega":{"0":0,"1":1}})")).find(">= 2") !=
        std::string::npos);
  CHECK(parse_error(with_symmetry(R"({"n":2})")).find("omega") != std::string::npos);
  CHECK(parse_error(with_symmetry(R"({"n":2,"omega":{"0":1,"1":1}})"))
            .find("not injective") != std::string::npos);
  CHECK(parse_error(with_symmetry(R"({"n":2,"omega":{"0":1}})"))
            .find("not a permutation") != std::string::npos);
  CHECK(parse_error(with_symmetry(R"({"n":2,"omega":{"0":1,"7":0}})"))
            .find("unknown vertex") != std::string::npos);
  CHECK(parse_error(with_symmetry(R"({"n":2,"omega":{"zero":1,"1":0}})"))
            .find("non-integer key") != std::string::npos);

  // serializing a symmetry block that misses a vertex is refused
  FrameworkDocument doc = parse_document(with_symmetry(R"({"n":2,"omega":{"0":1,"1":0}})"));
  REQUIRE(doc.symmetry.has_value());
  doc.symmetry->omega.erase(1);
  CHECK_THROWS_AS(serialize_document(doc), std::invalid_argument);
}
