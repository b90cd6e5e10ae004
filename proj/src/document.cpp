#include "parrig/document.hpp"

#include "parrig/exact.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace parrig {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument("document: " + where + ": " + what);
}

// Coordinate value: JSON numbers stay doubles, strings are exact rationals.
struct Coord {
  double value = 0.0;
  std::optional<Rat> exact;
};

Coord read_coord(const json& j, const std::string& where) {
  Coord c;
  if (j.is_number()) {
    c.value = j.get<double>();
    return c;
  }
  if (j.is_string()) {
    auto r = parse_rational(j.get<std::string>());
    if (!r) fail(where, "malformed rational \"" + j.get<std::string>() + "\"");
    c.exact = *r;
    c.value = to_double(*r);
    return c;
  }
  fail(where, "coordinate must be a number or a rational string");
}

}  // namespace

FrameworkDocument FrameworkDocument::wrap(Framework fw) {
  FrameworkDocument doc;
  doc.framework = std::move(fw);
  return doc;
}

FrameworkDocument parse_document(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("document: ") + e.what());
  }
  if (!root.is_object()) fail("top level", "expected an object");

  static const std::set<std::string> known = {"format", "vertices", "edges",
                                              "symmetry", "metadata"};
  for (const auto& item : root.items())
    if (!known.count(item.key())) fail(item.key(), "unknown field");

  if (!root.contains("format") || !root["format"].is_string())
    fail("format", "missing or not a string");
  FrameworkDocument doc;
  doc.format = root["format"].get<std::string>();
  if (doc.format != "parrig/1")
    fail("format", "unsupported \"" + doc.format + "\" (expected parrig/1)");

  if (!root.contains("vertices") || !root["vertices"].is_array())
    fail("vertices", "missing or not an array");
  Placement placement;
  std::vector<Vertex> ids;
  std::unordered_set<Vertex> id_set;
  size_t vi = 0;
  for (const json& jv : root["vertices"]) {
    const std::string where = "vertices[" + std::to_string(vi++) + "]";
    if (!jv.is_object()) fail(where, "expected an object");
    if (!jv.contains("id") || !jv["id"].is_number_integer())
      fail(where, "missing integer id");
    Vertex v = jv["id"].get<Vertex>();
    if (v < 0) fail(where, "vertex ids must be non-negative");
    if (!id_set.insert(v).second)
      fail(where, "duplicate vertex id " + std::to_string(v));
    if (!jv.contains("x") || !jv.contains("y")) fail(where, "missing x or y");
    Coord x = read_coord(jv["x"], where + ".x");
    Coord y = read_coord(jv["y"], where + ".y");
    if (!std::isfinite(x.value) || !std::isfinite(y.value))
      fail(where, "coordinates must be finite");
    if (x.exact && y.exact)
      placement.set_exact(v, RatVec2(*x.exact, *y.exact));
    else
      placement.set(v, Vec2(x.value, y.value));
    ids.push_back(v);
  }
  if (ids.empty()) fail("vertices", "empty vertex list");

  if (!root.contains("edges") || !root["edges"].is_array())
    fail("edges", "missing or not an array");
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> edge_set;
  size_t ei = 0;
  for (const json& je : root["edges"]) {
    const std::string where = "edges[" + std::to_string(ei++) + "]";
    if (!je.is_array() || je.size() != 2 || !je[0].is_number_integer() ||
        !je[1].is_number_integer())
      fail(where, "expected a pair of vertex ids");
    Vertex u = je[0].get<Vertex>(), v = je[1].get<Vertex>();
    if (!id_set.count(u) || !id_set.count(v)) fail(where, "unknown endpoint");
    if (u == v) fail(where, "loop edge");
    auto norm = std::minmax(u, v);
    if (!edge_set.insert({norm.first, norm.second}).second)
      fail(where, "duplicate edge");
    edges.emplace_back(u, v);
  }

  doc.framework = Framework::make(Graph::with_vertices(ids, edges), std::move(placement));

  if (root.contains("symmetry")) {
    const json& js = root["symmetry"];
    if (!js.is_object()) fail("symmetry", "expected an object");
    if (!js.contains("n") || !js["n"].is_number_integer() || js["n"].get<int>() < 2)
      fail("symmetry.n", "order must be an integer >= 2");
    SymmetryBlock block;
    block.n = js["n"].get<int>();
    if (!js.contains("omega") || !js["omega"].is_object())
      fail("symmetry.omega", "missing or not an object");
    std::unordered_set<Vertex> images;
    for (const auto& item : js["omega"].items()) {
      Vertex from;
      try {
        from = std::stoi(item.key());
      } catch (const std::exception&) {
        fail("symmetry.omega", "non-integer key \"" + item.key() + "\"");
      }
      if (!item.value().is_number_integer())
        fail("symmetry.omega[" + item.key() + "]", "image must be an integer");
      Vertex to = item.value().get<Vertex>();
      if (!id_set.count(from) || !id_set.count(to))
        fail("symmetry.omega[" + item.key() + "]", "unknown vertex");
      if (!images.insert(to).second)
        fail("symmetry.omega", "not injective at image " + std::to_string(to));
      block.omega[from] = to;
    }
    if (block.omega.size() != id_set.size())
      fail("symmetry.omega", "not a permutation of the vertex set");
    doc.symmetry = std::move(block);
  }

  if (root.contains("metadata")) doc.metadata_json = root["metadata"].dump();

  return doc;
}

std::string serialize_document(const FrameworkDocument& doc) {
  json out;
  out["format"] = doc.format;
  json verts = json::array();
  for (Vertex v : doc.framework.graph.vertices()) {
    json jv;
    jv["id"] = v;
    if (const RatVec2* ex = doc.framework.placement.exact_at(v)) {
      jv["x"] = rational_repr(ex->x);
      jv["y"] = rational_repr(ex->y);
    } else {
      Vec2 p = doc.framework.pos(v);
      jv["x"] = p.x;
      jv["y"] = p.y;
    }
    verts.push_back(std::move(jv));
  }
  out["vertices"] = std::move(verts);
  json edges = json::array();
  for (const Edge& e : doc.framework.graph.edges()) edges.push_back({e.u, e.v});
  out["edges"] = std::move(edges);
  if (doc.symmetry) {
    json omega;
    for (Vertex v : doc.framework.graph.vertices()) {
      auto it = doc.symmetry->omega.find(v);
      if (it == doc.symmetry->omega.end())
        throw std::invalid_argument("document: symmetry.omega: missing vertex " +
                                    std::to_string(v));
      omega[std::to_string(v)] = it->second;
    }
    out["symmetry"] = {{"n", doc.symmetry->n}, {"omega", std::move(omega)}};
  }
  if (!doc.metadata_json.empty()) out["metadata"] = json::parse(doc.metadata_json);
  return out.dump(2) + "\n";
}

FrameworkDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("document: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void save_document(const FrameworkDocument& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("document: cannot write " + path);
  out << serialize_document(doc);
}

}  // namespace parrig
