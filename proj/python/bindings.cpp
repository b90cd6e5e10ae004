#include "parrig/apc.hpp"
#include "parrig/document.hpp"
#include "parrig/flex.hpp"
#include "parrig/nac.hpp"
#include "parrig/product.hpp"
#include "parrig/svg.hpp"
#include "parrig/symmetry.hpp"
#include "parrig/tiling.hpp"
#include "parrig/validate.hpp"
#include "parrig/walk.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;

namespace {

using namespace parrig;

Framework build_framework(const std::vector<std::pair<int, int>>& edges,
                          const std::map<int, std::pair<double, double>>& positions,
                          double eps) {
  Placement placement;
  std::vector<Vertex> ids;
  for (const auto& [v, p] : positions) {
    ids.push_back(v);
    placement.set(v, Vec2(p.first, p.second));
  }
  ToleranceConfig tol;
  tol.eps = eps;
  return Framework::make(Graph::with_vertices(ids, edges), std::move(placement), tol);
}

std::vector<std::vector<std::pair<int, int>>> classes_of(const Framework& fw) {
  APCPartition part = compute_apc(fw.graph);
  std::vector<std::vector<std::pair<int, int>>> out;
  for (const auto& cls : part.classes) {
    std::vector<std::pair<int, int>> one;
    for (int idx : cls) {
      const Edge& e = fw.graph.edge(idx);
      one.emplace_back(e.u, e.v);
    }
    out.push_back(std::move(one));
  }
  return out;
}

py::dict check_framework(const Framework& fw) {
  ValidationReport val = validate_parallelogram_placement(fw);
  APCPartition part = compute_apc(fw.graph);
  WalkIndependenceReport walk = check_walk_independence(fw, part);
  py::dict out;
  out["placement_ok"] = val.valid();
  out["injective"] = val.injective;
  out["walk_independent"] = walk.independent;
  out["classes"] = part.size();
  py::list violations;
  for (const auto& v : walk.violations) {
    py::dict one;
    one["cycle"] = v.cycle;
    one["class"] = v.class_id;
    one["sum"] = py::make_tuple(v.sum.x, v.sum.y);
    violations.append(one);
  }
  out["violations"] = violations;
  return out;
}

py::dict verdict_of(const Framework& fw) {
  RigidityVerdict v = rigidity_verdict(fw);
  py::dict out;
  out["flexible"] = v.flexible;
  out["classes"] = v.class_count;
  out["dof"] = v.dof;
  return out;
}

py::dict flex_at(const Framework& fw, const std::vector<double>& t) {
  APCPartition part = compute_apc(fw.graph);
  FlexParametrization fp = decompose(fw, part, fw.graph.vertices().front());
  Placement pl = evaluate_flex(fp, t);
  py::dict out;
  for (Vertex v : fw.graph.vertices()) {
    Vec2 p = pl.at(v);
    out[py::int_(v)] = py::make_tuple(p.x, p.y);
  }
  return out;
}

std::vector<std::string> nac_colorings(const Framework& fw) {
  APCPartition part = compute_apc(fw.graph);
  std::vector<std::string> out;
  for (const EdgeColoring& coloring : colorings_from_apc(fw.graph, part)) {
    std::string letters;
    for (Color c : coloring.color) letters += (c == Color::Red ? 'R' : 'B');
    out.push_back(std::move(letters));
  }
  return out;
}

py::dict nac_verify(const Framework& fw, const std::string& colors, bool cartesian) {
  if (static_cast<int>(colors.size()) != fw.graph.edge_count())
    throw std::invalid_argument("colors must have one R/B letter per edge");
  EdgeColoring coloring;
  for (char ch : colors)
    coloring.color.push_back(ch == 'R' || ch == 'r' ? Color::Red : Color::Blue);
  NacVerdict v = cartesian ? is_cartesian_nac(fw.graph, coloring) : is_nac(fw.graph, coloring);
  py::dict out;
  out["ok"] = v.ok;
  if (!v.ok) out["reason"] = v.reason;
  if (!v.witness_cycle.empty()) out["witness_cycle"] = v.witness_cycle;
  if (v.witness_pair)
    out["witness_pair"] = py::make_tuple(v.witness_pair->first, v.witness_pair->second);
  return out;
}

py::dict embed_coords(const Framework& fw) {
  APCPartition part = compute_apc(fw.graph);
  auto quotients = quotient_graphs(fw.graph, part);
  ProductEmbedding embedding = embed(fw.graph, part, quotients);
  py::dict out;
  for (int i = 0; i < fw.graph.vertex_count(); ++i)
    out[py::int_(fw.graph.vertex_at(i))] = embedding.coords[static_cast<size_t>(i)];
  return out;
}

Framework tiling_framework(const std::string& name, int extent, bool augment) {
  Patch patch = generate_patch(name, extent);
  if (augment) patch = augment_hexagons(patch);
  return patch.framework;
}

int symmetry_class_count(const Framework& fw, double cx, double cy, int n) {
  CyclicAction action = action_from_rotation(fw, Vec2{cx, cy}, n);
  return compute_cn_apc(fw.graph, action).size();
}

std::string render(const Framework& fw, bool color_classes) {
  RenderSpec spec;
  if (!color_classes) return render_svg(fw, nullptr, spec);
  APCPartition part = compute_apc(fw.graph);
  return render_svg(fw, &part, spec);
}

}  // namespace

PYBIND11_MODULE(_parrig, m) {
  m.doc() = "planar bar-joint framework analysis";

  py::class_<Framework>(m, "Framework")
      .def_property_readonly(
          "vertex_count", [](const Framework& fw) { return fw.graph.vertex_count(); })
      .def_property_readonly(
          "edge_count", [](const Framework& fw) { return fw.graph.edge_count(); })
      .def("vertices", [](const Framework& fw) { return fw.graph.vertices(); })
      .def("edges",
           [](const Framework& fw) {
             std::vector<std::pair<int, int>> out;
             for (const Edge& e : fw.graph.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("position", [](const Framework& fw, Vertex v) {
        Vec2 p = fw.pos(v);
        return py::make_tuple(p.x, p.y);
      });

  m.def("make_framework", &build_framework, py::arg("edges"), py::arg("positions"),
        py::arg("eps") = 1e-9, "framework from an edge list and a position map");
  m.def("parse", [](const std::string& text) { return parse_document(text).framework; },
        py::arg("text"), "parse a framework document");
  m.def("serialize",
        [](const Framework& fw) { return serialize_document(FrameworkDocument::wrap(fw)); },
        py::arg("framework"), "canonical document text");
  m.def("classes", &classes_of, py::arg("framework"),
        "angle-preserving classes as edge lists");
  m.def("check", &check_framework, py::arg("framework"),
        "placement validation + walk-independence");
  m.def("verdict", &verdict_of, py::arg("framework"), "rigid/flexible with dof count");
  m.def("flex_at", &flex_at, py::arg("framework"), py::arg("t"),
        "flexed placement at the given per-class angles (t[0] == 0)");
  m.def("rigidity_rank", [](const Framework& fw) { return rigidity_matrix_rank(fw); },
        py::arg("framework"));
  m.def("nac_colorings", &nac_colorings, py::arg("framework"),
        "class-monochromatic coloring candidates as R/B strings");
  m.def("nac_verify", &nac_verify, py::arg("framework"), py::arg("colors"),
        py::arg("cartesian") = false);
  m.def("embed_coords", &embed_coords, py::arg("framework"),
        "cartesian product coordinates per vertex");
  m.def("tiling", &tiling_framework, py::arg("name"), py::arg("extent"),
        py::arg("augment") = false, "tessellation patch framework");
  m.def("tiling_names", [] { return tiling_names(); });
  m.def("symmetry_class_count", &symmetry_class_count, py::arg("framework"), py::arg("cx"),
        py::arg("cy"), py::arg("n"), "number of Cn-classes under the rotation");
  m.def("render_svg", &render, py::arg("framework"), py::arg("color_classes") = true,
        "single SVG snapshot");
}
