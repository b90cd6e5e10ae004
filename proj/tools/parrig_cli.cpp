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

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using parrig::APCPartition;
using parrig::CyclicAction;
using parrig::EdgeColoring;
using parrig::Framework;
using parrig::FrameworkDocument;
using parrig::Vec2;
using parrig::Vertex;
using json = nlohmann::ordered_json;

constexpr int kOk = 0;        // analysis positive / output produced
constexpr int kNegative = 1;  // well-formed input, negative verdict
constexpr int kUsage = 2;     // usage or input errors

struct Options {
  std::string input = "-";
  bool json_out = false;
  double eps = 1e-9;
  bool exact = false;
};

FrameworkDocument read_doc(const Options& opt) {
  std::string text;
  if (opt.input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(opt.input, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + opt.input);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  FrameworkDocument doc = parrig::parse_document(text);
  parrig::ToleranceConfig tol;
  tol.eps = opt.eps;
  if (opt.exact) {
    if (!doc.framework.placement.fully_exact(doc.framework.graph))
      throw std::invalid_argument("--exact requires rational coordinates throughout");
    tol.mode = parrig::NumericMode::ExactRational;
  }
  doc.framework = Framework::make(doc.framework.graph, doc.framework.placement, tol);
  return doc;
}

json edge_json(const parrig::Edge& e) { return json::array({e.u, e.v}); }

json classes_json(const parrig::Graph& g, const APCPartition& part) {
  json out = json::array();
  for (const auto& cls : part.classes) {
    json one = json::array();
    for (int idx : cls) one.push_back(edge_json(g.edge(idx)));
    out.push_back(std::move(one));
  }
  return out;
}

void emit(const Options& opt, const json& payload, const std::string& human) {
  if (opt.json_out)
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << human;
}

std::string describe_cycle(const std::vector<Vertex>& cycle) {
  std::ostringstream s;
  for (size_t i = 0; i < cycle.size(); ++i) s << (i ? " " : "") << cycle[i];
  return s.str();
}

int cmd_classes(const Options& opt) {
  FrameworkDocument doc = read_doc(opt);
  APCPartition part = parrig::compute_apc(doc.framework.graph);
  json payload = {{"command", "classes"},
                  {"count", part.size()},
                  {"classes", classes_json(doc.framework.graph, part)}};
  std::ostringstream human;
  human << part.size() << (part.size() == 1 ? " class\n" : " classes\n");
  for (int c = 0; c < part.size(); ++c) {
    human << "class " << c << " (" << part.classes[static_cast<size_t>(c)].size()
          << " edges):";
    for (int idx : part.classes[static_cast<size_t>(c)]) {
      const parrig::Edge& e = doc.framework.graph.edge(idx);
      human << " (" << e.u << "," << e.v << ")";
    }
    human << "\n";
  }
  emit(opt, payload, human.str());
  return kOk;
}

int cmd_check(const Options& opt) {
  FrameworkDocument doc = read_doc(opt);
  parrig::ValidationReport val = parrig::validate_parallelogram_placement(doc.framework);
  APCPartition part = parrig::compute_apc(doc.framework.graph);
  parrig::WalkIndependenceReport walk =
      parrig::check_walk_independence(doc.framework, part);

  json violations = json::array();
  for (const auto& v : walk.violations)
    violations.push_back({{"cycle", v.cycle},
                          {"class", v.class_id},
                          {"sum", json::array({v.sum.x, v.sum.y})}});
  json payload = {{"command", "check"},
                  {"placement_ok", val.valid()},
                  {"injective", val.injective},
                  {"bad_quads", val.not_parallelogram.size() + val.degenerate_quads.size()},
                  {"walk_independent", walk.independent},
                  {"violations", violations},
                  {"classes", part.size()}};

  std::ostringstream human;
  human << "placement: " << (val.valid() ? "ok" : "INVALID") << "\n";
  if (!val.injective) {
    human << "  coincident vertices:";
    for (auto [a, b] : val.coincident_pairs) human << " (" << a << "," << b << ")";
    human << "\n";
  }
  for (const auto& q : val.not_parallelogram)
    human << "  quadrilateral " << q.a << "-" << q.b << "-" << q.c << "-" << q.d
          << " is not a parallelogram\n";
  for (const auto& q : val.degenerate_quads)
    human << "  quadrilateral " << q.a << "-" << q.b << "-" << q.c << "-" << q.d
          << " is degenerate\n";
  human << "walk-independence: " << (walk.independent ? "ok" : "VIOLATED") << "\n";
  for (const auto& v : walk.violations)
    human << "  witness cycle " << describe_cycle(v.cycle) << " (class " << v.class_id
          << ", sum " << v.sum.x << "," << v.sum.y << ")\n";
  emit(opt, payload, human.str());
  return val.valid() && walk.independent ? kOk : kNegative;
}

int cmd_verdict(const Options& opt) {
  FrameworkDocument doc = read_doc(opt);
  parrig::RigidityVerdict v;
  try {
    v = parrig::rigidity_verdict(doc.framework);
  } catch (const std::invalid_argument& e) {
    json payload = {{"command", "verdict"}, {"error", e.what()}};
    emit(opt, payload, std::string(e.what()) + "\n");
    return kNegative;
  }
  json payload = {{"command", "verdict"},
                  {"flexible", v.flexible},
                  {"classes", v.class_count},
                  {"dof", v.dof}};
  std::ostringstream human;
  human << (v.flexible ? "flexible" : "rigid") << ", " << v.class_count
        << (v.class_count == 1 ? " class, " : " classes, ") << v.dof
        << (v.dof == 1 ? " dof\n" : " dofs\n");
  emit(opt, payload, human.str());
  return kOk;
}

int cmd_flex(const Options& opt, int cls, int samples, const std::string& svg_dir,
             int frames, double sweep_to) {
  FrameworkDocument doc = read_doc(opt);
  APCPartition part = parrig::compute_apc(doc.framework.graph);
  if (part.size() < 2) {
    emit(opt, {{"command", "flex"}, {"error", "rigid framework has no flex"}},
         "rigid framework has no flex\n");
    return kNegative;
  }
  Vertex base = doc.framework.graph.vertices().front();
  parrig::FlexParametrization fp = parrig::decompose(doc.framework, part, base);
  if (cls < 1 || cls >= part.size())
    throw std::invalid_argument("--class out of range (1.." +
                                std::to_string(part.size() - 1) + ")");

  if (!svg_dir.empty()) {
    std::vector<parrig::SweepPhase> schedule = {{cls, 0.0, sweep_to}};
    parrig::RenderSpec spec;
    std::vector<std::string> images = parrig::render_flex_frames(fp, schedule, frames, spec);
    json files = json::array();
    for (size_t i = 0; i < images.size(); ++i) {
      std::ostringstream name;
      name << svg_dir << "/frame_" << (i < 10 ? "0" : "") << i << ".svg";
      std::ofstream out(name.str(), std::ios::binary);
      if (!out) throw std::invalid_argument("cannot write " + name.str());
      out << images[i];
      files.push_back(name.str());
    }
    emit(opt, {{"command", "flex"}, {"frames", files}},
         "wrote " + std::to_string(images.size()) + " frames to " + svg_dir + "\n");
    return kOk;
  }

  json sample_list = json::array();
  std::ostringstream human;
  human << "sweeping class " << cls << ", " << samples << " samples\n";
  for (int k = 0; k < samples; ++k) {
    std::vector<double> t(static_cast<size_t>(part.size()), 0.0);
    t[static_cast<size_t>(cls)] =
        samples == 1 ? 0.0 : 6.283185307179586 * k / samples;
    parrig::Placement pl = parrig::evaluate_flex(fp, t);
    json positions = json::object();
    human << "t=" << t[static_cast<size_t>(cls)] << ":";
    for (Vertex v : doc.framework.graph.vertices()) {
      Vec2 p = pl.at(v);
      positions[std::to_string(v)] = json::array({p.x, p.y});
      human << " " << v << ":(" << p.x << "," << p.y << ")";
    }
    human << "\n";
    sample_list.push_back(
        {{"t", t[static_cast<size_t>(cls)]}, {"positions", std::move(positions)}});
  }
  emit(opt, {{"command", "flex"}, {"class", cls}, {"samples", sample_list}}, human.str());
  return kOk;
}

EdgeColoring parse_colors(const parrig::Graph& g, const std::string& colors) {
  if (static_cast<int>(colors.size()) != g.edge_count())
    throw std::invalid_argument("--colors must have one R/B letter per edge (" +
                                std::to_string(g.edge_count()) + ")");
  EdgeColoring coloring;
  for (char ch : colors) {
    if (ch == 'R' || ch == 'r')
      coloring.color.push_back(parrig::Color::Red);
    else if (ch == 'B' || ch == 'b')
      coloring.color.push_back(parrig::Color::Blue);
    else
      throw std::invalid_argument("--colors must use only R and B");
  }
  return coloring;
}

json nac_verdict_json(const parrig::NacVerdict& v) {
  json out = {{"ok", v.ok}};
  if (!v.ok) out["reason"] = v.reason;
  if (!v.witness_cycle.empty()) out["witness_cycle"] = v.witness_cycle;
  if (v.witness_pair)
    out["witness_pair"] = json::array({v.witness_pair->first, v.witness_pair->second});
  return out;
}

int cmd_nac_verify(const Options& opt, const std::string& colors, bool cartesian) {
  FrameworkDocument doc = read_doc(opt);
  EdgeColoring coloring = parse_colors(doc.framework.graph, colors);
  parrig::NacVerdict v = cartesian ? parrig::is_cartesian_nac(doc.framework.graph, coloring)
                                   : parrig::is_nac(doc.framework.graph, coloring);
  json payload = {{"command", "nac verify"}, {"cartesian", cartesian}};
  payload.update(nac_verdict_json(v));
  std::ostringstream human;
  human << (v.ok ? "valid" : "invalid") << (cartesian ? " cartesian" : "")
        << " NAC-coloring\n";
  if (!v.ok) human << "  " << v.reason << "\n";
  if (!v.witness_cycle.empty())
    human << "  witness cycle " << describe_cycle(v.witness_cycle) << "\n";
  if (v.witness_pair)
    human << "  witness pair (" << v.witness_pair->first << "," << v.witness_pair->second
          << ")\n";
  emit(opt, payload, human.str());
  return v.ok ? kOk : kNegative;
}

int cmd_nac_from_classes(const Options& opt) {
  FrameworkDocument doc = read_doc(opt);
  APCPartition part = parrig::compute_apc(doc.framework.graph);
  std::vector<EdgeColoring> colorings =
      parrig::colorings_from_apc(doc.framework.graph, part);
  json list = json::array();
  std::ostringstream human;
  human << colorings.size() << " class-monochromatic colorings\n";
  for (const EdgeColoring& coloring : colorings) {
    std::string letters;
    for (parrig::Color c : coloring.color)
      letters += (c == parrig::Color::Red ? 'R' : 'B');
    parrig::NacVerdict v = parrig::is_nac(doc.framework.graph, coloring);
    json one = {{"colors", letters}};
    one.update(nac_verdict_json(v));
    list.push_back(std::move(one));
    human << "  " << letters << " -> " << (v.ok ? "NAC" : ("not NAC: " + v.reason))
          << "\n";
  }
  emit(opt, {{"command", "nac from-classes"}, {"count", colorings.size()},
             {"colorings", list}},
       human.str());
  return colorings.empty() ? kNegative : kOk;
}

int cmd_embed(const Options& opt) {
  FrameworkDocument doc = read_doc(opt);
  APCPartition part = parrig::compute_apc(doc.framework.graph);
  if (part.size() < 2) {
    emit(opt, {{"command", "embed"}, {"error", "single class: no product structure"}},
         "single class: no product structure\n");
    return kNegative;
  }
  std::vector<parrig::QuotientGraph> quotients;
  parrig::ProductEmbedding embedding;
  try {
    quotients = parrig::quotient_graphs(doc.framework.graph, part);
    embedding = parrig::embed(doc.framework.graph, part, quotients);
  } catch (const std::exception& e) {
    emit(opt, {{"command", "embed"}, {"error", e.what()}}, std::string(e.what()) + "\n");
    return kNegative;
  }
  json qjson = json::array();
  std::ostringstream human;
  human << quotients.size() << " quotients, image coordinates per vertex follow\n";
  for (const auto& q : quotients) {
    json edges = json::array();
    for (const parrig::Edge& e : q.graph.edges()) edges.push_back(edge_json(e));
    qjson.push_back({{"class", q.class_id},
                     {"vertices", q.graph.vertex_count()},
                     {"edges", std::move(edges)}});
    human << "  quotient " << q.class_id << ": " << q.graph.vertex_count()
          << " components, " << q.graph.edge_count() << " edges\n";
  }
  json hjson = json::object();
  const auto& g = doc.framework.graph;
  for (int i = 0; i < g.vertex_count(); ++i) {
    hjson[std::to_string(g.vertex_at(i))] = embedding.coords[static_cast<size_t>(i)];
    human << "  h(" << g.vertex_at(i) << ") = (";
    for (size_t k = 0; k < embedding.coords[static_cast<size_t>(i)].size(); ++k)
      human << (k ? "," : "") << embedding.coords[static_cast<size_t>(i)][k];
    human << ")\n";
  }
  emit(opt,
       {{"command", "embed"},
        {"quotients", qjson},
        {"h", hjson},
        {"projection_sizes", embedding.projection_sizes}},
       human.str());
  return kOk;
}

CyclicAction resolve_action(const FrameworkDocument& doc, const std::string& center,
                            int order) {
  if (!center.empty()) {
    if (order < 2) throw std::invalid_argument("--order must be >= 2");
    double x = 0, y = 0;
    char comma = 0;
    std::istringstream s(center);
    if (!(s >> x >> comma >> y) || comma != ',')
      throw std::invalid_argument("--center expects \"x,y\"");
    return parrig::action_from_rotation(doc.framework, Vec2{x, y}, order);
  }
  if (doc.symmetry) {
    CyclicAction action;
    action.n = doc.symmetry->n;
    action.omega = doc.symmetry->omega;
    return action;
  }
  throw std::invalid_argument("no symmetry: pass --center x,y --order n or a document symmetry block");
}

int cmd_symmetry_classes(const Options& opt, const std::string& center, int order) {
  FrameworkDocument doc = read_doc(opt);
  CyclicAction action = resolve_action(doc, center, order);
  parrig::CnValidation val = parrig::validate_cn_symmetric(doc.framework, action);
  if (!val.valid) {
    json problems = val.problems;
    std::ostringstream human;
    human << "not Cn-symmetric\n";
    for (const auto& p : val.problems) human << "  " << p << "\n";
    emit(opt, {{"command", "symmetry classes"}, {"valid", false}, {"problems", problems}},
         human.str());
    return kNegative;
  }
  parrig::CnAPCPartition cn = parrig::compute_cn_apc(doc.framework.graph, action);
  json cls = json::array();
  for (const auto& group : cn.classes) cls.push_back(group);
  std::ostringstream human;
  human << cn.size() << (cn.size() == 1 ? " Cn-class\n" : " Cn-classes\n");
  for (int c = 0; c < cn.size(); ++c) {
    human << "Cn-class " << c << ": base classes";
    for (int b : cn.classes[static_cast<size_t>(c)]) human << " " << b;
    human << "\n";
  }
  emit(opt,
       {{"command", "symmetry classes"},
        {"valid", true},
        {"n", action.n},
        {"count", cn.size()},
        {"cn_classes", cls}},
       human.str());
  return kOk;
}

int cmd_symmetry_flex(const Options& opt, const std::string& center, int order,
                      int cn_cls, double angle) {
  FrameworkDocument doc = read_doc(opt);
  CyclicAction action = resolve_action(doc, center, order);
  parrig::CnValidation val = parrig::validate_cn_symmetric(doc.framework, action);
  if (!val.valid) {
    emit(opt, {{"command", "symmetry flex"}, {"error", "not Cn-symmetric"}},
         "not Cn-symmetric\n");
    return kNegative;
  }
  parrig::CnAPCPartition cn = parrig::compute_cn_apc(doc.framework.graph, action);
  if (cn.size() < 2) {
    emit(opt, {{"command", "symmetry flex"}, {"error", "Cn-rigid: single Cn-class"}},
         "Cn-rigid: single Cn-class\n");
    return kNegative;
  }
  if (cn_cls < 1 || cn_cls >= cn.size())
    throw std::invalid_argument("--cn-class out of range (1.." +
                                std::to_string(cn.size() - 1) + ")");
  APCPartition part = parrig::compute_apc(doc.framework.graph);
  Vertex base = doc.framework.graph.vertices().front();
  parrig::FlexParametrization fp = parrig::decompose(doc.framework, part, base);
  std::vector<double> t(static_cast<size_t>(cn.size()), 0.0);
  t[static_cast<size_t>(cn_cls)] = angle;
  parrig::Placement pl = parrig::evaluate_cn_flex(fp, action, cn, t);
  json positions = json::object();
  std::ostringstream human;
  human << "equivariant flex, Cn-class " << cn_cls << " at angle " << angle << "\n";
  for (Vertex v : doc.framework.graph.vertices()) {
    Vec2 p = pl.at(v);
    positions[std::to_string(v)] = json::array({p.x, p.y});
    human << "  " << v << ": (" << p.x << "," << p.y << ")\n";
  }
  emit(opt,
       {{"command", "symmetry flex"},
        {"cn_class", cn_cls},
        {"angle", angle},
        {"positions", positions}},
       human.str());
  return kOk;
}

int cmd_brace(const Options& opt) {
  FrameworkDocument doc = read_doc(opt);
  APCPartition part = parrig::compute_apc(doc.framework.graph);
  if (part.size() < 2) {
    emit(opt, {{"command", "brace suggest"}, {"braces", json::array()}, {"possible", true}},
         "already a single class; nothing to brace\n");
    return kOk;
  }
  parrig::BraceSuggestion suggestion = parrig::suggest_braces(doc.framework.graph, part);
  json braces = json::array();
  for (const parrig::Edge& e : suggestion.braces) braces.push_back(edge_json(e));
  std::ostringstream human;
  if (suggestion.possible) {
    human << suggestion.braces.size() << " diagonal(s):";
    for (const parrig::Edge& e : suggestion.braces) human << " (" << e.u << "," << e.v << ")";
    human << "\n";
  } else {
    human << "bracing impossible; unreachable class groups:\n";
    for (const auto& group : suggestion.unreachable_groups) {
      human << " ";
      for (int c : group) human << " " << c;
      human << "\n";
    }
  }
  json payload = {{"command", "brace suggest"},
                  {"possible", suggestion.possible},
                  {"braces", braces}};
  if (!suggestion.possible) payload["unreachable_groups"] = suggestion.unreachable_groups;
  emit(opt, payload, human.str());
  return suggestion.possible ? kOk : kNegative;
}

int cmd_tiling(const Options& opt, const std::string& name, int extent, bool augment) {
  parrig::Patch patch = parrig::generate_patch(name, extent);
  if (augment) patch = parrig::augment_hexagons(patch);
  for (const std::string& w : patch.warnings) std::cerr << "warning: " << w << "\n";

  FrameworkDocument doc = FrameworkDocument::wrap(patch.framework);
  json augmented_edges = json::array();
  for (const parrig::Edge& e : patch.augmented_edges) augmented_edges.push_back(edge_json(e));
  json meta = {{"tiling", patch.tiling},
               {"extent", patch.extent},
               {"augmented", patch.augmented}};
  if (!patch.augmented_edges.empty()) meta["augmented_edges"] = augmented_edges;
  doc.metadata_json = meta.dump();
  std::cout << parrig::serialize_document(doc);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar bar-joint framework analysis"};
  app.require_subcommand(1);
  app.get_formatter()->column_width(30);

  Options opt;
  app.add_flag("--json", opt.json_out, "structured output");
  app.add_option("--eps", opt.eps, "comparison tolerance (default 1e-9)");
  app.add_flag("--exact", opt.exact, "exact rational comparisons (requires p/q coordinates)");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "framework document path, or - for stdin");
  };

  CLI::App* classes = app.add_subcommand("classes", "angle-preserving classes");
  add_input(classes);

  CLI::App* check = app.add_subcommand("check", "placement + walk-independence validation");
  add_input(check);

  CLI::App* verdict = app.add_subcommand("verdict", "rigid/flexible and degrees of freedom");
  add_input(verdict);

  CLI::App* flex = app.add_subcommand("flex", "flex trajectory samples or SVG frames");
  add_input(flex);
  int flex_class = 1, flex_samples = 5, flex_frames = 10;
  double sweep_to = 0.5235987755982988;  // pi/6
  std::string svg_dir;
  flex->add_option("--class", flex_class, "class to sweep (default 1)");
  flex->add_option("--samples", flex_samples, "trajectory sample count");
  flex->add_option("--svg-dir", svg_dir, "write SVG frames into this directory");
  flex->add_option("--frames", flex_frames, "SVG frame count");
  flex->add_option("--sweep-to", sweep_to, "sweep end angle in [0,2pi)");

  CLI::App* nac = app.add_subcommand("nac", "NAC-coloring operations");
  nac->require_subcommand(1);
  CLI::App* nac_verify = nac->add_subcommand("verify", "verify an explicit coloring");
  add_input(nac_verify);
  std::string colors;
  bool cartesian = false;
  nac_verify->add_option("--colors", colors, "R/B letters, one per edge in canonical order")
      ->required();
  nac_verify->add_flag("--cartesian", cartesian, "also require the cartesian property");
  CLI::App* nac_from = nac->add_subcommand("from-classes", "class-monochromatic colorings");
  add_input(nac_from);

  CLI::App* embed = app.add_subcommand("embed", "cartesian product embedding");
  add_input(embed);

  CLI::App* symmetry = app.add_subcommand("symmetry", "Cn-symmetric analysis");
  symmetry->require_subcommand(1);
  std::string center;
  int order = 0, cn_cls = 1;
  double angle = 0.5235987755982988;
  CLI::App* sym_classes = symmetry->add_subcommand("classes", "Cn-classes under the action");
  add_input(sym_classes);
  sym_classes->add_option("--center", center, "rotation center \"x,y\"");
  sym_classes->add_option("--order", order, "rotation order n");
  CLI::App* sym_flex = symmetry->add_subcommand("flex", "equivariant flex sample");
  add_input(sym_flex);
  sym_flex->add_option("--center", center, "rotation center \"x,y\"");
  sym_flex->add_option("--order", order, "rotation order n");
  sym_flex->add_option("--cn-class", cn_cls, "Cn-class to sweep (default 1)");
  sym_flex->add_option("--angle", angle, "sweep angle");

  CLI::App* brace = app.add_subcommand("brace", "bracing suggestions");
  brace->require_subcommand(1);
  CLI::App* brace_suggest = brace->add_subcommand("suggest", "diagonals merging all classes");
  add_input(brace_suggest);

  CLI::App* tiling = app.add_subcommand("tiling", "tessellation patches");
  tiling->require_subcommand(1);
  CLI::App* tiling_gen = tiling->add_subcommand("gen", "generate a patch document");
  std::string tiling_name;
  int extent = 1;
  bool augment = false;
  tiling_gen->add_option("name", tiling_name, "tiling name")->required();
  tiling_gen->add_option("--extent", extent, "patch radius in cells (default 1)");
  tiling_gen->add_flag("--augment", augment, "augment hexagonal faces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsage;
  }

  try {
    if (app.got_subcommand(classes)) return cmd_classes(opt);
    if (app.got_subcommand(check)) return cmd_check(opt);
    if (app.got_subcommand(verdict)) return cmd_verdict(opt);
    if (app.got_subcommand(flex))
      return cmd_flex(opt, flex_class, flex_samples, svg_dir, flex_frames, sweep_to);
    if (app.got_subcommand(nac)) {
      if (nac->got_subcommand(nac_verify)) return cmd_nac_verify(opt, colors, cartesian);
      return cmd_nac_from_classes(opt);
    }
    if (app.got_subcommand(embed)) return cmd_embed(opt);
    if (app.got_subcommand(symmetry)) {
      if (symmetry->got_subcommand(sym_classes))
        return cmd_symmetry_classes(opt, center, order);
      return cmd_symmetry_flex(opt, center, order, cn_cls, angle);
    }
    if (app.got_subcommand(brace)) return cmd_brace(opt);
    if (app.got_subcommand(tiling)) return cmd_tiling(opt, tiling_name, extent, augment);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
