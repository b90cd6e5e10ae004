#include "parrig/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace parrig {

namespace {

constexpr double kTau = 6.283185307179586477;

const char* kPalette[] = {
    "#c0392b", "#2980b9", "#27ae60", "#f39c12", "#8e44ad", "#16a085",
    "#d35400", "#2c3e50", "#7f8c8d", "#e84393", "#6c5ce7", "#795548",
};
constexpr int kPaletteSize = 12;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v + 0.0);  // +0.0 folds -0
  return buf;
}

struct Box {
  double xmin = std::numeric_limits<double>::max();
  double ymin = std::numeric_limits<double>::max();
  double xmax = std::numeric_limits<double>::lowest();
  double ymax = std::numeric_limits<double>::lowest();

  void grow(Vec2 p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  double diagonal() const {
    double d = std::hypot(xmax - xmin, ymax - ymin);
    return d > 0 ? d : 1.0;
  }
};

bool has_coincident_pair(const Framework& fw, double eps) {
  std::vector<Vec2> pts;
  for (Vertex v : fw.graph.vertices()) pts.push_back(fw.pos(v));
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size() && pts[j].x - pts[i].x <= eps; ++j)
      if ((pts[j] - pts[i]).norm() <= eps) return true;
  return false;
}

std::string render_frame(const Framework& fw, const APCPartition* classes,
                         const RenderSpec& spec, const std::vector<Edge>& hidden,
                         bool degenerate) {
  // y axis flipped once here; everything below works in svg coordinates
  Box box;
  for (Vertex v : fw.graph.vertices()) {
    Vec2 p = fw.pos(v);
    box.grow({p.x, -p.y});
  }
  const double diag = box.diagonal();
  const double margin = spec.margin_fraction * diag;
  const double stroke = spec.stroke_fraction * diag;
  const double radius = spec.vertex_radius_fraction * diag;

  std::set<Edge> hide(hidden.begin(), hidden.end());

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
      << num(box.xmin - margin) << " " << num(box.ymin - margin) << " "
      << num(box.xmax - box.xmin + 2 * margin) << " "
      << num(box.ymax - box.ymin + 2 * margin) << "\">\n";
  svg << "<g stroke-linecap=\"round\" stroke-width=\"" << num(stroke) << "\">\n";
  const auto& edges = fw.graph.edges();
  for (size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    bool hidden_edge = hide.count(e) > 0;
    if (hidden_edge && !spec.show_augmented) continue;
    Vec2 a = fw.pos(e.u), b = fw.pos(e.v);
    const char* color = "#333333";
    if (classes && i < classes->class_of_edge.size())
      color = kPalette[classes->class_of_edge[i] % kPaletteSize];
    svg << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(-a.y) << "\" x2=\""
        << num(b.x) << "\" y2=\"" << num(-b.y) << "\" stroke=\"" << color << "\"";
    if (hidden_edge) svg << " stroke-dasharray=\"" << num(2 * stroke) << "\"";
    svg << "/>\n";
  }
  svg << "</g>\n<g fill=\"#1a1a1a\">\n";
  for (Vertex v : fw.graph.vertices()) {
    Vec2 p = fw.pos(v);
    svg << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(-p.y) << "\" r=\""
        << num(radius) << "\"/>\n";
    if (spec.label_vertices)
      svg << "<text x=\"" << num(p.x + 1.5 * radius) << "\" y=\"" << num(-p.y)
          << "\" font-size=\"" << num(4 * radius) << "\">" << v << "</text>\n";
  }
  svg << "</g>\n";
  if (degenerate)
    svg << "<text x=\"" << num(box.xmin) << "\" y=\"" << num(box.ymin - margin / 2)
        << "\" font-size=\"" << num(8 * radius)
        << "\" fill=\"#c0392b\">degenerate placement</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

std::string render_svg(const Framework& fw, const APCPartition* classes,
                       const RenderSpec& spec, const std::vector<Edge>& hidden) {
  return render_frame(fw, classes, spec, hidden, false);
}

std::vector<std::string> render_flex_frames(const FlexParametrization& fp,
                                            const std::vector<SweepPhase>& schedule,
                                            int frames, const RenderSpec& spec) {
  if (frames < 1) throw std::invalid_argument("render_flex_frames: frame count must be >= 1");
  if (schedule.empty()) throw std::invalid_argument("render_flex_frames: empty schedule");
  for (const SweepPhase& phase : schedule) {
    if (phase.class_id <= 0 || phase.class_id >= fp.class_count())
      throw std::invalid_argument("render_flex_frames: phase class out of range");
    auto in_range = [](double a) { return a >= 0.0 && a < kTau; };
    if (!in_range(phase.from) || !in_range(phase.to))
      throw std::invalid_argument("render_flex_frames: angles must lie in [0, 2*pi)");
  }

  const double scale_eps = [&] {
    double s = 1.0;
    for (Vertex v : fp.framework.graph.vertices()) s = std::max(s, fp.framework.pos(v).norm());
    return 1e-7 * s;
  }();

  std::vector<std::string> out;
  const int phases = static_cast<int>(schedule.size());
  for (int f = 0; f < frames; ++f) {
    double s = frames == 1 ? 0.0 : static_cast<double>(f) / (frames - 1);
    double where = s * phases;
    int p = std::min(static_cast<int>(where), phases - 1);
    double u = where - p;

    std::vector<double> t(static_cast<size_t>(fp.class_count()), 0.0);
    for (int k = 0; k < p; ++k)
      t[static_cast<size_t>(schedule[static_cast<size_t>(k)].class_id)] =
          schedule[static_cast<size_t>(k)].to;
    const SweepPhase& cur = schedule[static_cast<size_t>(p)];
    t[static_cast<size_t>(cur.class_id)] = cur.from + (cur.to - cur.from) * u;

    Placement frame_placement = evaluate_flex(fp, t);
    Framework frame = Framework::make(fp.framework.graph, std::move(frame_placement),
                                      fp.framework.tol);
    out.push_back(render_frame(frame, &fp.classes, spec, {},
                               has_coincident_pair(frame, scale_eps)));
  }
  return out;
}

}  // namespace parrig
