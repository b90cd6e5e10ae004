#pragma once

#include "parrig/apc.hpp"
#include "parrig/flex.hpp"
#include "parrig/framework.hpp"

#include <string>
#include <vector>

namespace parrig {

struct RenderSpec {
  double stroke_fraction = 0.01;  // of the bounding-box diagonal
  double vertex_radius_fraction = 0.018;
  bool show_augmented = true;
  bool label_vertices = false;
  double margin_fraction = 0.06;
};

/// One frame. Edges are colored by class when a partition is given; edges
/// listed in `hidden` are drawn dashed (or omitted when !show_augmented).
/// The y axis points up, as in the plane.
std::string render_svg(const Framework& fw, const APCPartition* classes, const RenderSpec& spec,
                       const std::vector<Edge>& hidden = {});

/// One phase of an angle schedule: the given class sweeps linearly from
/// `from` to `to` while every other class holds its current angle.
struct SweepPhase {
  int class_id = 0;
  double from = 0.0;
  double to = 0.0;
};

/// Flex animation frames: the schedule's phases run back to back over the
/// requested frame count. Frames whose placement is degenerate (coincident
/// vertices) carry a visible annotation.
std::vector<std::string> render_flex_frames(const FlexParametrization& fp,
                                            const std::vector<SweepPhase>& schedule, int frames,
                                            const RenderSpec& spec);

}  // namespace parrig
