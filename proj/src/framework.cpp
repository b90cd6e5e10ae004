#include "parrig/framework.hpp"

#include <stdexcept>
#include <string>

namespace parrig {

void Placement::set(Vertex v, Vec2 p) {
  pos_[v] = p;
  exact_.erase(v);
}

void Placement::set_exact(Vertex v, RatVec2 p) {
  pos_[v] = Vec2(to_double(p.x), to_double(p.y));
  exact_[v] = std::move(p);
}

Vec2 Placement::at(Vertex v) const {
  auto it = pos_.find(v);
  if (it == pos_.end())
    throw std::invalid_argument("no position for vertex " + std::to_string(v));
  return it->second;
}

const RatVec2* Placement::exact_at(Vertex v) const {
  auto it = exact_.find(v);
  return it == exact_.end() ? nullptr : &it->second;
}

bool Placement::covers(const Graph& g) const {
  for (Vertex v : g.vertices())
    if (!pos_.count(v)) return false;
  return true;
}

bool Placement::fully_exact(const Graph& g) const {
  for (Vertex v : g.vertices())
    if (!exact_.count(v)) return false;
  return true;
}

Framework Framework::make(Graph graph, Placement placement, ToleranceConfig tol) {
  tol.validate();
  if (!placement.covers(graph))
    throw std::invalid_argument("placement must assign a position to every vertex");
  if (tol.mode == NumericMode::ExactRational && !placement.fully_exact(graph))
    throw std::invalid_argument("exact-rational mode requires exact coordinates on every vertex");
  Framework fw;
  fw.graph = std::move(graph);
  fw.placement = std::move(placement);
  fw.tol = tol;
  return fw;
}

}  // namespace parrig
