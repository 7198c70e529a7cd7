#pragma once

#include "graph/framed_graph.hpp"

#include <vector>

namespace fukaya::graph {

struct ComponentSurface {
  std::vector<int> vertices;
  int genus = 0;
  int boundary_circles = 0;
  int interior_marked = 0;
  std::vector<int> boundary_marked;  // one count per circle, sorted
  long long euler = 0;               // of S
  bool stable = true;

  int marked_points() const;
};

struct SurfaceReport {
  std::vector<ComponentSurface> components;

  bool stable() const;
  int marked_points() const;
};

/// Corner (v, i) is the gap between the i-th and (i+1)-th half-edge at v.
/// Returns the marked point index of every corner, indexed by
/// corner_offset(v) + i, together with the number of marked points.
struct CornerClasses {
  std::vector<int> corner_offset;  // per vertex
  std::vector<int> marked_of;      // per corner
  int count = 0;
};

CornerClasses corner_classes(const FramedGraph& g);

SurfaceReport surface_invariants(const FramedGraph& g);

}  // namespace fukaya::graph
