#pragma once

#include "exact_algebra/complex.hpp"
#include "graph/framed_graph.hpp"

#include <string>
#include <vector>

namespace fukaya::surface {

/// Cellular model of S/M: one 0-cell per component, one 1-cell per internal
/// edge and per leg, one 2-cell per vertex whose boundary reads off the
/// half-edges in cyclic order.
struct CWModel {
  std::vector<std::string> one_cells;  // edge ids, then leg ids
  std::vector<std::string> two_cells;  // vertex ids
  int zero_cells = 0;
  algebra::Matrix boundary2;  // one_cells x two_cells over Z
};

CWModel build_cw(const graph::FramedGraph& g);

/// Reduced homology of S/M in degrees 1 and 2: coker and ker of the boundary.
algebra::HomologySummary relative_homology(const graph::FramedGraph& g, const algebra::Ring& ring);

}  // namespace fukaya::surface
