#pragma once

#include "graph/framed_graph.hpp"

namespace fukaya::graph {

/// Contracts edge e = {a, b} between distinct vertices v, w. The merged vertex
/// keeps the id of v and lists v from after a, then w from after b. Offsets
/// are transported so winding numbers of closed walks are unchanged.
/// Throws LoopContraction for loops and DegenerateResult when the merged
/// vertex would have valency 0.
FramedGraph contract_edge(const FramedGraph& g, int e);

}  // namespace fukaya::graph
