#pragma once

#include "graph/framed_graph.hpp"

#include <vector>

namespace fukaya::graph {

/// Winding number of the framing along a closed walk h_0, ..., h_{k-1}: each
/// h_t is internal and tau(h_t) sits at the vertex of h_{t+1} (indices mod k).
/// Lifts are carried across each edge so that the arriving lift sits one
/// below the departing one in the edge torsor, then advanced to the next
/// half-edge. The start lift is position(h_0) + turns * val. Throws
/// InvalidInput for walks that are not closed.
long long winding_number(const FramedGraph& g, const std::vector<int>& walk, long long turns = 0);

/// Same, with the walk given by half-edge ids.
long long winding_number(const FramedGraph& g, const std::vector<std::string>& walk);

}  // namespace fukaya::graph
