#pragma once

#include "graph/framed_graph.hpp"
#include "paracyclic/paracyclic.hpp"

namespace fukaya::graph {

/// Framed lift of the projection of the vertex of h onto the edge of h:
/// <val - 1> -> <1>, sending h to its own side and every other half-edge to
/// the opposite side, shifted by the framing offset of h. Throws InvalidInput for legs.
para::ParaMorphism incidence_lift(const FramedGraph& g, int h);

/// Interstice dual of incidence_lift: <1> -> <val - 1>.
para::ParaMorphism incidence_dual(const FramedGraph& g, int h);

}  // namespace fukaya::graph
