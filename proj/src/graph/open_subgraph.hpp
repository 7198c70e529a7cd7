#pragma once

#include "graph/framed_graph.hpp"

#include <string>
#include <vector>

namespace fukaya::graph {

/// Decomposition of a graph along a vertex subset. Gamma' is the open
/// subgraph on the subset (all half-edges at those vertices); Gamma'' is the
/// rest. A cut half-edge lies in Gamma'' with partner in Gamma'.
struct OpenDecomposition {
  FramedGraph open;        // Gamma'
  FramedGraph complement;  // Gamma''
  /// Gamma'' plus, for each cut half-edge h, tau(h) on a new one-valent vertex.
  FramedGraph closure;
  /// Gamma'' without its cut half-edges; vertices left empty are dropped and
  /// listed in `emptied`.
  FramedGraph retract;
  std::vector<std::string> emptied;
  std::vector<std::string> cut;  // cut half-edge ids, in Gamma order
};

/// Subsets are vertex ids; unknown ids throw InvalidInput.
OpenDecomposition open_decomposition(const FramedGraph& g, const std::vector<std::string>& vertices);

/// Subgraph on the listed vertices keeping only edges with both ends inside;
/// the half-edges of other edges become legs.
FramedGraph induced_subgraph(const FramedGraph& g, const std::vector<int>& vertices, const std::string& name);

}  // namespace fukaya::graph
