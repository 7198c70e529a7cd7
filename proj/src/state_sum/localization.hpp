#pragma once

#include "exact_algebra/complex.hpp"
#include "graph/open_subgraph.hpp"

#include <string>
#include <vector>

namespace fukaya::statesum {

/// Homology-level localization sequence for an open subgraph.
struct LocalizationReport {
  graph::OpenDecomposition decomposition;
  algebra::ChainMap inclusion;  // StateSum(open) -> StateSum(graph)
  algebra::ChainMap collapse;   // StateSum(graph) -> retract complex
  algebra::HomologySummary cone_homology;
  algebra::HomologySummary retract_homology;
  bool chain_maps = false;
  bool composite_zero = false;
  bool equal = false;
  /// Whether [collapse, 0] : cone(inclusion) -> retract complex is a quasi-isomorphism.
  bool induced_quasi_iso = false;

  bool pass() const { return chain_maps && composite_zero && equal; }
};

/// State-sum complex of the retract, with one extra Z in degree 1 for every
/// vertex of the complement whose half-edges are all cut.
algebra::BoundedComplex retract_complex(const graph::OpenDecomposition& d);

/// Throws Internal if the assembled maps are not chain maps.
LocalizationReport localization_check(const graph::FramedGraph& g, const std::vector<std::string>& open_vertices,
                                      const algebra::Ring& ring);

}  // namespace fukaya::statesum
