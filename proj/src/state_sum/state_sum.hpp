#pragma once

#include "exact_algebra/complex.hpp"
#include "graph/framed_graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace fukaya::statesum {

/// Graded free coefficient module E = H(k) with an optional 2-periodic fold.
struct CoefficientObject {
  algebra::RingSpec ring = algebra::RingSpec::integers();
  std::map<int, std::size_t> ranks{{0, 1}};
  bool periodic = false;

  static CoefficientObject unit(algebra::RingSpec ring, bool periodic = false) { return {ring, {{0, 1}}, periodic}; }
};

/// Edges (degree 1) -> vertex arc lattices (degree 0).
struct StateSumComplex {
  std::vector<std::string> edges;
  std::vector<std::string> vertices;
  std::vector<std::size_t> block_start;  // row offset of each vertex block
  std::vector<std::size_t> block_size;   // valency - 1
  algebra::Matrix matrix;                // over Z

  algebra::BoundedComplex as_complex() const;
};

StateSumComplex build_state_sum(const graph::FramedGraph& g);

/// Tensors homology in a ring with E: degree i + d gets rank(E_d) copies.
algebra::HomologySummary tensor_coefficients(const algebra::HomologySummary& h, const CoefficientObject& e);

/// Folds degrees mod 2: even into 0, odd into 1.
algebra::HomologySummary fold_periodic(const algebra::HomologySummary& h);

/// H_0 = coker M, H_1 = ker M, tensored with E and folded in periodic mode.
algebra::HomologySummary invariant_homology(const graph::FramedGraph& g, const CoefficientObject& e);

/// H_{i+1}(S, M) from the CW model, placed in degree i, tensored and folded alike.
algebra::HomologySummary surface_homology(const graph::FramedGraph& g, const CoefficientObject& e);

}  // namespace fukaya::statesum
