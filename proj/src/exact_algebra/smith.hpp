#pragma once

#include "exact_algebra/matrix.hpp"

#include <vector>

namespace fukaya::algebra {

/// U * A * V = D with U, V invertible, D diagonal, pivots normalized and
/// forming a divisibility chain.
struct SmithForm {
  Matrix U;
  Matrix D;
  Matrix V;
  std::vector<Element> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Deterministic Smith normal form over any supported Euclidean ring.
/// When `with_transforms` is false, U and V are left empty.
SmithForm smith_normal_form(const Matrix& a, const Ring& ring, bool with_transforms = true);

std::size_t rank(const Matrix& a, const Ring& ring);

}  // namespace fukaya::algebra
