#pragma once

#include "exact_algebra/complex.hpp"
#include "mf/matrix_factorization.hpp"

#include <map>

namespace fukaya::mf {

/// Hom complex between two factorizations.
///  - Z2: free k[w]-modules Hom^0 (coordinates f00 then f11, row-major) and
///    Hom^1 (f01 then f10), with d0 : Hom^0 -> Hom^1 and d1 : Hom^1 -> Hom^0.
///  - Z: finite-dimensional pieces Hom^j for j in [low, high], each spanned by
///    the admissible entries of (f_0, f_1), and d_j : Hom^j -> Hom^{j+1}.
///    Beyond `high` every entry is admissible and the complex is 2-periodic.
struct MFHomComplex {
  Grading grading = Grading::Z2;
  algebra::RingSpec ring;
  std::map<int, std::size_t> ranks;
  std::map<int, algebra::Matrix> d;
  int low = 0;
  int high = 1;
};

MFHomComplex hom_complex(const MatrixFactorization& x, const MatrixFactorization& y);

/// Throws InvalidComplex unless d∘d = 0.
void check(const MFHomComplex& h);

struct MFCohomology {
  algebra::HomologySummary groups;
  /// Z mode: dimensions in degrees high-1 and high, repeated in all higher degrees.
  std::size_t tail_even = 0;
  std::size_t tail_odd = 0;
  bool finite() const { return tail_even == 0 && tail_odd == 0; }
};

/// Z2: SNF over k[w] folded into degrees 0 and 1. Z: dimension over k per degree.
MFCohomology cohomology_mf(const MFHomComplex& h);

/// Total dimension over k of one degree; infinite (free) parts throw InvalidInput.
std::size_t dimension_over_field(const algebra::HomologySummary& h, int degree);

/// Z-mode cohomology folded mod 2: sum of dimensions per parity. Requires a
/// finite answer.
std::pair<std::size_t, std::size_t> fold_mod_two(const MFCohomology& c);

}  // namespace fukaya::mf
