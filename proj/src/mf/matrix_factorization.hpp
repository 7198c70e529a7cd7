#pragma once

#include "exact_algebra/matrix.hpp"
#include "paracyclic/paracyclic.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fukaya::mf {

enum class Grading { Z2, Z };
enum class Variant { None, L, R };

/// Scalar factorization [i,j] of z^{n+1}. In Z2 mode indices live in Z/(n+1)
/// and i == j needs a variant; in Z mode 0 <= j - i <= n+1.
struct ScalarMF {
  Grading grading = Grading::Z2;
  int n = 0;
  long long i = 0;
  long long j = 0;
  Variant variant = Variant::None;

  static ScalarMF make(Grading grading, int n, long long i, long long j, Variant variant = Variant::None);
  std::string to_string() const;
  friend bool operator==(const ScalarMF&, const ScalarMF&) = default;
};

/// Every scalar object for given n; in Z mode the indices are those with
/// i in [0, n].
std::vector<ScalarMF> scalar_objects(Grading grading, int n);

/// Matrix factorization X^0 <-> X^1 of w = z^{n+1} over k[z], k = F_p or Q
/// (field 0). Summands are twists k[z](t) and entries are stored as
/// coefficients:
///  - Z2: an entry from twist a to twist b is c(w) z^{(b-a) mod (n+1)} with
///    c in k[w]; twists are kept in [0, n].
///  - Z: an entry from twist a to twist b is c z^{b-a} with c in k, and must
///    vanish when b < a. d1 is read as a map X^1 -> X^0(n+1).
struct MatrixFactorization {
  Grading grading = Grading::Z2;
  int n = 0;
  std::int64_t field = 0;
  std::vector<long long> twist0;
  std::vector<long long> twist1;
  algebra::Matrix d0;  // |X1| x |X0|
  algebra::Matrix d1;  // |X0| x |X1|
};

algebra::RingSpec coefficient_ring(Grading grading, std::int64_t field);

MatrixFactorization to_mf(const ScalarMF& x, std::int64_t field = 0);

/// Coefficient form of g∘f where f goes from twists `src` to `mid` and g from
/// `mid` to `dst`.
algebra::Matrix compose(const algebra::Ring& ring, Grading grading, int n, const algebra::Matrix& g,
                        const algebra::Matrix& f, const std::vector<long long>& src,
                        const std::vector<long long>& mid, const std::vector<long long>& dst);

/// Throws InvalidInput unless d1 d0 = w and d0 d1 = w and, in Z mode, every
/// entry has nonnegative z-degree.
void check(const MatrixFactorization& x);

/// Closed degree-0 morphism given by its two components.
struct MFMorphism {
  algebra::Matrix f0;  // X0 -> Y0
  algebra::Matrix f1;  // X1 -> Y1
};

bool is_closed(const MatrixFactorization& x, const MatrixFactorization& y, const MFMorphism& phi);

/// Cone with C^0 = Y^0 + X^1, C^1 = Y^1 + X^0 (shifted by n+1 in Z mode) and
/// differentials [[dY, phi], [0, -dX]]. Throws InvalidInput if phi is not closed.
MatrixFactorization cone_mf(const MatrixFactorization& x, const MatrixFactorization& y, const MFMorphism& phi);

/// The morphism [0,i] -> [0,j], i <= j, with components 1 and z^{j-i}.
MFMorphism canonical_morphism(const ScalarMF& source, const ScalarMF& target);

/// [i,j] -> [f(i), f(j)] along the lift of f : <n> -> <m>. Z mode only.
ScalarMF structure_map_on_objects(const para::ParaMorphism& f, const ScalarMF& x);

}  // namespace fukaya::mf
