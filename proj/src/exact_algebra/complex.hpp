#pragma once

#include "exact_algebra/matrix.hpp"
#include "exact_algebra/smith.hpp"

#include <map>
#include <string>
#include <vector>

namespace fukaya::algebra {

/// Homologically graded complex with finitely many nonzero terms.
/// The differential d_n maps degree n to degree n-1 and is stored as a
/// rank(n-1) x rank(n) matrix.
class BoundedComplex {
 public:
  BoundedComplex() = default;

  /// Validates shapes and, in `ring`, that d_{n} d_{n+1} = 0.
  static BoundedComplex make(const Ring& ring, std::map<int, std::size_t> ranks, std::map<int, Matrix> differentials);
  /// Same, but skips the d∘d check. Used for complexes whose check happens
  /// later in a specific ring.
  static BoundedComplex make_unchecked(std::map<int, std::size_t> ranks, std::map<int, Matrix> differentials);

  std::size_t rank(int degree) const;
  /// d_n : C_n -> C_{n-1}, zero matrix of the right shape if not stored.
  Matrix differential(int degree) const;
  int min_degree() const;
  int max_degree() const;
  bool is_zero() const;

  /// Throws InvalidComplex if d∘d ≠ 0 or shapes mismatch.
  void check(const Ring& ring) const;

  const std::map<int, std::size_t>& ranks() const { return ranks_; }

 private:
  std::map<int, std::size_t> ranks_;
  std::map<int, Matrix> diffs_;
};

struct DegreeHomology {
  std::size_t free_rank = 0;
  std::vector<Element> torsion;  // non-unit invariant factors, divisibility order

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

/// Homology by degree. Only nonzero degrees are stored, so equality is
/// equality of the graded modules.
class HomologySummary {
 public:
  HomologySummary() = default;
  explicit HomologySummary(RingSpec ring) : ring_(ring) {}

  void set(int degree, DegreeHomology h);
  void accumulate(int degree, const DegreeHomology& h);

  std::size_t free_rank(int degree) const;
  std::vector<Element> torsion(int degree) const;
  const DegreeHomology& at(int degree) const;
  const std::map<int, DegreeHomology>& degrees() const { return by_degree_; }
  const RingSpec& ring() const { return ring_; }
  bool is_zero() const { return by_degree_.empty(); }

  /// Rendering like "Z^2 + Z/2" for one degree, "0" when trivial.
  std::string describe(int degree) const;
  std::string describe() const;

  friend bool operator==(const HomologySummary& a, const HomologySummary& b) {
    return a.ring_ == b.ring_ && a.by_degree_ == b.by_degree_;
  }

 private:
  RingSpec ring_;
  std::map<int, DegreeHomology> by_degree_;
};

HomologySummary homology(const BoundedComplex& c, const Ring& ring);

/// Homology of the one-step complex C_1 --m--> C_0 placed in degrees (1, 0).
HomologySummary two_term_homology(const Matrix& m, const Ring& ring, int low_degree = 0);

/// Degreewise f_n : A_n -> B_n.
struct ChainMap {
  BoundedComplex source;
  BoundedComplex target;
  std::map<int, Matrix> components;

  Matrix component(int degree) const;
};

/// Throws InvalidComplex unless d_B f = f d_A in every degree.
void check_chain_map(const ChainMap& f, const Ring& ring);

/// Mapping cone: degree n is B_n ⊕ A_{n-1} with differential
/// [[d_B, f], [0, -d_A]].
BoundedComplex cone(const ChainMap& f, const Ring& ring);

/// Composite g ∘ f; the target of f must be the source of g.
ChainMap compose(const ChainMap& g, const ChainMap& f, const Ring& ring);

}  // namespace fukaya::algebra
