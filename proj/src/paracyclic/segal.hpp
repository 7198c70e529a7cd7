#pragma once

#include "paracyclic/paracyclic.hpp"

namespace fukaya::para {

/// Commutative square of paracyclic morphisms
///
///   corner --to_b--> b
///     |              |
///   to_c           b_to_d
///     v              v
///     c  --c_to_d--> d
struct ParaSquare {
  ParaMorphism to_b;
  ParaMorphism to_c;
  ParaMorphism b_to_d;
  ParaMorphism c_to_d;
};

/// True iff applying the arc functor gives a pushout of abelian groups.
/// Throws Internal if the square does not commute.
bool is_arc_pushout(const ParaSquare& sq);

/// Inclusion of a sorted subset of {0, ..., n} into <n>.
ParaMorphism subset_inclusion(int n, const std::vector<long long>& subset);

/// Square {i,j} -> {i..j}, {0..i, j..n} -> <n> for 0 <= i < j <= n.
ParaSquare two_segal_square(int n, int i, int j);
/// Square collapsing the neighbours k, k+1 (k = n wraps to 0) for n >= 1.
ParaSquare unital_square(int n, int k);

bool two_segal_check(int n, int i, int j);
bool unital_check(int n, int k);
/// The n edge inclusions {k, k+1} induce Z^n ≅ A(<n>).
bool one_segal_check(int n);

}  // namespace fukaya::para
