#pragma once

#include "exact_algebra/matrix.hpp"

#include <string>
#include <vector>

namespace fukaya::para {

/// Morphism <n> -> <m> of the paracyclic category, stored by the window
/// f(0), ..., f(n) of its lift. The lift extends to all of Z by
/// f(x + n + 1) = f(x) + m + 1.
class ParaMorphism {
 public:
  /// Throws InvalidInput unless the lift is monotone with lift[n] <= lift[0] + m + 1.
  static ParaMorphism make(int source, int target, std::vector<long long> lift);

  static ParaMorphism identity(int n);
  /// tau^k on <n>: x -> x + k.
  static ParaMorphism shift(int n, long long k = 1);

  int source() const { return source_; }
  int target() const { return target_; }
  const std::vector<long long>& lift() const { return lift_; }

  /// Value of the extended lift at any integer.
  long long operator()(long long x) const;

  std::string to_string() const;

  friend bool operator==(const ParaMorphism&, const ParaMorphism&) = default;

 private:
  ParaMorphism(int s, int t, std::vector<long long> l) : source_(s), target_(t), lift_(std::move(l)) {}

  int source_ = 0;
  int target_ = 0;
  std::vector<long long> lift_;
};

bool is_valid_lift(int source, int target, const std::vector<long long>& lift);

/// g ∘ f. Throws InvalidInput if target(f) != source(g).
ParaMorphism compose(const ParaMorphism& g, const ParaMorphism& f);

/// Gap y sits between y and y + 1. The dual sends gap y of the target to
/// gap max{x : f(x) <= y} of the source.
ParaMorphism interstice_dual(const ParaMorphism& f);

/// Identification of <n> with its double gap set: double duals satisfy
/// dual(dual(f)) = iota_m ∘ f ∘ iota_n^{-1}.
ParaMorphism double_dual_identification(int n);

/// Matrix (target x source) of A(f) on the arc lattices in the bases
/// gamma_0, ..., gamma_{n-1}; gamma_n = -(gamma_0 + ... + gamma_{n-1}).
algebra::Matrix arc_map(const ParaMorphism& f);

}  // namespace fukaya::para
