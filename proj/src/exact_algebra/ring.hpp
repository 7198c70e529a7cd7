#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fukaya::algebra {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class RingKind { Integers, Rationals, PrimeField, Polynomials };

/// Which Euclidean domain the entries of a matrix live in.
///
/// `Polynomials` is k[w] with k = F_p for a prime `modulus`, or k = Q when
/// `modulus` is 0.
struct RingSpec {
  RingKind kind = RingKind::Integers;
  std::int64_t modulus = 0;

  static RingSpec integers() { return {RingKind::Integers, 0}; }
  static RingSpec rationals() { return {RingKind::Rationals, 0}; }
  static RingSpec prime_field(std::int64_t p) { return {RingKind::PrimeField, p}; }
  static RingSpec polynomials(std::int64_t p) { return {RingKind::Polynomials, p}; }

  bool is_field() const { return kind == RingKind::Rationals || kind == RingKind::PrimeField; }
  std::string name() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// A ring element, stored uniformly as a polynomial with rational
/// coefficients (index = power of w). Constants have at most one coefficient.
/// Always kept canonical: no trailing zeros, coefficients reduced mod p when
/// the ring has a modulus.
struct Element {
  std::vector<BigRational> coeffs;

  Element() = default;
  explicit Element(BigRational c) {
    if (c != 0) coeffs.push_back(std::move(c));
  }
  Element(int c) : Element(BigRational(c)) {}

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  BigRational constant() const { return coeffs.empty() ? BigRational(0) : coeffs[0]; }

  friend bool operator==(const Element&, const Element&) = default;
};

bool is_prime(std::int64_t p);

/// Arithmetic and Euclidean structure for one RingSpec.
class Ring {
 public:
  explicit Ring(RingSpec spec);

  const RingSpec& spec() const { return spec_; }

  Element zero() const { return Element{}; }
  Element one() const { return Element(1); }
  Element from_int(const BigInt& v) const;
  Element from_rational(const BigRational& v) const;
  /// w^e; only meaningful for polynomial rings.
  Element monomial(const BigRational& coeff, int exponent) const;

  Element reduce(Element a) const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;

  bool is_unit(const Element& a) const;
  Element unit_inverse(const Element& a) const;

  /// Euclidean norm: |a| on Z, 1 on nonzero field elements, deg+1 on k[w].
  BigInt norm(const Element& a) const;
  /// q, r with a = q*b + r and norm(r) < norm(b). b must be nonzero.
  std::pair<Element, Element> divmod(const Element& a, const Element& b) const;
  bool divides(const Element& b, const Element& a) const;

  /// Unit u such that u*a is the canonical associate (positive, monic, or 1).
  Element normalizing_unit(const Element& a) const;
  Element normalize(const Element& a) const { return a.is_zero() ? a : mul(normalizing_unit(a), a); }

  std::string to_string(const Element& a) const;

 private:
  BigRational reduce_coeff(const BigRational& c) const;
  BigRational coeff_inverse(const BigRational& c) const;

  RingSpec spec_;
};

}  // namespace fukaya::algebra
