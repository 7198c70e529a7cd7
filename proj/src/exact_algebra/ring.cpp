#include "exact_algebra/ring.hpp"

#include "error.hpp"

#include <sstream>

namespace fukaya::algebra {

namespace {

BigInt mod_floor(const BigInt& a, const BigInt& p) {
  BigInt r = a % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string RingSpec::name() const {
  switch (kind) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::PrimeField: return "F" + std::to_string(modulus);
    case RingKind::Polynomials: return (modulus == 0 ? std::string("Q") : "F" + std::to_string(modulus)) + "[w]";
  }
  return "?";
}

Ring::Ring(RingSpec spec) : spec_(spec) {
  if (spec_.kind == RingKind::PrimeField && !is_prime(spec_.modulus))
    fail(ErrorCode::InvalidRing, "modulus " + std::to_string(spec_.modulus) + " is not prime");
  if (spec_.kind == RingKind::Polynomials && spec_.modulus != 0 && !is_prime(spec_.modulus))
    fail(ErrorCode::InvalidRing, "polynomial coefficient modulus " + std::to_string(spec_.modulus) + " is not prime");
}

BigRational Ring::reduce_coeff(const BigRational& c) const {
  if (spec_.modulus == 0 || spec_.kind == RingKind::Integers || spec_.kind == RingKind::Rationals) return c;
  const BigInt p = spec_.modulus;
  BigInt num = mod_floor(boost::multiprecision::numerator(c), p);
  BigInt den = mod_floor(boost::multiprecision::denominator(c), p);
  if (den == 0) fail(ErrorCode::InvalidInput, "denominator vanishes modulo " + std::to_string(spec_.modulus));
  if (den != 1) {
    const BigInt e = p - 2;
    const BigInt inv = boost::multiprecision::powm(den, e, p);
    num = mod_floor(BigInt(num * inv), p);
  }
  return BigRational(num);
}

BigRational Ring::coeff_inverse(const BigRational& c) const {
  if (spec_.modulus != 0 && (spec_.kind == RingKind::PrimeField || spec_.kind == RingKind::Polynomials)) {
    const BigInt p = spec_.modulus;
    const BigInt e = p - 2;
    const BigInt num = boost::multiprecision::numerator(c);
    return BigRational(BigInt(boost::multiprecision::powm(num, e, p)));
  }
  return 1 / c;
}

Element Ring::reduce(Element a) const {
  for (auto& c : a.coeffs) c = reduce_coeff(c);
  while (!a.coeffs.empty() && a.coeffs.back() == 0) a.coeffs.pop_back();
  if (spec_.kind != RingKind::Polynomials && a.coeffs.size() > 1)
    fail(ErrorCode::InvalidInput, "polynomial element in non-polynomial ring " + spec_.name());
  if (spec_.kind == RingKind::Integers && !a.coeffs.empty() && boost::multiprecision::denominator(a.coeffs[0]) != 1)
    fail(ErrorCode::InvalidInput, "non-integral element in Z");
  return a;
}

Element Ring::from_int(const BigInt& v) const { return reduce(Element(BigRational(v))); }
Element Ring::from_rational(const BigRational& v) const { return reduce(Element(v)); }

Element Ring::monomial(const BigRational& coeff, int exponent) const {
  Element e;
  e.coeffs.assign(static_cast<std::size_t>(exponent) + 1, BigRational(0));
  e.coeffs.back() = coeff;
  return reduce(std::move(e));
}

Element Ring::add(const Element& a, const Element& b) const {
  Element r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return reduce(std::move(r));
}

Element Ring::neg(const Element& a) const {
  Element r = a;
  for (auto& c : r.coeffs) c = -c;
  return reduce(std::move(r));
}

Element Ring::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element Ring::mul(const Element& a, const Element& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  Element r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return reduce(std::move(r));
}

bool Ring::is_unit(const Element& a) const {
  if (a.is_zero()) return false;
  switch (spec_.kind) {
    case RingKind::Integers: return a.coeffs[0] == 1 || a.coeffs[0] == -1;
    case RingKind::Rationals:
    case RingKind::PrimeField: return true;
    case RingKind::Polynomials: return a.degree() == 0;
  }
  return false;
}

Element Ring::unit_inverse(const Element& a) const {
  if (!is_unit(a)) fail(ErrorCode::Internal, "inverse of non-unit " + to_string(a));
  return reduce(Element(coeff_inverse(a.coeffs[0])));
}

BigInt Ring::norm(const Element& a) const {
  if (a.is_zero()) return 0;
  switch (spec_.kind) {
    case RingKind::Integers: return boost::multiprecision::abs(boost::multiprecision::numerator(a.coeffs[0]));
    case RingKind::Rationals:
    case RingKind::PrimeField: return 1;
    case RingKind::Polynomials: return a.degree() + 1;
  }
  return 0;
}

std::pair<Element, Element> Ring::divmod(const Element& a, const Element& b) const {
  if (b.is_zero()) fail(ErrorCode::Internal, "division by zero");
  switch (spec_.kind) {
    case RingKind::Integers: {
      const BigInt x = boost::multiprecision::numerator(a.constant());
      const BigInt y = boost::multiprecision::numerator(b.constant());
      const BigInt q = x / y;  // truncation keeps |r| < |y|
      return {from_int(q), from_int(x - q * y)};
    }
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return {mul(a, unit_inverse(b)), zero()};
    case RingKind::Polynomials: {
      Element r = a;
      Element q;
      const BigRational lead_inv = coeff_inverse(b.coeffs.back());
      const int db = b.degree();
      if (r.degree() >= db) q.coeffs.assign(static_cast<std::size_t>(r.degree() - db + 1), BigRational(0));
      while (!r.is_zero() && r.degree() >= db) {
        const int shift = r.degree() - db;
        const BigRational factor = reduce_coeff(r.coeffs.back() * lead_inv);
        q.coeffs[static_cast<std::size_t>(shift)] = factor;
        for (int i = 0; i <= db; ++i)
          r.coeffs[static_cast<std::size_t>(i + shift)] -= factor * b.coeffs[static_cast<std::size_t>(i)];
        r = reduce(std::move(r));
      }
      return {reduce(std::move(q)), r};
    }
  }
  fail(ErrorCode::Internal, "unknown ring kind");
}

bool Ring::divides(const Element& b, const Element& a) const {
  if (b.is_zero()) return a.is_zero();
  return divmod(a, b).second.is_zero();
}

Element Ring::normalizing_unit(const Element& a) const {
  if (a.is_zero()) return one();
  switch (spec_.kind) {
    case RingKind::Integers: return a.coeffs[0] < 0 ? from_int(-1) : one();
    case RingKind::Rationals:
    case RingKind::PrimeField: return unit_inverse(a);
    case RingKind::Polynomials: return reduce(Element(coeff_inverse(a.coeffs.back())));
  }
  return one();
}

std::string Ring::to_string(const Element& a) const {
  if (a.is_zero()) return "0";
  if (spec_.kind != RingKind::Polynomials) {
    std::ostringstream os;
    os << a.coeffs[0];
    return os.str();
  }
  std::ostringstream os;
  bool first = true;
  for (int i = a.degree(); i >= 0; --i) {
    const BigRational& c = a.coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (c < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    first = false;
    const BigRational mag = c < 0 ? BigRational(-c) : c;
    if (mag != 1 || i == 0) os << mag;
    if (i > 0) os << "w";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace fukaya::algebra
