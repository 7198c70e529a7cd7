#include "mf/matrix_factorization.hpp"

#include "error.hpp"

namespace fukaya::mf {

using algebra::Element;
using algebra::Matrix;
using algebra::Ring;

namespace {

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

long long z2_exponent(int n, long long a, long long b) { return mod(b - a, n + 1); }

bool zero_object_variant(Variant v) { return v != Variant::None; }

}  // namespace

ScalarMF ScalarMF::make(Grading grading, int n, long long i, long long j, Variant variant) {
  if (n < 0) fail(ErrorCode::InvalidInput, "n must be nonnegative");
  ScalarMF x{grading, n, i, j, variant};
  if (grading == Grading::Z2) {
    x.i = mod(i, n + 1);
    x.j = mod(j, n + 1);
    if (x.i == x.j && !zero_object_variant(variant))
      fail(ErrorCode::InvalidInput, "[i,i] needs the l or r variant in Z/2 mode");
    if (x.i != x.j && variant != Variant::None) fail(ErrorCode::InvalidInput, "variants only apply to [i,i]");
  } else {
    if (variant != Variant::None) fail(ErrorCode::InvalidInput, "variants only apply in Z/2 mode");
    if (j - i < 0 || j - i > n + 1)
      fail(ErrorCode::InvalidInput,
           "[" + std::to_string(i) + "," + std::to_string(j) + "] needs 0 <= j - i <= " + std::to_string(n + 1));
  }
  return x;
}

std::string ScalarMF::to_string() const {
  std::string s = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
  if (variant == Variant::L) s += "_l";
  if (variant == Variant::R) s += "_r";
  return s;
}

std::vector<ScalarMF> scalar_objects(Grading grading, int n) {
  std::vector<ScalarMF> out;
  for (long long i = 0; i <= n; ++i) {
    if (grading == Grading::Z2) {
      for (long long j = 0; j <= n; ++j) {
        if (i == j) {
          out.push_back(ScalarMF::make(grading, n, i, j, Variant::L));
          out.push_back(ScalarMF::make(grading, n, i, j, Variant::R));
        } else {
          out.push_back(ScalarMF::make(grading, n, i, j));
        }
      }
    } else {
      for (long long j = i; j <= i + n + 1; ++j) out.push_back(ScalarMF::make(grading, n, i, j));
    }
  }
  return out;
}

algebra::RingSpec coefficient_ring(Grading grading, std::int64_t field) {
  if (field != 0 && !algebra::is_prime(field)) fail(ErrorCode::InvalidInput, "field characteristic must be 0 or prime");
  if (grading == Grading::Z2) return algebra::RingSpec::polynomials(field);
  return field == 0 ? algebra::RingSpec::rationals() : algebra::RingSpec::prime_field(field);
}

MatrixFactorization to_mf(const ScalarMF& x, std::int64_t field) {
  const Ring ring(coefficient_ring(x.grading, field));
  MatrixFactorization m;
  m.grading = x.grading;
  m.n = x.n;
  m.field = field;
  m.twist0 = {x.i};
  m.twist1 = {x.j};
  m.d0 = Matrix(1, 1);
  m.d1 = Matrix(1, 1);
  if (x.grading == Grading::Z || x.i != x.j) {
    m.d0.at(0, 0) = 1;
    m.d1.at(0, 0) = 1;
  } else if (x.variant == Variant::R) {
    m.d0.at(0, 0) = 1;
    m.d1.at(0, 0) = ring.monomial(1, 1);
  } else {
    m.d0.at(0, 0) = ring.monomial(1, 1);
    m.d1.at(0, 0) = 1;
  }
  return m;
}

Matrix compose(const Ring& ring, Grading grading, int n, const Matrix& g, const Matrix& f,
               const std::vector<long long>& src, const std::vector<long long>& mid,
               const std::vector<long long>& dst) {
  if (g.cols() != f.rows() || f.cols() != src.size() || f.rows() != mid.size() || g.rows() != dst.size())
    fail(ErrorCode::Internal, "factorization composite has mismatched shapes");
  if (grading == Grading::Z) return algebra::multiply(ring, g, f);
  const Element w = ring.monomial(1, 1);
  Matrix out(g.rows(), f.cols());
  for (std::size_t c = 0; c < dst.size(); ++c)
    for (std::size_t a = 0; a < src.size(); ++a) {
      Element acc;
      for (std::size_t b = 0; b < mid.size(); ++b) {
        if (g.at(c, b).is_zero() || f.at(b, a).is_zero()) continue;
        Element term = ring.mul(g.at(c, b), f.at(b, a));
        const long long carry =
            z2_exponent(n, src[a], mid[b]) + z2_exponent(n, mid[b], dst[c]) - z2_exponent(n, src[a], dst[c]);
        if (carry > 0) term = ring.mul(term, w);
        acc = ring.add(acc, term);
      }
      out.at(c, a) = acc;
    }
  return out;
}

namespace {

std::vector<long long> shifted(std::vector<long long> t, long long by) {
  for (auto& x : t) x += by;
  return t;
}

// d1 lands in X^0(n+1) in Z mode.
std::vector<long long> d1_target(const MatrixFactorization& x) {
  return x.grading == Grading::Z ? shifted(x.twist0, x.n + 1) : x.twist0;
}

void check_degrees(const Matrix& m, const std::vector<long long>& src, const std::vector<long long>& dst,
                   const char* what) {
  for (std::size_t r = 0; r < dst.size(); ++r)
    for (std::size_t c = 0; c < src.size(); ++c)
      if (!m.at(r, c).is_zero() && dst[r] < src[c])
        fail(ErrorCode::InvalidInput, std::string(what) + " has an entry of negative z-degree");
}

Matrix scaled_identity(std::size_t size, const Element& e) {
  Matrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m.at(i, i) = e;
  return m;
}

}  // namespace

void check(const MatrixFactorization& x) {
  const Ring ring(coefficient_ring(x.grading, x.field));
  if (x.d0.rows() != x.twist1.size() || x.d0.cols() != x.twist0.size() || x.d1.rows() != x.twist0.size() ||
      x.d1.cols() != x.twist1.size())
    fail(ErrorCode::InvalidInput, "factorization differentials have the wrong shape");
  if (x.grading == Grading::Z) {
    check_degrees(x.d0, x.twist0, x.twist1, "d0");
    check_degrees(x.d1, x.twist1, d1_target(x), "d1");
  }
  // In Z mode the coefficient of w = z^{n+1} is 1 once the shift is accounted for.
  const Element w = x.grading == Grading::Z ? ring.one() : ring.monomial(1, 1);
  const Matrix a = compose(ring, x.grading, x.n, x.d1, x.d0, x.twist0, x.twist1, x.twist0);
  const Matrix b = compose(ring, x.grading, x.n, x.d0, x.d1, x.twist1, x.twist0, x.twist1);
  if (!(algebra::reduce(ring, a) == scaled_identity(x.twist0.size(), w)) ||
      !(algebra::reduce(ring, b) == scaled_identity(x.twist1.size(), w)))
    fail(ErrorCode::InvalidInput, "d0 and d1 do not compose to w");
}

bool is_closed(const MatrixFactorization& x, const MatrixFactorization& y, const MFMorphism& phi) {
  const Ring ring(coefficient_ring(x.grading, x.field));
  if (phi.f0.rows() != y.twist0.size() || phi.f0.cols() != x.twist0.size() || phi.f1.rows() != y.twist1.size() ||
      phi.f1.cols() != x.twist1.size())
    fail(ErrorCode::InvalidInput, "morphism components have the wrong shape");
  if (x.grading == Grading::Z) {
    check_degrees(phi.f0, x.twist0, y.twist0, "f0");
    check_degrees(phi.f1, x.twist1, y.twist1, "f1");
  }
  const auto g = x.grading;
  const Matrix top = algebra::subtract(ring, compose(ring, g, x.n, y.d0, phi.f0, x.twist0, y.twist0, y.twist1),
                                       compose(ring, g, x.n, phi.f1, x.d0, x.twist0, x.twist1, y.twist1));
  const Matrix bottom =
      algebra::subtract(ring, compose(ring, g, x.n, y.d1, phi.f1, x.twist1, y.twist1, d1_target(y)),
                        compose(ring, g, x.n, phi.f0, x.d1, x.twist1, d1_target(x), d1_target(y)));
  return algebra::reduce(ring, top).is_zero() && algebra::reduce(ring, bottom).is_zero();
}

MatrixFactorization cone_mf(const MatrixFactorization& x, const MatrixFactorization& y, const MFMorphism& phi) {
  if (x.grading != y.grading || x.n != y.n || x.field != y.field)
    fail(ErrorCode::InvalidInput, "cone needs factorizations of the same mode, n and field");
  if (!is_closed(x, y, phi)) fail(ErrorCode::InvalidInput, "cone of a morphism that is not closed");
  const Ring ring(coefficient_ring(x.grading, x.field));
  MatrixFactorization c;
  c.grading = x.grading;
  c.n = x.n;
  c.field = x.field;
  c.twist0 = y.twist0;
  c.twist0.insert(c.twist0.end(), x.twist1.begin(), x.twist1.end());
  c.twist1 = y.twist1;
  const auto x0 = x.grading == Grading::Z ? shifted(x.twist0, x.n + 1) : x.twist0;
  c.twist1.insert(c.twist1.end(), x0.begin(), x0.end());
  c.d0 = algebra::block(y.d0, phi.f1, Matrix(x.twist0.size(), y.twist0.size()), algebra::negate(ring, x.d1));
  c.d1 = algebra::block(y.d1, phi.f0, Matrix(x.twist1.size(), y.twist1.size()), algebra::negate(ring, x.d0));
  check(c);
  return c;
}

MFMorphism canonical_morphism(const ScalarMF& source, const ScalarMF& target) {
  if (source.grading != target.grading || source.n != target.n)
    fail(ErrorCode::InvalidInput, "canonical morphism needs matching mode and n");
  const bool ok = source.grading == Grading::Z ? source.i == target.i && source.j <= target.j
                                                : source.i == 0 && target.i == 0 && source.j <= target.j;
  if (!ok) fail(ErrorCode::InvalidInput, "canonical morphism goes [0,i] -> [0,j] with i <= j");
  MFMorphism phi{Matrix(1, 1), Matrix(1, 1)};
  phi.f0.at(0, 0) = 1;
  phi.f1.at(0, 0) = 1;
  return phi;
}

ScalarMF structure_map_on_objects(const para::ParaMorphism& f, const ScalarMF& x) {
  if (x.grading != Grading::Z) fail(ErrorCode::InvalidInput, "structure maps act on Z-graded objects");
  if (f.source() != x.n)
    fail(ErrorCode::InvalidInput, "morphism source <" + std::to_string(f.source()) + "> does not match n = " +
                                      std::to_string(x.n));
  const long long i = f(x.i), j = f(x.j);
  if (j - i < 0 || j - i > f.target() + 1)
    fail(ErrorCode::InvalidInput, "image [" + std::to_string(i) + "," + std::to_string(j) + "] leaves the range");
  return ScalarMF::make(Grading::Z, f.target(), i, j);
}

}  // namespace fukaya::mf
