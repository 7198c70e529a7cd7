#include "paracyclic/segal.hpp"

#include "error.hpp"
#include "exact_algebra/smith.hpp"

namespace fukaya::para {

using algebra::Matrix;

namespace {

const algebra::Ring& integers() {
  static const algebra::Ring z(algebra::RingSpec::integers());
  return z;
}

bool all_units(const algebra::SmithForm& s) {
  for (const auto& p : s.pivots)
    if (!integers().is_unit(p)) return false;
  return true;
}

void check_range(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InvalidInput, what);
}

}  // namespace

bool is_arc_pushout(const ParaSquare& sq) {
  const auto& z = integers();
  if (compose(sq.b_to_d, sq.to_b) != compose(sq.c_to_d, sq.to_c) &&
      arc_map(compose(sq.b_to_d, sq.to_b)) != arc_map(compose(sq.c_to_d, sq.to_c)))
    fail(ErrorCode::Internal, "square does not commute");
  Matrix alpha = arc_map(sq.to_b);
  Matrix beta = arc_map(sq.to_c);
  Matrix p = block(alpha, Matrix(alpha.rows(), 0), algebra::negate(z, beta), Matrix(beta.rows(), 0));
  Matrix q = block(arc_map(sq.b_to_d), arc_map(sq.c_to_d), Matrix(0, alpha.rows()), Matrix(0, beta.rows()));
  if (!multiply(z, q, p).is_zero()) return false;
  const std::size_t dim_d = q.rows();
  algebra::SmithForm sq_form = smith_normal_form(q, z, false);
  algebra::SmithForm sp_form = smith_normal_form(p, z, false);
  // Q surjective, im P saturated and equal to ker Q.
  return sq_form.rank() == dim_d && all_units(sq_form) && sp_form.rank() + dim_d == p.rows() && all_units(sp_form);
}

ParaMorphism subset_inclusion(int n, const std::vector<long long>& subset) {
  check_range(!subset.empty(), "empty subset");
  return ParaMorphism::make(static_cast<int>(subset.size()) - 1, n, subset);
}

ParaSquare two_segal_square(int n, int i, int j) {
  check_range(0 <= i && i < j && j <= n, "2-Segal indices out of range");
  std::vector<long long> middle, outer;
  for (long long x = i; x <= j; ++x) middle.push_back(x);
  for (long long x = 0; x <= i; ++x) outer.push_back(x);
  for (long long x = j; x <= n; ++x) outer.push_back(x);
  const int mid = j - i;
  const int out = static_cast<int>(outer.size()) - 1;
  return ParaSquare{ParaMorphism::make(1, mid, {0, mid}), ParaMorphism::make(1, out, {i, i + 1}),
                    subset_inclusion(n, middle), subset_inclusion(n, outer)};
}

ParaSquare unital_square(int n, int k) {
  check_range(n >= 1 && 0 <= k && k <= n, "unital index out of range");
  std::vector<long long> collapse(static_cast<std::size_t>(n) + 1);
  for (int x = 0; x <= n; ++x) collapse[static_cast<std::size_t>(x)] = x <= k ? x : x - 1;
  return ParaSquare{ParaMorphism::make(1, 0, {0, 0}), ParaMorphism::make(1, n, {k, k + 1}),
                    ParaMorphism::make(0, n - 1, {k}), ParaMorphism::make(n, n - 1, std::move(collapse))};
}

bool two_segal_check(int n, int i, int j) { return is_arc_pushout(two_segal_square(n, i, j)); }

bool unital_check(int n, int k) { return is_arc_pushout(unital_square(n, k)); }

bool one_segal_check(int n) {
  check_range(n >= 0, "negative n");
  Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Matrix col = arc_map(ParaMorphism::make(1, n, {k, k + 1}));
    for (int r = 0; r < n; ++r) m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(k)) = col.at(static_cast<std::size_t>(r), 0);
  }
  algebra::SmithForm s = smith_normal_form(m, integers(), false);
  return s.rank() == static_cast<std::size_t>(n) && all_units(s);
}

}  // namespace fukaya::para
