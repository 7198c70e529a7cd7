#include "paracyclic/paracyclic.hpp"

#include "error.hpp"

#include <algorithm>
#include <sstream>

namespace fukaya::para {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long floor_mod(long long a, long long b) { return a - b * floor_div(a, b); }

}  // namespace

bool is_valid_lift(int source, int target, const std::vector<long long>& lift) {
  if (source < 0 || target < 0) return false;
  if (lift.size() != static_cast<std::size_t>(source) + 1) return false;
  for (std::size_t i = 1; i < lift.size(); ++i)
    if (lift[i] < lift[i - 1]) return false;
  return lift.back() <= lift.front() + target + 1;
}

ParaMorphism ParaMorphism::make(int source, int target, std::vector<long long> lift) {
  if (!is_valid_lift(source, target, lift)) {
    std::ostringstream os;
    os << "invalid lift for <" << source << "> -> <" << target << ">:";
    for (long long v : lift) os << ' ' << v;
    fail(ErrorCode::InvalidInput, os.str());
  }
  return ParaMorphism(source, target, std::move(lift));
}

ParaMorphism ParaMorphism::identity(int n) { return shift(n, 0); }

ParaMorphism ParaMorphism::shift(int n, long long k) {
  std::vector<long long> l(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) l[static_cast<std::size_t>(i)] = i + k;
  return make(n, n, std::move(l));
}

long long ParaMorphism::operator()(long long x) const {
  const long long period = source_ + 1;
  const long long q = floor_div(x, period);
  return lift_[static_cast<std::size_t>(x - q * period)] + q * (target_ + 1);
}

std::string ParaMorphism::to_string() const {
  std::ostringstream os;
  os << "<" << source_ << ">-><" << target_ << "> (";
  for (std::size_t i = 0; i < lift_.size(); ++i) os << (i ? "," : "") << lift_[i];
  os << ")";
  return os.str();
}

ParaMorphism compose(const ParaMorphism& g, const ParaMorphism& f) {
  if (f.target() != g.source())
    fail(ErrorCode::InvalidInput, "cannot compose " + g.to_string() + " after " + f.to_string());
  std::vector<long long> l(f.lift().size());
  for (std::size_t i = 0; i < l.size(); ++i) l[i] = g(f.lift()[i]);
  return ParaMorphism::make(f.source(), g.target(), std::move(l));
}

ParaMorphism interstice_dual(const ParaMorphism& f) {
  const int n = f.source();
  const int m = f.target();
  std::vector<long long> l(static_cast<std::size_t>(m) + 1);
  for (long long y = 0; y <= m; ++y) {
    // Smallest x with f(x) >= y + 1, found by stepping whole periods then single steps.
    long long x = 0;
    while (f(x) >= y + 1) x -= n + 1;
    while (f(x) < y + 1) ++x;
    l[static_cast<std::size_t>(y)] = x - 1;
  }
  return ParaMorphism::make(m, n, std::move(l));
}

ParaMorphism double_dual_identification(int n) { return ParaMorphism::shift(n, -1); }

algebra::Matrix arc_map(const ParaMorphism& f) {
  const int n = f.source();
  const int m = f.target();
  algebra::Matrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  std::vector<long long> col(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i < n; ++i) {
    std::fill(col.begin(), col.end(), 0);
    for (long long t = f(i); t < f(i + 1); ++t) ++col[static_cast<std::size_t>(floor_mod(t, m + 1))];
    for (int r = 0; r < m; ++r) {
      long long v = col[static_cast<std::size_t>(r)] - col[static_cast<std::size_t>(m)];
      a.at(static_cast<std::size_t>(r), static_cast<std::size_t>(i)) = algebra::Element(algebra::BigRational(v));
    }
  }
  return a;
}

}  // namespace fukaya::para
