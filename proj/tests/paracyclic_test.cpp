#include "doctest.h"

#include "error.hpp"
#include "paracyclic/paracyclic.hpp"
#include "paracyclic/segal.hpp"
#include "support/para_gen.hpp"

using namespace fukaya;
using namespace fukaya::para;
using algebra::Matrix;

namespace {

const algebra::Ring& Z() {
  static const algebra::Ring z(algebra::RingSpec::integers());
  return z;
}

// Independent evaluation of the dual: scan a window for the least x with f(x) > y.
std::vector<long long> dual_by_scan(const ParaMorphism& f) {
  std::vector<long long> out;
  for (long long y = 0; y <= f.target(); ++y) {
    long long best = 0;
    bool found = false;
    for (long long x = -10 * (f.source() + 1) - 40; x <= 10 * (f.source() + 1) + 40; ++x)
      if (f(x) >= y + 1) {
        best = x;
        found = true;
        break;
      }
    REQUIRE(found);
    out.push_back(best - 1);
  }
  return out;
}

}  // namespace

TEST_CASE("lift validation") {
  CHECK(is_valid_lift(2, 1, {0, 0, 1}));
  CHECK(is_valid_lift(1, 2, {0, 3}));
  CHECK_FALSE(is_valid_lift(1, 2, {0, 4}));
  CHECK_FALSE(is_valid_lift(1, 2, {1, 0}));
  CHECK_FALSE(is_valid_lift(1, 2, {0}));
  CHECK_THROWS_AS(ParaMorphism::make(1, 1, {3, 0}), Error);
}

TEST_CASE("compose examples") {
  auto f = ParaMorphism::make(1, 2, {0, 1});
  CHECK(compose(ParaMorphism::identity(2), f) == f);
  CHECK(compose(ParaMorphism::make(2, 2, {0, 1, 2}), f).lift() == std::vector<long long>{0, 1});
  for (int n = 0; n <= 5; ++n) {
    ParaMorphism acc = ParaMorphism::identity(n);
    for (int k = 0; k <= n; ++k) acc = compose(ParaMorphism::shift(n), acc);
    CHECK(acc == ParaMorphism::shift(n, n + 1));
    CHECK(arc_map(acc) == Matrix::identity(static_cast<std::size_t>(n)));
  }
  CHECK_THROWS_AS(compose(f, f), Error);
}

TEST_CASE("interstice dual examples") {
  for (int n = 0; n <= 4; ++n) CHECK(interstice_dual(ParaMorphism::identity(n)) == ParaMorphism::identity(n));
  auto collapse = ParaMorphism::make(2, 1, {0, 0, 1});
  CHECK(interstice_dual(collapse) == ParaMorphism::make(1, 2, {1, 2}));
  for (int n = 0; n <= 4; ++n) {
    CHECK(interstice_dual(ParaMorphism::shift(n)) == ParaMorphism::shift(n, -1));
    CHECK(interstice_dual(interstice_dual(ParaMorphism::shift(n))) == ParaMorphism::shift(n));
  }
}

TEST_CASE("arc map examples") {
  for (int n = 0; n <= 4; ++n) CHECK(arc_map(ParaMorphism::identity(n)) == Matrix::identity(static_cast<std::size_t>(n)));
  CHECK(arc_map(ParaMorphism::make(1, 2, {0, 1})) == Matrix::from_ints(2, 1, {1, 0}));
  CHECK(arc_map(ParaMorphism::shift(2)) == Matrix::from_ints(2, 2, {0, -1, 1, -1}));
  CHECK(arc_map(ParaMorphism::make(1, 0, {0, 0})).rows() == 0);
  // A full turn of the target sums every generator, which vanishes.
  CHECK(arc_map(ParaMorphism::make(1, 2, {0, 3})).is_zero());
}

TEST_CASE("dual matches a brute-force scan") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> size(0, 6);
    auto f = testing::random_para(size(rng), size(rng), rng);
    CHECK(interstice_dual(f).lift() == dual_by_scan(f));
  }
}

TEST_CASE("paracyclic properties on random morphisms") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> size(0, 6);
  for (int trial = 0; trial < 600; ++trial) {
    int n = size(rng), m = size(rng), k = size(rng);
    auto f = testing::random_para(n, m, rng);
    auto g = testing::random_para(m, k, rng);
    auto gf = compose(g, f);
    CHECK(is_valid_lift(n, k, gf.lift()));
    CHECK(is_valid_lift(m, n, interstice_dual(f).lift()));
    CHECK(interstice_dual(gf) == compose(interstice_dual(f), interstice_dual(g)));
    auto expected = compose(double_dual_identification(m), compose(f, ParaMorphism::shift(n, 1)));
    CHECK(interstice_dual(interstice_dual(f)) == expected);
    CHECK(arc_map(gf) == multiply(Z(), arc_map(g), arc_map(f)));
    std::vector<long long> shifted = f.lift();
    for (auto& v : shifted) v += m + 1;
    CHECK(arc_map(ParaMorphism::make(n, m, shifted)) == arc_map(f));
  }
}

TEST_CASE("segal squares") {
  CHECK(one_segal_check(3));
  CHECK(two_segal_check(3, 0, 2));
  CHECK(unital_check(2, 0));
  for (int n = 0; n <= 6; ++n) {
    CHECK(one_segal_check(n));
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) CHECK(two_segal_check(n, i, j));
    for (int k = 0; k <= n && n >= 1; ++k) CHECK(unital_check(n, k));
  }
  CHECK_THROWS_AS(two_segal_check(3, 2, 2), Error);
  CHECK_THROWS_AS(two_segal_check(3, 0, 4), Error);
  CHECK_THROWS_AS(unital_check(0, 0), Error);
}

TEST_CASE("a non-pushout square is detected") {
  // Both legs collapse the corner to <0>; the pushout would be 0, not A(<1>).
  ParaSquare sq{ParaMorphism::make(1, 0, {0, 0}), ParaMorphism::make(1, 0, {0, 0}), ParaMorphism::make(0, 1, {0}),
                ParaMorphism::make(0, 1, {0})};
  CHECK_FALSE(is_arc_pushout(sq));
  // Identity square on <2> with corner <2>: pushout is <2> itself, not <2> glued twice.
  ParaSquare id{ParaMorphism::identity(1), ParaMorphism::identity(1), ParaMorphism::make(1, 2, {0, 1}),
                ParaMorphism::make(1, 2, {0, 1})};
  CHECK_FALSE(is_arc_pushout(id));
}
