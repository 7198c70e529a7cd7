#include "doctest.h"

#include "graph/contraction.hpp"
#include "graph/surface.hpp"
#include "state_sum/state_sum.hpp"
#include "state_sum/verify.hpp"
#include "support/graphs.hpp"
#include "surface_model/cw_model.hpp"

#include <random>

using namespace fukaya;
using namespace fukaya::statesum;
using namespace fukaya::testing;
using algebra::Matrix;
using algebra::RingSpec;
using graph::FramedGraph;

namespace {

const algebra::Ring& Z() {
  static const algebra::Ring z(RingSpec::integers());
  return z;
}

algebra::HomologySummary summary(RingSpec ring, std::map<int, std::size_t> free_ranks) {
  algebra::HomologySummary h(ring);
  for (auto [d, r] : free_ranks) h.set(d, {r, {}});
  return h;
}

}  // namespace

TEST_CASE("cw model boundary matrices") {
  auto t = surface::build_cw(FramedGraph::build(torus()));
  CHECK(t.boundary2 == Matrix(2, 1));
  auto l = surface::build_cw(FramedGraph::build(loopleg()));
  CHECK(l.boundary2 == Matrix::from_ints(2, 1, {0, 1}));
  for (int n = 1; n <= 5; ++n) {
    auto c = surface::build_cw(FramedGraph::build(corolla(n)));
    CHECK(c.boundary2 == Matrix::from_ints(static_cast<std::size_t>(n), 1, std::vector<long long>(static_cast<std::size_t>(n), 1)));
  }
}

TEST_CASE("cw relative homology examples") {
  CHECK(surface::relative_homology(FramedGraph::build(torus()), Z()) == summary(RingSpec::integers(), {{1, 2}, {2, 1}}));
  CHECK(surface::relative_homology(FramedGraph::build(circle()), Z()) == summary(RingSpec::integers(), {{1, 1}, {2, 1}}));
  for (int n = 1; n <= 5; ++n)
    CHECK(surface::relative_homology(FramedGraph::build(corolla(n + 1)), Z()) ==
          summary(RingSpec::integers(), {{1, static_cast<std::size_t>(n)}}));
  CHECK(surface::relative_homology(FramedGraph::build(loopleg()), Z()) == summary(RingSpec::integers(), {{1, 1}}));
}

TEST_CASE("state sum matrices") {
  auto c = build_state_sum(FramedGraph::build(corolla(4)));
  CHECK(c.matrix.rows() == 3);
  CHECK(c.matrix.cols() == 0);
  CHECK(build_state_sum(FramedGraph::build(circle())).matrix.is_zero());
  auto t = build_state_sum(FramedGraph::build(torus()));
  CHECK(t.matrix == Matrix::from_ints(3, 2, {1, -1, 0, 0, 1, -1}));
  CHECK(algebra::rank(t.matrix, Z()) == 1);
  CHECK(build_state_sum(FramedGraph::build(loopleg())).matrix == Matrix::from_ints(2, 1, {0, 1}));
}

TEST_CASE("invariant homology examples") {
  auto e = CoefficientObject::unit(RingSpec::integers());
  CHECK(invariant_homology(FramedGraph::build(loopleg()), e) == summary(RingSpec::integers(), {{0, 1}}));
  CHECK(invariant_homology(FramedGraph::build(kronecker()), e) == summary(RingSpec::integers(), {{0, 2}}));
  auto q = CoefficientObject::unit(RingSpec::rationals(), true);
  CHECK(invariant_homology(FramedGraph::build(torus()), q) == summary(RingSpec::rationals(), {{0, 2}, {1, 1}}));
  CHECK(invariant_homology(FramedGraph::build(circle()), q) == summary(RingSpec::rationals(), {{0, 1}, {1, 1}}));
  CHECK(invariant_homology(FramedGraph::build(loopleg()), q) == summary(RingSpec::rationals(), {{0, 1}}));
  // Graded coefficients spread each degree.
  CoefficientObject graded{RingSpec::integers(), {{0, 1}, {2, 3}}, false};
  CHECK(invariant_homology(FramedGraph::build(torus()), graded) ==
        summary(RingSpec::integers(), {{0, 2}, {1, 1}, {2, 6}, {3, 3}}));
  CoefficientObject graded_periodic{RingSpec::integers(), {{0, 1}, {1, 1}}, true};
  CHECK(invariant_homology(FramedGraph::build(torus()), graded_periodic) ==
        summary(RingSpec::integers(), {{0, 3}, {1, 3}}));
}

TEST_CASE("main comparison on random graphs and framings") {
  std::mt19937_64 rng(2024);
  const std::vector<RingSpec> rings{RingSpec::integers(), RingSpec::rationals(), RingSpec::prime_field(3)};
  for (int trial = 0; trial < 300; ++trial) {
    auto s = random_graph(rng, 5, 4, 3);
    auto g = FramedGraph::build(s);
    auto g2 = FramedGraph::build(random_framing(s, rng));
    CHECK(build_state_sum(g).matrix == build_state_sum(g2).matrix);
    for (const auto& r : rings) {
      auto cmp = verify_main(g2, CoefficientObject::unit(r, trial % 2 == 0));
      CHECK(cmp.equal);
    }
    // Stable graphs have torsion-free cokernel.
    auto h = invariant_homology(g, CoefficientObject::unit(RingSpec::integers()));
    for (const auto& [d, piece] : h.degrees()) CHECK(piece.torsion.empty());
  }
}

TEST_CASE("contraction, orientation and union invariance") {
  std::mt19937_64 rng(77);
  auto e = CoefficientObject::unit(RingSpec::integers());
  for (int trial = 0; trial < 200; ++trial) {
    auto s = random_framing(random_graph(rng, 5, 3, 3), rng);
    auto g = FramedGraph::build(s);
    auto base = invariant_homology(g, e);
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
      const auto [a, b] = g.edge(static_cast<int>(k));
      if (g.is_loop(static_cast<int>(k)) || g.valency(g.vertex_of(a)) + g.valency(g.vertex_of(b)) == 2) continue;
      CHECK(invariant_homology(graph::contract_edge(g, static_cast<int>(k)), e) == base);
    }
    if (!s.edges.empty()) {
      auto flipped = s;
      std::uniform_int_distribution<std::size_t> pick(0, s.edges.size() - 1);
      const std::size_t k = pick(rng);
      std::swap(flipped.edges[k].first, flipped.edges[k].second);
      auto gf = FramedGraph::build(flipped);
      CHECK(invariant_homology(gf, e) == base);
      Matrix before = build_state_sum(g).matrix, after = build_state_sum(gf).matrix;
      for (std::size_t r = 0; r < before.rows(); ++r) {
        const bool same = after.at(r, k) == before.at(r, k);
        const bool negated = after.at(r, k) == Z().neg(before.at(r, k));
        CHECK((same || negated));
      }
    }
    auto other = random_graph(rng, 3, 2, 2);
    auto u = FramedGraph::build(disjoint_union(s, prefix_ids(other, "u_"), "union"));
    auto expected = base;
    const auto other_h = invariant_homology(FramedGraph::build(other), e);
    for (const auto& [d, piece] : other_h.degrees()) expected.accumulate(d, piece);
    CHECK(invariant_homology(u, e) == expected);
  }
}

TEST_CASE("unstable graphs are flagged") {
  auto cmp = verify_main(FramedGraph::build(barbell()), CoefficientObject::unit(RingSpec::integers()));
  CHECK_FALSE(cmp.stable);
  CHECK(cmp.verdict != Verdict::Fail);
}
