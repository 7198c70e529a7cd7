#include "doctest.h"

#include "error.hpp"
#include "graph/contraction.hpp"
#include "graph/framed_graph.hpp"
#include "graph/incidence.hpp"
#include "graph/open_subgraph.hpp"
#include "graph/surface.hpp"
#include "graph/winding.hpp"
#include "support/graphs.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <tuple>

using namespace fukaya;
using namespace fukaya::graph;
using namespace fukaya::testing;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

struct Shape {
  int genus, boundary, interior;
  std::vector<int> boundary_marked;
  bool operator==(const Shape&) const = default;
};

std::vector<Shape> shape(const FramedGraph& g) {
  std::vector<Shape> out;
  for (const auto& c : surface_invariants(g).components)
    out.push_back({c.genus, c.boundary_circles, c.interior_marked, c.boundary_marked});
  std::sort(out.begin(), out.end(), [](const Shape& a, const Shape& b) {
    return std::tie(a.genus, a.boundary, a.interior, a.boundary_marked) <
           std::tie(b.genus, b.boundary, b.interior, b.boundary_marked);
  });
  return out;
}

// Winding from per-passage constants: crossing h then turning from tau(h) to
// the next half-edge moves the lift by a fixed number of vertex turns.
long long winding_by_passages(const FramedGraph& g, const std::vector<int>& walk) {
  long long twice = 0;
  for (std::size_t t = 0; t < walk.size(); ++t) {
    const int h = walk[t], arrive = g.tau(h), next = walk[(t + 1) % walk.size()];
    const long long phi_h = g.side(h) + g.offset(h), phi_t = g.side(arrive) + g.offset(arrive);
    twice += phi_h - phi_t - 1 + 2 * (g.position(next) < g.position(arrive) ? 1 : 0);
  }
  REQUIRE(twice % 2 == 0);
  return twice / 2;
}

std::vector<std::string> ids(const FramedGraph& g, const std::vector<int>& walk) {
  std::vector<std::string> out;
  for (int h : walk) out.push_back(g.halfedge_id(h));
  return out;
}

}  // namespace

TEST_CASE("graph validation") {
  CHECK_NOTHROW(FramedGraph::build(torus()));
  GraphSpec dup = torus();
  dup.vertices.push_back({"w", {"a"}});
  CHECK(code_of([&] { FramedGraph::build(dup); }) == ErrorCode::InvalidGraph);
  GraphSpec empty_vertex = circle();
  empty_vertex.vertices.push_back({"w", {}});
  CHECK(code_of([&] { FramedGraph::build(empty_vertex); }) == ErrorCode::InvalidGraph);
  GraphSpec odd = circle();
  odd.framing["a"] = 1;
  CHECK(code_of([&] { FramedGraph::build(odd); }) == ErrorCode::InvalidGraph);
  GraphSpec twice = torus();
  twice.edges.push_back({"a", "b"});
  CHECK(code_of([&] { FramedGraph::build(twice); }) == ErrorCode::InvalidGraph);
  GraphSpec unknown = circle();
  unknown.edges = {{"a", "zz"}};
  CHECK(code_of([&] { FramedGraph::build(unknown); }) == ErrorCode::InvalidGraph);

  auto g = FramedGraph::build(torus());
  for (std::size_t h = 0; h < g.halfedge_count(); ++h) CHECK(g.tau(g.tau(static_cast<int>(h))) == static_cast<int>(h));
  CHECK(g.find_edge("e2") == 1);
  CHECK(g.find_edge("abar") == 0);
  CHECK(g.side(*g.find_halfedge("abar")) == 1);
  CHECK(FramedGraph::build(GraphSpec{}).halfedge_count() == 0);
  CHECK(FramedGraph::build(g.to_spec()).to_spec().edges == g.to_spec().edges);
}

TEST_CASE("surface invariants of the basic graphs") {
  auto t = surface_invariants(FramedGraph::build(torus()));
  REQUIRE(t.components.size() == 1);
  CHECK(t.components[0].genus == 1);
  CHECK(t.components[0].boundary_circles == 0);
  CHECK(t.components[0].interior_marked == 1);
  CHECK(t.components[0].euler == 0);

  auto c = surface_invariants(FramedGraph::build(circle()));
  CHECK(c.components[0].genus == 0);
  CHECK(c.components[0].boundary_circles == 0);
  CHECK(c.components[0].interior_marked == 2);
  CHECK(c.stable());

  for (int legs = 1; legs <= 6; ++legs) {
    auto d = surface_invariants(FramedGraph::build(corolla(legs)));
    CHECK(d.components[0].genus == 0);
    CHECK(d.components[0].boundary_circles == 1);
    CHECK(d.components[0].boundary_marked == std::vector<int>{legs});
    CHECK(d.components[0].interior_marked == 0);
  }

  auto l = surface_invariants(FramedGraph::build(loopleg()));
  CHECK(l.components[0].genus == 0);
  CHECK(l.components[0].boundary_circles == 1);
  CHECK(l.components[0].boundary_marked == std::vector<int>{1});
  CHECK(l.components[0].interior_marked == 1);
  // By hand: corners (a,b) alone; (b,leg) ~ (leg,a) through the loop.
  auto cc = corner_classes(FramedGraph::build(loopleg()));
  CHECK(cc.count == 2);
  CHECK(cc.marked_of[1] == cc.marked_of[2]);
  CHECK(cc.marked_of[0] != cc.marked_of[1]);

  auto g2 = surface_invariants(FramedGraph::build(genus2()));
  CHECK(g2.components[0].genus == 2);
  CHECK(g2.components[0].interior_marked == 1);

  auto k = surface_invariants(FramedGraph::build(kronecker()));
  CHECK(k.components[0].genus == 0);
  CHECK(k.components[0].boundary_circles == 2);
  CHECK(k.components[0].boundary_marked == std::vector<int>{1, 1});

  auto b = surface_invariants(FramedGraph::build(barbell()));
  CHECK(b.components[0].marked_points() == 1);
  CHECK_FALSE(b.stable());

  auto u = surface_invariants(FramedGraph::build(disjoint_union(torus(), prefix_ids(corolla(3), "x"), "u")));
  CHECK(u.components.size() == 2);
}

TEST_CASE("surface invariants under rotation, relabeling and random graphs") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    GraphSpec s = random_framing(random_graph(rng), rng);
    auto g = FramedGraph::build(s);
    auto base = shape(g);
    for (const auto& c : surface_invariants(g).components) {
      CHECK(c.euler == 2 - 2 * c.genus - c.boundary_circles);
      for (int m : c.boundary_marked) CHECK(m >= 1);
    }
    std::uniform_int_distribution<std::size_t> v(0, s.vertices.size() - 1), r(0, 7);
    CHECK(shape(FramedGraph::build(rotate_vertex(s, v(rng), r(rng)))) == base);
    CHECK(shape(FramedGraph::build(prefix_ids(s, "q_"))) == base);
    CHECK(shape(FramedGraph::build(normalize_rotations(s))) == base);
  }
}

TEST_CASE("edge contraction") {
  auto g = FramedGraph::build(two_vertex({"x", "a"}, {"b", "y"}, {{"a", "b"}}, "pair"));
  auto c = contract_edge(g, 0);
  REQUIRE(c.vertex_count() == 1);
  CHECK(c.halfedge_id(c.halfedges_at(0)[0]) == "x");
  CHECK(c.halfedge_id(c.halfedges_at(0)[1]) == "y");

  auto k = FramedGraph::build(kronecker());
  auto k1 = contract_edge(k, 0);
  CHECK(k1.vertex_count() == 1);
  CHECK(k1.edge_count() == 1);
  CHECK(shape(k1) == shape(FramedGraph::build(kronecker_contracted())));

  CHECK(code_of([&] { contract_edge(FramedGraph::build(circle()), 0); }) == ErrorCode::LoopContraction);
  CHECK(code_of([&] { contract_edge(FramedGraph::build(barbell()), 0); }) == ErrorCode::DegenerateResult);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    auto r = FramedGraph::build(random_framing(random_graph(rng), rng));
    for (std::size_t e = 0; e < r.edge_count(); ++e) {
      if (r.is_loop(static_cast<int>(e))) continue;
      const auto [a, b] = r.edge(static_cast<int>(e));
      if (r.valency(r.vertex_of(a)) + r.valency(r.vertex_of(b)) == 2) continue;
      auto rc = contract_edge(r, static_cast<int>(e));
      CHECK(shape(rc) == shape(r));
      // Drop the contracted half-edges and compare windings. Walks turning
      // back on the contracted edge have no counterpart after contraction.
      for (int w = 0; w < 5; ++w) {
        auto walk = random_closed_walk(r, rng);
        if (walk.empty()) continue;
        bool turns_back = false;
        for (std::size_t t = 0; t < walk.size(); ++t) {
          const int h = walk[t], next = walk[(t + 1) % walk.size()];
          if ((h == a && next == b) || (h == b && next == a)) turns_back = true;
        }
        if (turns_back) continue;
        std::vector<std::string> mapped;
        for (int h : walk)
          if (h != a && h != b) mapped.push_back(r.halfedge_id(h));
        if (mapped.empty()) continue;
        CHECK(winding_number(rc, mapped) == winding_number(r, walk));
      }
    }
  }
}

TEST_CASE("incidence duals") {
  auto c = FramedGraph::build(circle());
  CHECK(incidence_dual(c, 0) == para::ParaMorphism::identity(1));
  CHECK(incidence_dual(c, 1) == para::ParaMorphism::identity(1));

  auto l = FramedGraph::build(loopleg());
  CHECK(incidence_dual(l, *l.find_halfedge("a")).lift() == std::vector<long long>{0, 2});
  CHECK(incidence_dual(l, *l.find_halfedge("b")).lift() == std::vector<long long>{0, 1});
  CHECK(code_of([&] { incidence_dual(l, *l.find_halfedge("leg")); }) == ErrorCode::InvalidInput);

  auto b = FramedGraph::build(barbell());
  CHECK(incidence_dual(b, 0).target() == 0);

  auto t = FramedGraph::build(torus());
  CHECK(incidence_dual(t, *t.find_halfedge("a")).lift() == std::vector<long long>{0, 3});
  CHECK(incidence_dual(t, *t.find_halfedge("abar")).lift() == std::vector<long long>{1, 2});
  CHECK(incidence_dual(t, *t.find_halfedge("b")).lift() == std::vector<long long>{1, 4});
  CHECK(incidence_dual(t, *t.find_halfedge("bbar")).lift() == std::vector<long long>{2, 3});

  // Offsets shift the dual by whole periods of the vertex.
  GraphSpec shifted = loopleg();
  shifted.framing["a"] = 4;
  auto ls = FramedGraph::build(shifted);
  CHECK(incidence_dual(ls, *ls.find_halfedge("a")).lift() == std::vector<long long>{-6, -4});
}

TEST_CASE("winding numbers") {
  auto c = FramedGraph::build(circle());
  CHECK(winding_number(c, std::vector<std::string>{"a"}) == 0);
  for (int m = -4; m <= 4; ++m) {
    GraphSpec s = circle();
    s.framing["a"] = 2 * m;
    CHECK(winding_number(FramedGraph::build(s), std::vector<std::string>{"a"}) == m);
    GraphSpec t = circle();
    t.framing["b"] = 2 * m;
    CHECK(winding_number(FramedGraph::build(t), std::vector<std::string>{"a"}) == -m);
  }
  // Out and back along one edge: each crossing lowers the edge value by one,
  // so the round trip is one full turn the other way.
  auto tree = FramedGraph::build(two_vertex({"x", "a"}, {"b", "y"}, {{"a", "b"}}, "pair"));
  CHECK(winding_number(tree, std::vector<std::string>{"a", "b"}) == -1);
  CHECK(winding_number(tree, std::vector<std::string>{"b", "a"}) == -1);
  // Walks in a tree never see the framing.
  GraphSpec path{"path", {{"u", {"x", "a"}}, {"v", {"b", "c", "y"}}, {"w", {"d"}}}, {{"a", "b"}, {"c", "d"}}, {}, {}};
  const std::vector<std::string> there_and_back{"a", "c", "d", "b"};
  const long long plain = winding_number(FramedGraph::build(path), there_and_back);
  std::mt19937_64 frng(4);
  for (int k = 0; k < 20; ++k)
    CHECK(winding_number(FramedGraph::build(random_framing(path, frng)), there_and_back) == plain);
  CHECK(code_of([&] { winding_number(FramedGraph::build(kronecker()), std::vector<std::string>{"c1", "c1"}); }) ==
        ErrorCode::InvalidInput);

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    GraphSpec s = random_framing(random_graph(rng), rng);
    auto g = FramedGraph::build(s);
    auto walk = random_closed_walk(g, rng);
    if (walk.empty()) continue;
    const long long w = winding_number(g, walk);
    CHECK(w == winding_by_passages(g, walk));
    CHECK(winding_number(g, walk, 3) == w);
    CHECK(winding_number(g, walk, -2) == w);
    // Gauge: rotate a vertex with offset compensation, or add 2 at one vertex.
    std::uniform_int_distribution<std::size_t> v(0, s.vertices.size() - 1), r(0, 6);
    const std::size_t vi = v(rng);
    CHECK(winding_number(FramedGraph::build(rotate_vertex(s, vi, r(rng))), ids(g, walk)) == w);
    GraphSpec bumped = s;
    for (const auto& h : bumped.vertices[vi].halfedges) bumped.framing[h] += 2;
    CHECK(winding_number(FramedGraph::build(bumped), ids(g, walk)) == w);
    std::uniform_int_distribution<int> turns(-3, 3);
    CHECK(winding_number(FramedGraph::build(gauge_vertex(s, vi, r(rng), turns(rng))), ids(g, walk)) == w);
  }
}

TEST_CASE("open decompositions") {
  auto k = FramedGraph::build(kronecker());
  auto full = open_decomposition(k, {"v", "w"});
  CHECK(full.open.halfedge_count() == k.halfedge_count());
  CHECK(full.complement.vertex_count() == 0);
  auto none = open_decomposition(k, {});
  CHECK(none.open.vertex_count() == 0);
  CHECK(none.retract.to_spec().vertices.size() == k.vertex_count());
  CHECK(none.retract.edge_count() == k.edge_count());

  // Loop vertex joined to a one-valent vertex and to a second loop vertex.
  GraphSpec s{"localization",
              {{"A", {"tB", "r", "tC", "l"}}, {"C", {"c"}}, {"B", {"bA", "bl", "br"}}},
              {{"r", "l"}, {"tC", "c"}, {"tB", "bA"}, {"bl", "br"}},
              {},
              {}};
  auto g = FramedGraph::build(s);
  auto d = open_decomposition(g, {"B"});
  CHECK(d.open.vertex_count() == 1);
  CHECK(d.complement.vertex_count() == 2);
  CHECK(d.cut == std::vector<std::string>{"tB"});
  CHECK(d.closure.vertex_count() == d.complement.vertex_count() + 1);
  CHECK(d.closure.halfedge_count() == d.complement.halfedge_count() + 1);
  CHECK(d.retract.halfedge_count() == d.complement.halfedge_count() - 1);
  CHECK(d.emptied.empty());
  CHECK(code_of([&] { open_decomposition(g, {"nope"}); }) == ErrorCode::InvalidInput);

  // Complement of an open subgraph is open: every half-edge at its vertices stays.
  for (std::size_t v = 0; v < d.complement.vertex_count(); ++v) {
    auto orig = g.find_vertex(d.complement.vertex_id(static_cast<int>(v)));
    CHECK(d.complement.valency(static_cast<int>(v)) == g.valency(*orig));
  }

  auto bar = open_decomposition(FramedGraph::build(barbell()), {"v"});
  CHECK(bar.emptied == std::vector<std::string>{"w"});
  CHECK(bar.retract.vertex_count() == 0);
}
