#include "graph/incidence.hpp"

#include "error.hpp"

namespace fukaya::graph {

para::ParaMorphism incidence_lift(const FramedGraph& g, int h) {
  if (g.is_leg(h)) fail(ErrorCode::InvalidInput, "half-edge '" + g.halfedge_id(h) + "' is a leg");
  const int k = g.valency(g.vertex_of(h));
  const int i = g.position(h);
  const long long s = g.side(h) + g.offset(h);
  std::vector<long long> lift(static_cast<std::size_t>(k));
  for (int x = 0; x < k; ++x) lift[static_cast<std::size_t>(x)] = x < i ? s - 1 : (x == i ? s : s + 1);
  return para::ParaMorphism::make(k - 1, 1, std::move(lift));
}

para::ParaMorphism incidence_dual(const FramedGraph& g, int h) { return para::interstice_dual(incidence_lift(g, h)); }

}  // namespace fukaya::graph
