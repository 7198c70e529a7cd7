#include "graph/winding.hpp"

#include "error.hpp"
#include "graph/incidence.hpp"

namespace fukaya::graph {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long floor_mod(long long a, long long b) { return a - b * floor_div(a, b); }

// Vertex lifts of a half-edge h are the integers congruent to its position.
long long edge_value(const FramedGraph& g, int h, long long lift) { return incidence_lift(g, h)(lift); }

}  // namespace

long long winding_number(const FramedGraph& g, const std::vector<int>& walk, long long turns) {
  if (walk.empty()) fail(ErrorCode::InvalidInput, "empty walk");
  for (std::size_t t = 0; t < walk.size(); ++t) {
    const int h = walk[t];
    if (h < 0 || static_cast<std::size_t>(h) >= g.halfedge_count()) fail(ErrorCode::InvalidInput, "unknown half-edge in walk");
    if (g.is_leg(h)) fail(ErrorCode::InvalidInput, "walk uses leg '" + g.halfedge_id(h) + "'");
    const int next = walk[(t + 1) % walk.size()];
    if (g.vertex_of(g.tau(h)) != g.vertex_of(next))
      fail(ErrorCode::InvalidInput, "walk is not closed: '" + g.halfedge_id(h) + "' does not lead to the vertex of '" +
                                        g.halfedge_id(next) + "'");
  }
  const long long initial = g.position(walk[0]) + turns * g.valency(g.vertex_of(walk[0]));
  long long current = initial;
  for (std::size_t t = 0; t < walk.size(); ++t) {
    const int h = walk[t];
    const int arrive = g.tau(h);
    const long long target = edge_value(g, h, current) - 1;
    // Lifts of `arrive` are position + val*q and its edge values step by 2 per q.
    const long long k = g.valency(g.vertex_of(arrive));
    const long long base = edge_value(g, arrive, g.position(arrive));
    const long long diff = target - base;
    if (floor_mod(diff, 2) != 0) fail(ErrorCode::Internal, "edge torsor parity mismatch");
    long long lift = g.position(arrive) + k * (diff / 2);
    const int next = walk[(t + 1) % walk.size()];
    lift += floor_mod(g.position(next) - lift, k);
    current = lift;
  }
  const long long k0 = g.valency(g.vertex_of(walk[0]));
  return (current - initial) / k0;
}

long long winding_number(const FramedGraph& g, const std::vector<std::string>& walk) {
  std::vector<int> idx;
  for (const auto& id : walk) {
    auto h = g.find_halfedge(id);
    if (!h) fail(ErrorCode::InvalidInput, "unknown half-edge '" + id + "' in walk");
    idx.push_back(*h);
  }
  return winding_number(g, idx);
}

}  // namespace fukaya::graph
