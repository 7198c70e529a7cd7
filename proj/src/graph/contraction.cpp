#include "graph/contraction.hpp"

#include "error.hpp"

namespace fukaya::graph {

FramedGraph contract_edge(const FramedGraph& g, int e) {
  if (e < 0 || static_cast<std::size_t>(e) >= g.edge_count()) fail(ErrorCode::InvalidInput, "edge index out of range");
  const auto [a, b] = g.edge(e);
  const int v = g.vertex_of(a);
  const int w = g.vertex_of(b);
  if (v == w) fail(ErrorCode::LoopContraction, "edge '" + g.edge_id(e) + "' is a loop");
  const int kv = g.valency(v);
  const int kw = g.valency(w);
  if (kv + kw == 2) fail(ErrorCode::DegenerateResult, "contracting '" + g.edge_id(e) + "' leaves a vertex of valency 0");

  GraphSpec old = g.to_spec();
  GraphSpec out;
  out.name = old.name;
  // The w side is re-based so that the edge torsor of {a, b} is glued consistently.
  const long long carry = g.offset(a) - g.offset(b) + (g.side(a) - g.side(b) + 1);
  GraphSpec::VertexSpec merged{g.vertex_id(v), {}};
  auto append = [&](int vertex, int removed, long long shift) {
    const auto& hs = g.halfedges_at(vertex);
    const int k = static_cast<int>(hs.size());
    for (int step = 1; step < k; ++step) {
      const int h = hs[static_cast<std::size_t>((g.position(removed) + step) % k)];
      merged.halfedges.push_back(g.halfedge_id(h));
      const long long off = g.offset(h) + (g.position(h) < g.position(removed) ? 2 : 0) + shift;
      if (off != 0) out.framing[g.halfedge_id(h)] = off;
    }
  };
  append(v, a, 0);
  append(w, b, carry);

  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    if (static_cast<int>(u) == w) continue;
    if (static_cast<int>(u) == v) {
      out.vertices.push_back(merged);
      continue;
    }
    out.vertices.push_back(old.vertices[u]);
    for (int h : g.halfedges_at(static_cast<int>(u)))
      if (g.offset(h) != 0) out.framing[g.halfedge_id(h)] = g.offset(h);
  }
  for (std::size_t f = 0; f < g.edge_count(); ++f) {
    if (static_cast<int>(f) == e) continue;
    out.edges.push_back(old.edges[f]);
    out.edge_ids.push_back(old.edge_ids[f]);
  }
  return FramedGraph::build(out);
}

}  // namespace fukaya::graph
