#include "graph/open_subgraph.hpp"

#include "error.hpp"

#include <set>

namespace fukaya::graph {

FramedGraph induced_subgraph(const FramedGraph& g, const std::vector<int>& vertices, const std::string& name) {
  std::set<int> inside(vertices.begin(), vertices.end());
  GraphSpec s;
  s.name = name;
  for (int v : inside) {
    GraphSpec::VertexSpec vs{g.vertex_id(v), {}};
    for (int h : g.halfedges_at(v)) {
      vs.halfedges.push_back(g.halfedge_id(h));
      if (g.offset(h) != 0) s.framing[g.halfedge_id(h)] = g.offset(h);
    }
    s.vertices.push_back(std::move(vs));
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.edge(static_cast<int>(e));
    if (inside.count(g.vertex_of(a)) && inside.count(g.vertex_of(b))) {
      s.edges.emplace_back(g.halfedge_id(a), g.halfedge_id(b));
      s.edge_ids.push_back(g.edge_id(static_cast<int>(e)));
    }
  }
  return FramedGraph::build(s);
}

OpenDecomposition open_decomposition(const FramedGraph& g, const std::vector<std::string>& vertices) {
  std::vector<int> in, out;
  std::set<int> chosen;
  for (const auto& id : vertices) {
    auto v = g.find_vertex(id);
    if (!v) fail(ErrorCode::InvalidInput, "unknown vertex '" + id + "'");
    chosen.insert(*v);
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    (chosen.count(static_cast<int>(v)) ? in : out).push_back(static_cast<int>(v));

  OpenDecomposition d;
  d.open = induced_subgraph(g, in, g.name() + "/open");
  d.complement = induced_subgraph(g, out, g.name() + "/complement");

  std::set<int> cut;
  for (int v : out)
    for (int h : g.halfedges_at(v))
      if (!g.is_leg(h) && chosen.count(g.vertex_of(g.tau(h)))) cut.insert(h);
  for (int h : cut) d.cut.push_back(g.halfedge_id(h));

  GraphSpec closure = d.complement.to_spec();
  closure.name = g.name() + "/closure";
  for (int h : cut) {
    const int partner = g.tau(h);
    closure.vertices.push_back({"@" + g.halfedge_id(partner), {g.halfedge_id(partner)}});
    const int e = g.edge_of(h);
    const auto [a, b] = g.edge(e);
    closure.edges.emplace_back(g.halfedge_id(a), g.halfedge_id(b));
    closure.edge_ids.push_back(g.edge_id(e));
    if (g.offset(partner) != 0) closure.framing[g.halfedge_id(partner)] = g.offset(partner);
  }
  d.closure = FramedGraph::build(closure);

  GraphSpec retract;
  retract.name = g.name() + "/retract";
  for (int v : out) {
    GraphSpec::VertexSpec vs{g.vertex_id(v), {}};
    for (int h : g.halfedges_at(v)) {
      if (cut.count(h)) continue;
      vs.halfedges.push_back(g.halfedge_id(h));
      if (g.offset(h) != 0) retract.framing[g.halfedge_id(h)] = g.offset(h);
    }
    if (vs.halfedges.empty())
      d.emptied.push_back(vs.id);
    else
      retract.vertices.push_back(std::move(vs));
  }
  const GraphSpec complement = d.complement.to_spec();
  retract.edges = complement.edges;
  retract.edge_ids = complement.edge_ids;
  d.retract = FramedGraph::build(retract);
  return d;
}

}  // namespace fukaya::graph
