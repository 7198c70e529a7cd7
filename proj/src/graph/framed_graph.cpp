#include "graph/framed_graph.hpp"

#include "error.hpp"

#include <algorithm>
#include <numeric>

namespace fukaya::graph {

namespace {

[[noreturn]] void invalid(const std::string& what) { fail(ErrorCode::InvalidGraph, what); }

std::vector<std::string> edge_ids_of(const GraphSpec& spec) {
  if (!spec.edge_ids.empty()) return spec.edge_ids;
  std::vector<std::string> ids;
  for (std::size_t e = 0; e < spec.edges.size(); ++e) ids.push_back("e" + std::to_string(e + 1));
  return ids;
}

}  // namespace

FramedGraph FramedGraph::build(const GraphSpec& spec) {
  FramedGraph g;
  g.name_ = spec.name;
  for (const auto& v : spec.vertices) {
    if (v.id.empty()) invalid("empty vertex id");
    if (!g.vertex_index_.emplace(v.id, static_cast<int>(g.vertex_id_.size())).second)
      invalid("duplicate vertex id '" + v.id + "'");
    if (v.halfedges.empty()) invalid("vertex '" + v.id + "' has valency 0");
    const int vi = static_cast<int>(g.vertex_id_.size());
    g.vertex_id_.push_back(v.id);
    g.vertex_he_.emplace_back();
    for (const auto& h : v.halfedges) {
      if (h.empty()) invalid("empty half-edge id at vertex '" + v.id + "'");
      const int hi = static_cast<int>(g.he_id_.size());
      if (!g.he_index_.emplace(h, hi).second) invalid("half-edge '" + h + "' appears in more than one vertex list");
      g.he_id_.push_back(h);
      g.vertex_of_.push_back(vi);
      g.position_.push_back(static_cast<int>(g.vertex_he_.back().size()));
      g.vertex_he_.back().push_back(hi);
    }
  }
  const std::size_t n = g.he_id_.size();
  g.tau_.resize(n);
  std::iota(g.tau_.begin(), g.tau_.end(), 0);
  g.edge_of_.assign(n, -1);
  g.offset_.assign(n, 0);

  const auto ids = edge_ids_of(spec);
  if (ids.size() != spec.edges.size()) invalid("edge id count does not match edge count");
  for (std::size_t e = 0; e < spec.edges.size(); ++e) {
    const auto& [x, y] = spec.edges[e];
    auto hx = g.find_halfedge(x), hy = g.find_halfedge(y);
    if (!hx) invalid("edge refers to unknown half-edge '" + x + "'");
    if (!hy) invalid("edge refers to unknown half-edge '" + y + "'");
    if (*hx == *hy) invalid("edge pairs half-edge '" + x + "' with itself");
    if (g.edge_of_[static_cast<std::size_t>(*hx)] >= 0) invalid("half-edge '" + x + "' is in two edges");
    if (g.edge_of_[static_cast<std::size_t>(*hy)] >= 0) invalid("half-edge '" + y + "' is in two edges");
    g.tau_[static_cast<std::size_t>(*hx)] = *hy;
    g.tau_[static_cast<std::size_t>(*hy)] = *hx;
    g.edge_of_[static_cast<std::size_t>(*hx)] = static_cast<int>(e);
    g.edge_of_[static_cast<std::size_t>(*hy)] = static_cast<int>(e);
    g.edges_.emplace_back(*hx, *hy);
    if (!g.edge_index_.emplace(ids[e], static_cast<int>(e)).second) invalid("duplicate edge id '" + ids[e] + "'");
    g.edge_id_.push_back(ids[e]);
  }
  for (const auto& [h, off] : spec.framing) {
    auto hi = g.find_halfedge(h);
    if (!hi) invalid("framing refers to unknown half-edge '" + h + "'");
    if (off % 2 != 0) invalid("framing offset of '" + h + "' is odd");
    g.offset_[static_cast<std::size_t>(*hi)] = off;
  }
  return g;
}

GraphSpec FramedGraph::to_spec() const {
  GraphSpec s;
  s.name = name_;
  for (std::size_t v = 0; v < vertex_id_.size(); ++v) {
    GraphSpec::VertexSpec vs{vertex_id_[v], {}};
    for (int h : vertex_he_[v]) vs.halfedges.push_back(halfedge_id(h));
    s.vertices.push_back(std::move(vs));
  }
  for (const auto& [a, b] : edges_) s.edges.emplace_back(halfedge_id(a), halfedge_id(b));
  for (std::size_t h = 0; h < he_id_.size(); ++h)
    if (offset_[h] != 0) s.framing[he_id_[h]] = offset_[h];
  s.edge_ids = edge_id_;
  return s;
}

std::optional<int> FramedGraph::find_halfedge(const std::string& id) const {
  auto it = he_index_.find(id);
  if (it == he_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FramedGraph::find_vertex(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FramedGraph::find_edge(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it != edge_index_.end()) return it->second;
  auto h = find_halfedge(id);
  if (h && edge_of(*h) >= 0) return edge_of(*h);
  return std::nullopt;
}

int FramedGraph::side(int h) const {
  const int e = edge_of(h);
  return (e >= 0 && edge(e).second == h) ? 1 : 0;
}

std::vector<int> FramedGraph::legs() const {
  std::vector<int> out;
  for (std::size_t h = 0; h < he_id_.size(); ++h)
    if (is_leg(static_cast<int>(h))) out.push_back(static_cast<int>(h));
  return out;
}

std::vector<int> FramedGraph::components() const {
  std::vector<int> comp(vertex_count(), -1);
  int next = 0;
  for (std::size_t start = 0; start < vertex_count(); ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> stack{static_cast<int>(start)};
    comp[start] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int h : halfedges_at(v)) {
        int w = vertex_of(tau(h));
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

int FramedGraph::component_count() const {
  auto c = components();
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

GraphSpec rotate_vertex(const GraphSpec& spec, std::size_t vertex, std::size_t r) {
  GraphSpec out = spec;
  auto& hs = out.vertices.at(vertex).halfedges;
  if (hs.empty()) return out;
  r %= hs.size();
  // Half-edges moving from the front to the back go one turn further round.
  for (std::size_t p = 0; p < r; ++p) {
    long long& off = out.framing[hs[p]];
    off += 2;
  }
  std::rotate(hs.begin(), hs.begin() + static_cast<std::ptrdiff_t>(r), hs.end());
  for (auto it = out.framing.begin(); it != out.framing.end();) {
    if (it->second == 0)
      it = out.framing.erase(it);
    else
      ++it;
  }
  return out;
}

GraphSpec gauge_vertex(const GraphSpec& spec, std::size_t vertex, std::size_t r, long long turns) {
  GraphSpec out = rotate_vertex(spec, vertex, r);
  for (const auto& h : out.vertices.at(vertex).halfedges) out.framing[h] += 2 * turns;
  std::erase_if(out.framing, [](const auto& kv) { return kv.second == 0; });
  return out;
}

GraphSpec normalize_rotations(const GraphSpec& spec) {
  GraphSpec out = spec;
  for (std::size_t v = 0; v < out.vertices.size(); ++v) {
    const auto& hs = out.vertices[v].halfedges;
    if (hs.empty()) continue;
    auto least = std::min_element(hs.begin(), hs.end());
    out = rotate_vertex(out, v, static_cast<std::size_t>(least - hs.begin()));
  }
  return out;
}

GraphSpec prefix_ids(const GraphSpec& spec, const std::string& prefix) {
  GraphSpec out;
  out.name = spec.name;
  for (const auto& v : spec.vertices) {
    GraphSpec::VertexSpec vs{prefix + v.id, {}};
    for (const auto& h : v.halfedges) vs.halfedges.push_back(prefix + h);
    out.vertices.push_back(std::move(vs));
  }
  for (const auto& [a, b] : spec.edges) out.edges.emplace_back(prefix + a, prefix + b);
  for (const auto& [h, off] : spec.framing) out.framing[prefix + h] = off;
  for (const auto& id : edge_ids_of(spec)) out.edge_ids.push_back(prefix + id);
  return out;
}

GraphSpec disjoint_union(const GraphSpec& a, const GraphSpec& b, const std::string& name) {
  GraphSpec out = a;
  out.name = name;
  out.edge_ids = edge_ids_of(a);
  out.vertices.insert(out.vertices.end(), b.vertices.begin(), b.vertices.end());
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  out.framing.insert(b.framing.begin(), b.framing.end());
  const auto bids = edge_ids_of(b);
  out.edge_ids.insert(out.edge_ids.end(), bids.begin(), bids.end());
  return out;
}

}  // namespace fukaya::graph
