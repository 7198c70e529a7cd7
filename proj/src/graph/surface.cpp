#include "graph/surface.hpp"

#include "error.hpp"

#include <algorithm>
#include <numeric>

namespace fukaya::graph {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

int corner_after(const FramedGraph& g, const CornerClasses& c, int h) {
  return c.corner_offset[static_cast<std::size_t>(g.vertex_of(h))] + g.position(h);
}

int corner_before(const FramedGraph& g, const CornerClasses& c, int h) {
  const int k = g.valency(g.vertex_of(h));
  return c.corner_offset[static_cast<std::size_t>(g.vertex_of(h))] + (g.position(h) + k - 1) % k;
}

}  // namespace

int ComponentSurface::marked_points() const {
  return interior_marked + std::accumulate(boundary_marked.begin(), boundary_marked.end(), 0);
}

bool SurfaceReport::stable() const {
  return std::all_of(components.begin(), components.end(), [](const ComponentSurface& c) { return c.stable; });
}

int SurfaceReport::marked_points() const {
  int total = 0;
  for (const auto& c : components) total += c.marked_points();
  return total;
}

CornerClasses corner_classes(const FramedGraph& g) {
  CornerClasses c;
  int total = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    c.corner_offset.push_back(total);
    total += g.valency(static_cast<int>(v));
  }
  UnionFind uf(static_cast<std::size_t>(total));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.edge(static_cast<int>(e));
    uf.unite(corner_before(g, c, a), corner_after(g, c, b));
    uf.unite(corner_after(g, c, a), corner_before(g, c, b));
  }
  std::vector<int> label(static_cast<std::size_t>(total), -1);
  c.marked_of.resize(static_cast<std::size_t>(total));
  for (int k = 0; k < total; ++k) {
    int root = uf.find(k);
    if (label[static_cast<std::size_t>(root)] < 0) label[static_cast<std::size_t>(root)] = c.count++;
    c.marked_of[static_cast<std::size_t>(k)] = label[static_cast<std::size_t>(root)];
  }
  return c;
}

SurfaceReport surface_invariants(const FramedGraph& g) {
  const CornerClasses cc = corner_classes(g);
  const std::vector<int> comp = g.components();
  const int ncomp = g.component_count();
  SurfaceReport report;
  report.components.resize(static_cast<std::size_t>(ncomp));
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    report.components[static_cast<std::size_t>(comp[v])].vertices.push_back(static_cast<int>(v));

  std::vector<int> marked_comp(static_cast<std::size_t>(cc.count), -1);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (int i = 0; i < g.valency(static_cast<int>(v)); ++i)
      marked_comp[static_cast<std::size_t>(cc.marked_of[static_cast<std::size_t>(cc.corner_offset[v] + i)])] = comp[v];

  // Boundary circles: from leg l, the next leg l' is the one whose before-corner
  // shares a marked point with the after-corner of l.
  const std::vector<int> legs = g.legs();
  std::vector<int> leg_before_mark(static_cast<std::size_t>(cc.count), -1);
  std::vector<bool> boundary_mark(static_cast<std::size_t>(cc.count), false);
  for (int l : legs) {
    const int m = cc.marked_of[static_cast<std::size_t>(corner_before(g, cc, l))];
    if (leg_before_mark[static_cast<std::size_t>(m)] >= 0) fail(ErrorCode::Internal, "two legs start at one marked point");
    leg_before_mark[static_cast<std::size_t>(m)] = l;
    boundary_mark[static_cast<std::size_t>(m)] = true;
  }
  std::vector<bool> seen(g.halfedge_count(), false);
  for (int l : legs) {
    if (seen[static_cast<std::size_t>(l)]) continue;
    int count = 0;
    int cur = l;
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = true;
      ++count;
      const int m = cc.marked_of[static_cast<std::size_t>(corner_after(g, cc, cur))];
      cur = leg_before_mark[static_cast<std::size_t>(m)];
      if (cur < 0) fail(ErrorCode::Internal, "boundary circle does not close");
    }
    if (cur != l) fail(ErrorCode::Internal, "boundary legs do not form cycles");
    auto& c = report.components[static_cast<std::size_t>(comp[static_cast<std::size_t>(g.vertex_of(l))])];
    c.boundary_circles += 1;
    c.boundary_marked.push_back(count);
  }
  for (int m = 0; m < cc.count; ++m)
    if (!boundary_mark[static_cast<std::size_t>(m)])
      report.components[static_cast<std::size_t>(marked_comp[static_cast<std::size_t>(m)])].interior_marked += 1;

  std::vector<long long> edges(static_cast<std::size_t>(ncomp), 0), nlegs(static_cast<std::size_t>(ncomp), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    edges[static_cast<std::size_t>(comp[static_cast<std::size_t>(g.vertex_of(g.edge(static_cast<int>(e)).first))])] += 1;
  for (int l : legs) nlegs[static_cast<std::size_t>(comp[static_cast<std::size_t>(g.vertex_of(l))])] += 1;

  for (std::size_t k = 0; k < report.components.size(); ++k) {
    auto& c = report.components[k];
    std::sort(c.boundary_marked.begin(), c.boundary_marked.end());
    const long long quotient_euler = 1 - (edges[k] + nlegs[k]) + static_cast<long long>(c.vertices.size());
    c.euler = quotient_euler + c.marked_points() - 1;
    const long long twice_genus = 2 - c.boundary_circles - c.euler;
    if (twice_genus < 0 || twice_genus % 2 != 0) fail(ErrorCode::Internal, "inconsistent Euler characteristic");
    c.genus = static_cast<int>(twice_genus / 2);
    c.stable = !(c.genus == 0 && c.boundary_circles == 0 && c.marked_points() < 2);
  }
  return report;
}

}  // namespace fukaya::graph
