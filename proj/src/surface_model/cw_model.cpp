#include "surface_model/cw_model.hpp"

#include <algorithm>

namespace fukaya::surface {

CWModel build_cw(const graph::FramedGraph& g) {
  CWModel cw;
  cw.zero_cells = g.component_count();
  std::vector<int> cell_of(g.halfedge_count(), -1);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.edge(static_cast<int>(e));
    cell_of[static_cast<std::size_t>(a)] = cell_of[static_cast<std::size_t>(b)] = static_cast<int>(cw.one_cells.size());
    cw.one_cells.push_back(g.edge_id(static_cast<int>(e)));
  }
  for (int l : g.legs()) {
    cell_of[static_cast<std::size_t>(l)] = static_cast<int>(cw.one_cells.size());
    cw.one_cells.push_back(g.halfedge_id(l));
  }
  cw.boundary2 = algebra::Matrix(cw.one_cells.size(), g.vertex_count());
  std::vector<long long> column(cw.one_cells.size());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    cw.two_cells.push_back(g.vertex_id(static_cast<int>(v)));
    std::fill(column.begin(), column.end(), 0);
    for (int h : g.halfedges_at(static_cast<int>(v))) column[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(h)])] += g.side(h) == 0 ? 1 : -1;
    for (std::size_t r = 0; r < column.size(); ++r)
      cw.boundary2.at(r, v) = algebra::Element(algebra::BigRational(column[r]));
  }
  return cw;
}

algebra::HomologySummary relative_homology(const graph::FramedGraph& g, const algebra::Ring& ring) {
  return algebra::two_term_homology(build_cw(g).boundary2, ring, 1);
}

}  // namespace fukaya::surface
