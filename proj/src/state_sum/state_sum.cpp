#include "state_sum/state_sum.hpp"

#include "graph/incidence.hpp"
#include "paracyclic/paracyclic.hpp"
#include "surface_model/cw_model.hpp"

namespace fukaya::statesum {

using algebra::Matrix;

algebra::BoundedComplex StateSumComplex::as_complex() const {
  return algebra::BoundedComplex::make_unchecked({{0, matrix.rows()}, {1, matrix.cols()}}, {{1, matrix}});
}

StateSumComplex build_state_sum(const graph::FramedGraph& g) {
  StateSumComplex s;
  std::size_t rows = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    s.vertices.push_back(g.vertex_id(static_cast<int>(v)));
    s.block_start.push_back(rows);
    s.block_size.push_back(static_cast<std::size_t>(g.valency(static_cast<int>(v)) - 1));
    rows += s.block_size.back();
  }
  s.matrix = Matrix(rows, g.edge_count());
  const algebra::Ring z(algebra::RingSpec::integers());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    s.edges.push_back(g.edge_id(static_cast<int>(e)));
    const auto [pos, neg] = g.edge(static_cast<int>(e));
    for (int h : {pos, neg}) {
      const Matrix a = para::arc_map(graph::incidence_dual(g, h));
      const std::size_t start = s.block_start[static_cast<std::size_t>(g.vertex_of(h))];
      for (std::size_t r = 0; r < a.rows(); ++r) {
        auto& entry = s.matrix.at(start + r, e);
        entry = h == pos ? z.add(entry, a.at(r, 0)) : z.sub(entry, a.at(r, 0));
      }
    }
  }
  return s;
}

algebra::HomologySummary tensor_coefficients(const algebra::HomologySummary& h, const CoefficientObject& e) {
  algebra::HomologySummary out(h.ring());
  for (const auto& [deg, piece] : h.degrees())
    for (const auto& [shift, rank] : e.ranks)
      for (std::size_t copy = 0; copy < rank; ++copy) out.accumulate(deg + shift, piece);
  return out;
}

algebra::HomologySummary fold_periodic(const algebra::HomologySummary& h) {
  algebra::HomologySummary out(h.ring());
  for (const auto& [deg, piece] : h.degrees()) out.accumulate(((deg % 2) + 2) % 2, piece);
  return out;
}

namespace {

algebra::HomologySummary finish(const algebra::HomologySummary& h, const CoefficientObject& e) {
  algebra::HomologySummary t = tensor_coefficients(h, e);
  return e.periodic ? fold_periodic(t) : t;
}

}  // namespace

algebra::HomologySummary invariant_homology(const graph::FramedGraph& g, const CoefficientObject& e) {
  const algebra::Ring ring(e.ring);
  return finish(algebra::two_term_homology(build_state_sum(g).matrix, ring, 0), e);
}

algebra::HomologySummary surface_homology(const graph::FramedGraph& g, const CoefficientObject& e) {
  const algebra::Ring ring(e.ring);
  const algebra::HomologySummary rel = surface::relative_homology(g, ring);
  algebra::HomologySummary shifted(rel.ring());
  for (const auto& [deg, piece] : rel.degrees()) shifted.set(deg - 1, piece);
  return finish(shifted, e);
}

}  // namespace fukaya::statesum
