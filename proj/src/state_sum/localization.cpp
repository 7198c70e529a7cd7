#include "state_sum/localization.hpp"

#include "error.hpp"
#include "paracyclic/paracyclic.hpp"
#include "state_sum/state_sum.hpp"

#include <map>

namespace fukaya::statesum {

using algebra::Matrix;

namespace {

std::map<std::string, std::size_t> index_of(const std::vector<std::string>& ids) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < ids.size(); ++i) out[ids[i]] = i;
  return out;
}

void place(Matrix& target, std::size_t r0, std::size_t c0, const Matrix& block) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) target.at(r0 + i, c0 + j) = block.at(i, j);
}

algebra::BoundedComplex complex_of(const StateSumComplex& s, std::size_t extra_top) {
  Matrix m(s.matrix.rows(), s.matrix.cols() + extra_top);
  place(m, 0, 0, s.matrix);
  return algebra::BoundedComplex::make_unchecked({{0, m.rows()}, {1, m.cols()}}, {{1, m}});
}

bool is_zero_map(const algebra::ChainMap& f, const algebra::Ring& ring) {
  for (const auto& [d, m] : f.components)
    if (!algebra::reduce(ring, m).is_zero()) return false;
  return true;
}

}  // namespace

algebra::BoundedComplex retract_complex(const graph::OpenDecomposition& d) {
  return complex_of(build_state_sum(d.retract), d.emptied.size());
}

LocalizationReport localization_check(const graph::FramedGraph& g, const std::vector<std::string>& open_vertices,
                                      const algebra::Ring& ring) {
  LocalizationReport rep;
  rep.decomposition = graph::open_decomposition(g, open_vertices);
  const auto& d = rep.decomposition;
  const StateSumComplex whole = build_state_sum(g);
  const StateSumComplex open = build_state_sum(d.open);
  const StateSumComplex ret = build_state_sum(d.retract);
  const auto whole_v = index_of(whole.vertices), whole_e = index_of(whole.edges);
  const auto ret_v = index_of(ret.vertices), ret_e = index_of(ret.edges);

  // Inclusion: vertex blocks and edges of the open part keep their coordinates.
  Matrix inc0(whole.matrix.rows(), open.matrix.rows()), inc1(whole.matrix.cols(), open.matrix.cols());
  for (std::size_t v = 0; v < open.vertices.size(); ++v) {
    const std::size_t w = whole_v.at(open.vertices[v]);
    for (std::size_t k = 0; k < open.block_size[v]; ++k) inc0.at(whole.block_start[w] + k, open.block_start[v] + k) = 1;
  }
  for (std::size_t e = 0; e < open.edges.size(); ++e) inc1.at(whole_e.at(open.edges[e]), e) = 1;

  // Collapse: a complement vertex block maps by the dual of the inclusion of
  // its retained half-edges; everything on the open side goes to 0.
  const std::size_t extra = d.emptied.size();
  Matrix col0(ret.matrix.rows(), whole.matrix.rows()), col1(ret.matrix.cols() + extra, whole.matrix.cols());
  for (std::size_t v = 0; v < ret.vertices.size(); ++v) {
    const auto gv = g.find_vertex(ret.vertices[v]);
    std::vector<long long> retained;
    for (int h : g.halfedges_at(*gv))
      if (d.retract.find_halfedge(g.halfedge_id(h))) retained.push_back(g.position(h));
    const int k = g.valency(*gv);
    const auto incl = para::ParaMorphism::make(static_cast<int>(retained.size()) - 1, k - 1, retained);
    place(col0, ret.block_start[v], whole.block_start[whole_v.at(ret.vertices[v])],
          para::arc_map(para::interstice_dual(incl)));
  }
  for (std::size_t e = 0; e < ret.edges.size(); ++e) col1.at(e, whole_e.at(ret.edges[e])) = 1;
  // The first cut edge at an emptied vertex hits that vertex's extra generator.
  for (std::size_t x = 0; x < extra; ++x) {
    const int h = g.halfedges_at(*g.find_vertex(d.emptied[x])).front();
    col1.at(ret.matrix.cols() + x, static_cast<std::size_t>(g.edge_of(h))) = g.side(h) == 0 ? 1 : -1;
  }

  const algebra::BoundedComplex c_whole = complex_of(whole, 0), c_open = complex_of(open, 0);
  const algebra::BoundedComplex c_ret = retract_complex(d);
  rep.inclusion = algebra::ChainMap{c_open, c_whole, {{0, inc0}, {1, inc1}}};
  rep.collapse = algebra::ChainMap{c_whole, c_ret, {{0, col0}, {1, col1}}};
  try {
    algebra::check_chain_map(rep.inclusion, ring);
    algebra::check_chain_map(rep.collapse, ring);
  } catch (const Error& err) {
    fail(ErrorCode::Internal, std::string("localization maps: ") + err.what());
  }
  rep.chain_maps = true;
  rep.composite_zero = is_zero_map(algebra::compose(rep.collapse, rep.inclusion, ring), ring);

  const algebra::BoundedComplex cone = algebra::cone(rep.inclusion, ring);
  rep.cone_homology = algebra::homology(cone, ring);
  rep.retract_homology = algebra::homology(c_ret, ring);
  rep.equal = rep.cone_homology == rep.retract_homology;

  // cone degree n = whole_n + open_{n-1}; the induced map is [collapse_n, 0].
  std::map<int, Matrix> induced;
  for (int n : {0, 1, 2}) {
    const Matrix cn = rep.collapse.component(n);
    Matrix m(c_ret.rank(n), cone.rank(n));
    place(m, 0, 0, cn);
    induced[n] = m;
  }
  const algebra::ChainMap to_ret{cone, c_ret, induced};
  algebra::check_chain_map(to_ret, ring);
  rep.induced_quasi_iso = algebra::homology(algebra::cone(to_ret, ring), ring).is_zero();
  return rep;
}

}  // namespace fukaya::statesum
