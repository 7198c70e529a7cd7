#include "exact_algebra/complex.hpp"

#include "error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fukaya::algebra {

BoundedComplex BoundedComplex::make_unchecked(std::map<int, std::size_t> ranks, std::map<int, Matrix> differentials) {
  BoundedComplex c;
  for (auto& [deg, r] : ranks)
    if (r > 0) c.ranks_[deg] = r;
  for (auto& [deg, m] : differentials) {
    if (m.rows() != c.rank(deg - 1) || m.cols() != c.rank(deg))
      fail(ErrorCode::InvalidComplex, "differential d_" + std::to_string(deg) + " has shape " +
                                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                                          std::to_string(c.rank(deg - 1)) + "x" + std::to_string(c.rank(deg)));
    if (!m.empty()) c.diffs_[deg] = std::move(m);
  }
  return c;
}

BoundedComplex BoundedComplex::make(const Ring& ring, std::map<int, std::size_t> ranks,
                                    std::map<int, Matrix> differentials) {
  BoundedComplex c = make_unchecked(std::move(ranks), std::move(differentials));
  c.check(ring);
  return c;
}

std::size_t BoundedComplex::rank(int degree) const {
  auto it = ranks_.find(degree);
  return it == ranks_.end() ? 0 : it->second;
}

Matrix BoundedComplex::differential(int degree) const {
  auto it = diffs_.find(degree);
  if (it != diffs_.end()) return it->second;
  return Matrix(rank(degree - 1), rank(degree));
}

int BoundedComplex::min_degree() const { return ranks_.empty() ? 0 : ranks_.begin()->first; }
int BoundedComplex::max_degree() const { return ranks_.empty() ? 0 : ranks_.rbegin()->first; }
bool BoundedComplex::is_zero() const { return ranks_.empty(); }

void BoundedComplex::check(const Ring& ring) const {
  for (const auto& [deg, m] : diffs_) {
    if (m.rows() != rank(deg - 1) || m.cols() != rank(deg))
      fail(ErrorCode::InvalidComplex, "shape mismatch in d_" + std::to_string(deg));
    Matrix next = differential(deg - 1);
    if (!multiply(ring, next, m).is_zero())
      fail(ErrorCode::InvalidComplex, "d_" + std::to_string(deg - 1) + " ∘ d_" + std::to_string(deg) + " ≠ 0");
  }
}

void HomologySummary::set(int degree, DegreeHomology h) {
  if (h.is_zero())
    by_degree_.erase(degree);
  else
    by_degree_[degree] = std::move(h);
}

void HomologySummary::accumulate(int degree, const DegreeHomology& h) {
  if (h.is_zero()) return;
  DegreeHomology& slot = by_degree_[degree];
  slot.free_rank += h.free_rank;
  slot.torsion.insert(slot.torsion.end(), h.torsion.begin(), h.torsion.end());
  // Keep the torsion list in a canonical order so sums compare equal.
  Ring ring(ring_);
  std::stable_sort(slot.torsion.begin(), slot.torsion.end(), [&ring](const Element& a, const Element& b) {
    BigInt na = ring.norm(a), nb = ring.norm(b);
    if (na != nb) return na < nb;
    return ring.to_string(a) < ring.to_string(b);
  });
}

std::size_t HomologySummary::free_rank(int degree) const {
  auto it = by_degree_.find(degree);
  return it == by_degree_.end() ? 0 : it->second.free_rank;
}

std::vector<Element> HomologySummary::torsion(int degree) const {
  auto it = by_degree_.find(degree);
  return it == by_degree_.end() ? std::vector<Element>{} : it->second.torsion;
}

const DegreeHomology& HomologySummary::at(int degree) const {
  static const DegreeHomology empty;
  auto it = by_degree_.find(degree);
  return it == by_degree_.end() ? empty : it->second;
}

std::string HomologySummary::describe(int degree) const {
  const DegreeHomology& h = at(degree);
  if (h.is_zero()) return "0";
  const std::string base = ring_.name();
  Ring ring(ring_);
  std::vector<std::string> parts;
  if (h.free_rank == 1) parts.push_back(base);
  if (h.free_rank > 1) parts.push_back(base + "^" + std::to_string(h.free_rank));
  for (const auto& t : h.torsion) {
    if (ring_.kind == RingKind::Integers)
      parts.push_back("Z/" + ring.to_string(t));
    else
      parts.push_back(base + "/(" + ring.to_string(t) + ")");
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

std::string HomologySummary::describe() const {
  if (by_degree_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [deg, h] : by_degree_) {
    os << (first ? "" : ", ") << "H" << deg << "=" << describe(deg);
    first = false;
  }
  return os.str();
}

namespace {

DegreeHomology degree_homology(std::size_t dim, std::size_t rank_out, const SmithForm& incoming, const Ring& ring) {
  DegreeHomology h;
  h.free_rank = dim - rank_out - incoming.rank();
  for (const auto& p : incoming.pivots)
    if (!ring.is_unit(p)) h.torsion.push_back(p);
  return h;
}

}  // namespace

HomologySummary homology(const BoundedComplex& c, const Ring& ring) {
  c.check(ring);
  HomologySummary out(ring.spec());
  if (c.is_zero()) return out;
  std::map<int, SmithForm> snf;
  for (int n = c.min_degree(); n <= c.max_degree() + 1; ++n)
    snf.emplace(n, smith_normal_form(c.differential(n), ring, false));
  for (int n = c.min_degree(); n <= c.max_degree(); ++n)
    out.set(n, degree_homology(c.rank(n), snf.at(n).rank(), snf.at(n + 1), ring));
  return out;
}

HomologySummary two_term_homology(const Matrix& m, const Ring& ring, int low_degree) {
  HomologySummary out(ring.spec());
  SmithForm s = smith_normal_form(m, ring, false);
  out.set(low_degree, degree_homology(m.rows(), 0, s, ring));
  DegreeHomology top;
  top.free_rank = m.cols() - s.rank();
  out.set(low_degree + 1, top);
  return out;
}

Matrix ChainMap::component(int degree) const {
  auto it = components.find(degree);
  if (it != components.end()) return it->second;
  return Matrix(target.rank(degree), source.rank(degree));
}

void check_chain_map(const ChainMap& f, const Ring& ring) {
  std::set<int> degrees;
  for (const auto& [d, r] : f.source.ranks()) degrees.insert(d);
  for (const auto& [d, r] : f.target.ranks()) degrees.insert(d);
  for (const auto& [d, m] : f.components) {
    if (m.rows() != f.target.rank(d) || m.cols() != f.source.rank(d))
      fail(ErrorCode::InvalidComplex, "chain map component " + std::to_string(d) + " has wrong shape");
  }
  for (int n : degrees) {
    // d_B f_n = f_{n-1} d_A on A_n
    Matrix lhs = multiply(ring, f.target.differential(n), f.component(n));
    Matrix rhs = multiply(ring, f.component(n - 1), f.source.differential(n));
    if (!(reduce(ring, subtract(ring, lhs, rhs)).is_zero()))
      fail(ErrorCode::InvalidComplex, "not a chain map in degree " + std::to_string(n));
  }
}

BoundedComplex cone(const ChainMap& f, const Ring& ring) {
  f.source.check(ring);
  f.target.check(ring);
  check_chain_map(f, ring);
  std::set<int> degrees;
  for (const auto& [d, r] : f.target.ranks()) degrees.insert(d);
  for (const auto& [d, r] : f.source.ranks()) degrees.insert(d + 1);
  std::map<int, std::size_t> ranks;
  for (int n : degrees) ranks[n] = f.target.rank(n) + f.source.rank(n - 1);
  std::map<int, Matrix> diffs;
  for (int n : degrees) {
    if (ranks.count(n - 1) == 0) continue;
    // C_n = B_n ⊕ A_{n-1}  ->  C_{n-1} = B_{n-1} ⊕ A_{n-2}
    Matrix top_left = f.target.differential(n);
    Matrix top_right = f.component(n - 1);
    Matrix bottom_left(f.source.rank(n - 2), f.target.rank(n));
    Matrix bottom_right = negate(ring, f.source.differential(n - 1));
    diffs[n] = block(top_left, top_right, bottom_left, bottom_right);
  }
  return BoundedComplex::make(ring, ranks, diffs);
}

ChainMap compose(const ChainMap& g, const ChainMap& f, const Ring& ring) {
  ChainMap out{f.source, g.target, {}};
  std::set<int> degrees;
  for (const auto& [d, r] : f.source.ranks()) degrees.insert(d);
  for (int n : degrees) out.components[n] = multiply(ring, g.component(n), f.component(n));
  return out;
}

}  // namespace fukaya::algebra
