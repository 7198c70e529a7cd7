#include "mf/hom_complex.hpp"

#include "error.hpp"

#include <functional>

namespace fukaya::mf {

using algebra::Matrix;
using algebra::Ring;

namespace {

long long floor_div(long long a, long long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0); }

std::vector<long long> shifted(std::vector<long long> t, long long by) {
  for (auto& x : t) x += by;
  return t;
}

// One block of a Hom piece: maps from `src` twists to `dst` twists, with a
// mask of admissible entries and their coordinate offsets.
struct Block {
  std::vector<long long> src, dst;
  std::vector<std::vector<long>> index;  // dst x src, -1 when inadmissible
};

Block make_block(const std::vector<long long>& src, const std::vector<long long>& dst, bool graded, std::size_t& next) {
  Block b{src, dst, {}};
  b.index.assign(dst.size(), std::vector<long>(src.size(), -1));
  for (std::size_t r = 0; r < dst.size(); ++r)
    for (std::size_t c = 0; c < src.size(); ++c)
      if (!graded || dst[r] >= src[c]) b.index[r][c] = static_cast<long>(next++);
  return b;
}

Matrix unit_in(const Block& b, std::size_t r, std::size_t c) {
  Matrix m(b.dst.size(), b.src.size());
  m.at(r, c) = 1;
  return m;
}

void write_column(Matrix& d, std::size_t col, const Block& b, const Matrix& value, const Ring& ring) {
  for (std::size_t r = 0; r < b.dst.size(); ++r)
    for (std::size_t c = 0; c < b.src.size(); ++c) {
      const auto& e = value.at(r, c);
      if (e.is_zero()) continue;
      if (b.index[r][c] < 0) fail(ErrorCode::Internal, "Hom differential leaves the admissible entries");
      auto& slot = d.at(static_cast<std::size_t>(b.index[r][c]), col);
      slot = ring.add(slot, e);
    }
}

// Applies `act` to each basis element of the pair of blocks (p, q).
void for_each_basis(const Block& p, const Block& q, const std::function<void(std::size_t, Matrix, Matrix)>& act) {
  for (std::size_t r = 0; r < p.dst.size(); ++r)
    for (std::size_t c = 0; c < p.src.size(); ++c)
      if (p.index[r][c] >= 0)
        act(static_cast<std::size_t>(p.index[r][c]), unit_in(p, r, c), Matrix(q.dst.size(), q.src.size()));
  for (std::size_t r = 0; r < q.dst.size(); ++r)
    for (std::size_t c = 0; c < q.src.size(); ++c)
      if (q.index[r][c] >= 0)
        act(static_cast<std::size_t>(q.index[r][c]), Matrix(p.dst.size(), p.src.size()), unit_in(q, r, c));
}

MFHomComplex hom_z2(const MatrixFactorization& x, const MatrixFactorization& y) {
  const Ring ring(coefficient_ring(x.grading, x.field));
  const int n = x.n;
  auto comp = [&](const Matrix& g, const Matrix& f, const auto& s, const auto& m, const auto& t) {
    return compose(ring, Grading::Z2, n, g, f, s, m, t);
  };
  std::size_t r0 = 0, r1 = 0;
  const Block f00 = make_block(x.twist0, y.twist0, false, r0), f11 = make_block(x.twist1, y.twist1, false, r0);
  const Block f01 = make_block(x.twist0, y.twist1, false, r1), f10 = make_block(x.twist1, y.twist0, false, r1);
  MFHomComplex h;
  h.grading = Grading::Z2;
  h.ring = ring.spec();
  h.ranks = {{0, r0}, {1, r1}};
  Matrix d0(r1, r0), d1(r0, r1);
  // Even f: d f = d_Y f - f d_X.
  for_each_basis(f00, f11, [&](std::size_t col, const Matrix& a, const Matrix& b) {
    write_column(d0, col, f01,
                 algebra::subtract(ring, comp(y.d0, a, x.twist0, y.twist0, y.twist1),
                                   comp(b, x.d0, x.twist0, x.twist1, y.twist1)),
                 ring);
    write_column(d0, col, f10,
                 algebra::subtract(ring, comp(y.d1, b, x.twist1, y.twist1, y.twist0),
                                   comp(a, x.d1, x.twist1, x.twist0, y.twist0)),
                 ring);
  });
  // Odd f: d f = d_Y f + f d_X.
  for_each_basis(f01, f10, [&](std::size_t col, const Matrix& a, const Matrix& b) {
    write_column(d1, col, f00,
                 algebra::add(ring, comp(y.d1, a, x.twist0, y.twist1, y.twist0),
                              comp(b, x.d0, x.twist0, x.twist1, y.twist0)),
                 ring);
    write_column(d1, col, f11,
                 algebra::add(ring, comp(y.d0, b, x.twist1, y.twist0, y.twist1),
                              comp(a, x.d1, x.twist1, x.twist0, y.twist1)),
                 ring);
  });
  h.d = {{0, d0}, {1, d1}};
  return h;
}

// Z mode: Y~^m = Y^{m mod 2}((n+1) floor(m/2)).
struct Unfolded {
  const MatrixFactorization& y;
  std::vector<long long> twists(long long m) const {
    const long long par = ((m % 2) + 2) % 2;
    return shifted(par == 0 ? y.twist0 : y.twist1, (y.n + 1) * floor_div(m, 2));
  }
  const Matrix& d(long long m) const { return ((m % 2) + 2) % 2 == 0 ? y.d0 : y.d1; }
};

struct ZPiece {
  Block f0, f1;  // X~^0 -> Y~^j and X~^1 -> Y~^{j+1}
  std::size_t rank = 0;
};

ZPiece z_piece(const MatrixFactorization& x, const Unfolded& yu, int j) {
  ZPiece p;
  p.f0 = make_block(x.twist0, yu.twists(j), true, p.rank);
  p.f1 = make_block(x.twist1, yu.twists(j + 1), true, p.rank);
  return p;
}

MFHomComplex hom_z(const MatrixFactorization& x, const MatrixFactorization& y) {
  const Ring ring(coefficient_ring(x.grading, x.field));
  const Unfolded yu{y};
  long long lo = 0, hi = 0;
  bool first = true;
  for (const auto* t : {&x.twist0, &x.twist1, &y.twist0, &y.twist1})
    for (long long v : *t) {
      lo = first ? v : std::min(lo, v);
      hi = first ? v : std::max(hi, v);
      first = false;
    }
  const long long span = hi - lo, period = x.n + 1;
  MFHomComplex h;
  h.grading = Grading::Z;
  h.ring = ring.spec();
  h.low = static_cast<int>(2 * floor_div(-span, period) - 2);
  h.high = static_cast<int>(2 * floor_div(span + period - 1, period) + 3);
  std::map<int, ZPiece> pieces;
  for (int j = h.low - 1; j <= h.high + 1; ++j) pieces.emplace(j, z_piece(x, yu, j));
  for (int j = h.low; j <= h.high; ++j) h.ranks[j] = pieces.at(j).rank;
  // d(f)_i = d_Y~ f_i - (-1)^j f_{i+1} d_X~, with f_2 = f_0 shifted.
  const auto sign = [&](int j) { return j % 2 == 0 ? algebra::Element(-1) : algebra::Element(1); };
  for (int j = h.low - 1; j <= h.high; ++j) {
    const ZPiece& from = pieces.at(j);
    const ZPiece& to = pieces.at(j + 1);
    Matrix d(to.rank, from.rank);
    const algebra::Element s = sign(j);
    for_each_basis(from.f0, from.f1, [&](std::size_t col, const Matrix& a, const Matrix& b) {
      auto scaled = [&](const Matrix& m) {
        Matrix out = m;
        for (std::size_t r = 0; r < out.rows(); ++r)
          for (std::size_t c = 0; c < out.cols(); ++c) out.at(r, c) = ring.mul(s, out.at(r, c));
        return out;
      };
      write_column(d, col, to.f0, algebra::add(ring, algebra::multiply(ring, yu.d(j), a), scaled(algebra::multiply(ring, b, x.d0))),
                   ring);
      write_column(d, col, to.f1,
                   algebra::add(ring, algebra::multiply(ring, yu.d(j + 1), b), scaled(algebra::multiply(ring, a, x.d1))),
                   ring);
    });
    if (d.rows() && d.cols()) h.d[j] = d;
  }
  return h;
}

}  // namespace

MFHomComplex hom_complex(const MatrixFactorization& x, const MatrixFactorization& y) {
  if (x.grading != y.grading || x.n != y.n || x.field != y.field)
    fail(ErrorCode::InvalidInput, "Hom needs factorizations of the same mode, n and field");
  check(x);
  check(y);
  MFHomComplex h = x.grading == Grading::Z2 ? hom_z2(x, y) : hom_z(x, y);
  check(h);
  return h;
}

void check(const MFHomComplex& h) {
  const Ring ring(h.ring);
  for (const auto& [j, m] : h.d) {
    const int next = h.grading == Grading::Z2 ? 1 - j : j + 1;
    const auto it = h.d.find(next);
    if (it == h.d.end()) continue;
    if (!algebra::reduce(ring, algebra::multiply(ring, it->second, m)).is_zero())
      fail(ErrorCode::InvalidComplex, "Hom differential does not square to zero");
  }
}

MFCohomology cohomology_mf(const MFHomComplex& h) {
  const Ring ring(h.ring);
  MFCohomology out;
  out.groups = algebra::HomologySummary(h.ring);
  auto rank_of = [&](int j) {
    auto it = h.d.find(j);
    return it == h.d.end() ? std::size_t{0} : algebra::rank(it->second, ring);
  };
  auto rank_at = [&](int j) {
    auto it = h.ranks.find(j);
    return it == h.ranks.end() ? std::size_t{0} : it->second;
  };
  if (h.grading == Grading::Z2) {
    for (int j : {0, 1}) {
      const int in = 1 - j;
      const auto it = h.d.find(in);
      algebra::DegreeHomology g;
      const algebra::SmithForm s = it == h.d.end() ? algebra::SmithForm{} : algebra::smith_normal_form(it->second, ring, false);
      g.free_rank = rank_at(j) - rank_of(j) - s.rank();
      for (const auto& p : s.pivots)
        if (!ring.is_unit(p)) g.torsion.push_back(p);
      out.groups.set(j, g);
    }
    return out;
  }
  std::map<int, std::size_t> dims;
  for (int j = h.low; j <= h.high; ++j) {
    algebra::DegreeHomology g;
    g.free_rank = rank_at(j) - rank_of(j) - rank_of(j - 1);
    dims[j] = g.free_rank;
    out.groups.set(j, g);
  }
  const bool high_even = h.high % 2 == 0;
  out.tail_even = dims[high_even ? h.high : h.high - 1];
  out.tail_odd = dims[high_even ? h.high - 1 : h.high];
  return out;
}

std::size_t dimension_over_field(const algebra::HomologySummary& h, int degree) {
  const auto& g = h.at(degree);
  if (h.ring().is_field()) return g.free_rank;
  if (h.ring().kind != algebra::RingKind::Polynomials)
    fail(ErrorCode::InvalidInput, "dimension over the field needs k or k[w] coefficients");
  if (g.free_rank > 0) fail(ErrorCode::InvalidInput, "cohomology has a free k[w] part and is infinite over k");
  std::size_t total = 0;
  for (const auto& t : g.torsion) total += static_cast<std::size_t>(t.degree());
  return total;
}

std::pair<std::size_t, std::size_t> fold_mod_two(const MFCohomology& c) {
  if (!c.finite()) fail(ErrorCode::InvalidInput, "Z-graded cohomology has a periodic tail");
  std::pair<std::size_t, std::size_t> out{0, 0};
  for (const auto& [j, g] : c.groups.degrees()) (j % 2 == 0 ? out.first : out.second) += g.free_rank;
  return out;
}

}  // namespace fukaya::mf
