#include "exact_algebra/smith.hpp"

#include <optional>
#include <utility>

namespace fukaya::algebra {

namespace {

// Elementary operations on the working matrix, mirrored into U (rows) or
// V (columns) when transforms are tracked.
class Reducer {
 public:
  Reducer(const Ring& ring, Matrix d, bool track)
      : ring_(ring), d_(std::move(d)), track_(track) {
    if (track_) {
      u_ = Matrix::identity(d_.rows());
      v_ = Matrix::identity(d_.cols());
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    swap_rows_of(d_, a, b);
    if (track_) swap_rows_of(u_, a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    swap_cols_of(d_, a, b);
    if (track_) swap_cols_of(v_, a, b);
  }
  // row[dst] += f * row[src]
  void add_row(std::size_t dst, std::size_t src, const Element& f) {
    add_row_of(d_, dst, src, f);
    if (track_) add_row_of(u_, dst, src, f);
  }
  void add_col(std::size_t dst, std::size_t src, const Element& f) {
    add_col_of(d_, dst, src, f);
    if (track_) add_col_of(v_, dst, src, f);
  }
  void scale_row(std::size_t r, const Element& unit) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_.at(r, j) = ring_.mul(unit, d_.at(r, j));
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j) u_.at(r, j) = ring_.mul(unit, u_.at(r, j));
  }

  Matrix& d() { return d_; }
  Matrix take_u() { return std::move(u_); }
  Matrix take_v() { return std::move(v_); }

 private:
  static void swap_rows_of(Matrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
  }
  static void swap_cols_of(Matrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
  }
  void add_row_of(Matrix& m, std::size_t dst, std::size_t src, const Element& f) const {
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(src, j).is_zero()) m.at(dst, j) = ring_.add(m.at(dst, j), ring_.mul(f, m.at(src, j)));
  }
  void add_col_of(Matrix& m, std::size_t dst, std::size_t src, const Element& f) const {
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m.at(i, src).is_zero()) m.at(i, dst) = ring_.add(m.at(i, dst), ring_.mul(f, m.at(i, src)));
  }

  const Ring& ring_;
  Matrix d_;
  Matrix u_;
  Matrix v_;
  bool track_;
};

}  // namespace

SmithForm smith_normal_form(const Matrix& a, const Ring& ring, bool with_transforms) {
  Reducer red(ring, reduce(ring, a), with_transforms);
  Matrix& d = red.d();
  const std::size_t rows = d.rows();
  const std::size_t cols = d.cols();
  std::vector<Element> pivots;

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    // Smallest-norm nonzero entry of the trailing block becomes the pivot.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_norm = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (d.at(i, j).is_zero()) continue;
        BigInt n = ring.norm(d.at(i, j));
        if (!best || n < best_norm) {
          best = {i, j};
          best_norm = n;
        }
      }
    if (!best) break;
    red.swap_rows(t, best->first);
    red.swap_cols(t, best->second);

    for (;;) {
      bool restart = false;
      for (std::size_t i = t + 1; i < rows && !restart; ++i) {
        if (d.at(i, t).is_zero()) continue;
        auto [q, r] = ring.divmod(d.at(i, t), d.at(t, t));
        red.add_row(i, t, ring.neg(q));
        if (!r.is_zero()) {
          red.swap_rows(t, i);
          restart = true;
        }
      }
      for (std::size_t j = t + 1; j < cols && !restart; ++j) {
        if (d.at(t, j).is_zero()) continue;
        auto [q, r] = ring.divmod(d.at(t, j), d.at(t, t));
        red.add_col(j, t, ring.neg(q));
        if (!r.is_zero()) {
          red.swap_cols(t, j);
          restart = true;
        }
      }
      if (restart) continue;
      // Pivot must divide the whole trailing block.
      for (std::size_t i = t + 1; i < rows && !restart; ++i)
        for (std::size_t j = t + 1; j < cols && !restart; ++j)
          if (!ring.divides(d.at(t, t), d.at(i, j))) {
            red.add_row(t, i, ring.one());
            restart = true;
          }
      if (!restart) break;
    }
    red.scale_row(t, ring.normalizing_unit(d.at(t, t)));
    pivots.push_back(d.at(t, t));
  }

  SmithForm out;
  out.D = std::move(d);
  out.pivots = std::move(pivots);
  if (with_transforms) {
    out.U = red.take_u();
    out.V = red.take_v();
  }
  return out;
}

std::size_t rank(const Matrix& a, const Ring& ring) { return smith_normal_form(a, ring, false).rank(); }

}  // namespace fukaya::algebra
