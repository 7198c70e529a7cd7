#pragma once

#include "exact_algebra/ring.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace fukaya::algebra {

/// Dense row-major matrix of ring elements. Ring-agnostic storage; every
/// arithmetic operation takes the Ring it is performed in.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_ints(std::size_t rows, std::size_t cols, std::initializer_list<long long> entries);
  static Matrix from_ints(std::size_t rows, std::size_t cols, const std::vector<long long>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Element& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

Matrix multiply(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix add(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix subtract(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix negate(const Ring& ring, const Matrix& a);
/// Re-reduces all entries in `ring` (e.g. integer data viewed mod p).
Matrix reduce(const Ring& ring, const Matrix& a);

/// Block matrix [[a, b], [c, d]]; shapes must be compatible.
Matrix block(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);
/// Block-diagonal direct sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

std::string to_string(const Ring& ring, const Matrix& m);

}  // namespace fukaya::algebra
