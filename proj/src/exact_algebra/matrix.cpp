#include "exact_algebra/matrix.hpp"

#include "error.hpp"

#include <sstream>

namespace fukaya::algebra {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Element(1);
  return m;
}

Matrix Matrix::from_ints(std::size_t rows, std::size_t cols, const std::vector<long long>& entries) {
  if (entries.size() != rows * cols) fail(ErrorCode::Internal, "from_ints: entry count mismatch");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.data_[i] = Element(BigRational(entries[i]));
  return m;
}

Matrix Matrix::from_ints(std::size_t rows, std::size_t cols, std::initializer_list<long long> entries) {
  return from_ints(rows, cols, std::vector<long long>(entries));
}

bool Matrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix multiply(const Ring& ring, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    fail(ErrorCode::Internal, "multiply: shape mismatch " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                  " * " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Element& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b.at(k, j).is_zero()) c.at(i, j) = ring.add(c.at(i, j), ring.mul(aik, b.at(k, j)));
    }
  return c;
}

Matrix add(const Ring& ring, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::Internal, "add: shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = ring.add(a.at(i, j), b.at(i, j));
  return c;
}

Matrix negate(const Ring& ring, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = ring.neg(a.at(i, j));
  return c;
}

Matrix subtract(const Ring& ring, const Matrix& a, const Matrix& b) { return add(ring, a, negate(ring, b)); }

Matrix reduce(const Ring& ring, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = ring.reduce(a.at(i, j));
  return c;
}

Matrix block(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
    fail(ErrorCode::Internal, "block: incompatible shapes");
  Matrix m(a.rows() + c.rows(), a.cols() + b.cols());
  auto place = [&m](const Matrix& src, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < src.rows(); ++i)
      for (std::size_t j = 0; j < src.cols(); ++j) m.at(r0 + i, c0 + j) = src.at(i, j);
  };
  place(a, 0, 0);
  place(b, 0, a.cols());
  place(c, a.rows(), 0);
  place(d, a.rows(), a.cols());
  return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  return block(a, Matrix(a.rows(), b.cols()), Matrix(b.rows(), a.cols()), b);
}

std::string to_string(const Ring& ring, const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << ring.to_string(m.at(i, j));
  }
  os << "]";
  return os.str();
}

}  // namespace fukaya::algebra
