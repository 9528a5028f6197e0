#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mdssd/galois.hpp"

namespace mdssd {

/// Dense row-major matrix of field elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

/// Rank by Gaussian elimination over F.
std::size_t rank(const Field& F, Matrix A);
/// A * A^T.
Matrix gram(const Field& F, const Matrix& A);
/// Columns `cols` of A as a new matrix.
Matrix select_columns(const Matrix& A, std::span<const std::size_t> cols);

}  // namespace mdssd
