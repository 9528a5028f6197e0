#include "mdssd/matrix.hpp"

#include <utility>

namespace mdssd {

std::size_t rank(const Field& F, Matrix A) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < A.rows() && A(pivot, c).index == 0) ++pivot;
    if (pivot == A.rows()) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A(pivot, j), A(r, j));
    }
    const Element inv = F.inv(A(r, c));
    for (std::size_t j = c; j < A.cols(); ++j) A(r, j) = F.mul(A(r, j), inv);
    for (std::size_t i = r + 1; i < A.rows(); ++i) {
      const Element factor = A(i, c);
      if (factor.index == 0) continue;
      for (std::size_t j = c; j < A.cols(); ++j) A(i, j) = F.sub(A(i, j), F.mul(factor, A(r, j)));
    }
    ++r;
  }
  return r;
}

Matrix gram(const Field& F, const Matrix& A) {
  Matrix out(A.rows(), A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = i; j < A.rows(); ++j) {
      Element acc = F.zero();
      for (std::size_t c = 0; c < A.cols(); ++c) acc = F.add(acc, F.mul(A(i, c), A(j, c)));
      out(i, j) = acc;
      out(j, i) = acc;
    }
  }
  return out;
}

Matrix select_columns(const Matrix& A, std::span<const std::size_t> cols) {
  Matrix out(A.rows(), cols.size());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = A(i, cols[j]);
  }
  return out;
}

}  // namespace mdssd
