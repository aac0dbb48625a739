#ifndef CONFSPACE_DENSE_HPP
#define CONFSPACE_DENSE_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace confspace {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Row-major dense matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref();

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(Matrix m);

/// Basis of {v : M v = 0}.
std::vector<Vector> nullspace(Matrix m);

/// Rank of a family of vectors of a common length.
std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t length);

/// Whether two families span the same subspace.
bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t length);

bool is_zero(const Vector& v);

}  // namespace confspace

#endif  // CONFSPACE_DENSE_HPP
