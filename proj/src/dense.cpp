#include "confspace/dense.hpp"

#include <stdexcept>

namespace confspace {

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Rational factor;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = r;
    while (sel < rows_ && (*this)(sel, c) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != r)
      for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(sel, k), (*this)(r, k));
    Rational inv = 1 / (*this)(r, c);
    for (std::size_t k = c; k < cols_; ++k)
      if ((*this)(r, k) != 0) (*this)(r, k) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || (*this)(i, c) == 0) continue;
      factor = (*this)(i, c);
      for (std::size_t k = c; k < cols_; ++k)
        if ((*this)(r, k) != 0) (*this)(i, k) -= factor * (*this)(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return m.rref().size(); }

std::vector<Vector> nullspace(Matrix m) {
  auto pivots = m.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t length) {
  if (vectors.empty() || length == 0) return 0;
  return rank(Matrix::from_rows(vectors, length));
}

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t length) {
  std::size_t ra = rank_of(a, length);
  std::size_t rb = rank_of(b, length);
  if (ra != rb) return false;
  std::vector<Vector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return rank_of(both, length) == ra;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace confspace
