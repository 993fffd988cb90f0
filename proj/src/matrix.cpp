#include "dext/matrix.hpp"

namespace dext {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f),
      a_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, const Field& f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

std::size_t Matrix::rank() const { return rref().rank; }

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
  Matrix r(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix Matrix::augment(const Matrix& o) const {
  if (rows_ != o.rows_) throw DimensionMismatch("augment row count");
  Matrix r(rows_, cols_ + o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

Matrix Matrix::stack(const Matrix& o) const {
  if (cols_ != o.cols_) throw DimensionMismatch("stack column count");
  Matrix r(rows_ + o.rows_, cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

RrefResult Matrix::rref() const {
  Matrix m = *this;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && m.at(sel, col).is_zero()) ++sel;
    if (sel == rows_) continue;
    if (sel != row)
      for (std::size_t j = col; j < cols_; ++j)
        std::swap(m.at(sel, j), m.at(row, j));
    Scalar inv = m.at(row, col).inverse();
    for (std::size_t j = col; j < cols_; ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar c = m.at(i, col);
      for (std::size_t j = col; j < cols_; ++j)
        m.at(i, j) -= c * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return RrefResult{std::move(m), std::move(pivots), row};
}

std::optional<std::vector<Scalar>> Matrix::solve(
    const std::vector<Scalar>& b) const {
  if (b.size() != rows_) throw DimensionMismatch("solve rhs length");
  Matrix aug(rows_, cols_ + 1, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  RrefResult r = aug.rref();
  // inconsistent iff some pivot sits in the rhs column
  if (!r.pivots.empty() && r.pivots.back() == cols_) return std::nullopt;
  std::vector<Scalar> x(cols_, Scalar::zero(field_));
  for (std::size_t k = 0; k < r.pivots.size(); ++k)
    x[r.pivots[k]] = r.reduced.at(k, cols_);
  return x;
}

std::vector<std::vector<Scalar>> Matrix::kernel_basis() const {
  RrefResult r = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_, Scalar::zero(field_));
    v[free] = Scalar::one(field_);
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
      v[r.pivots[k]] = -r.reduced.at(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
  RrefResult r = augment(identity(rows_, field_)).rref();
  if (r.rank < rows_ || (r.rank > 0 && r.pivots[rows_ - 1] >= rows_))
    return std::nullopt;
  Matrix inv(rows_, cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      inv.at(i, j) = r.reduced.at(i, cols_ + j);
  return inv;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
  if (x.size() != cols_) throw DimensionMismatch("apply vector length");
  std::vector<Scalar> y(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) y[i] += at(i, j) * x[j];
  return y;
}

}  // namespace dext
