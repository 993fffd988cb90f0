#pragma once

#include <optional>
#include <vector>

#include "dext/scalar.hpp"

namespace dext {

struct RrefResult;

/// Dense matrix over the session field. Row-major; all arithmetic exact.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const Field& f);
  static Matrix identity(std::size_t n, const Field& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;

  /// Append the columns of `o` on the right (same row count).
  Matrix augment(const Matrix& o) const;
  /// Append the rows of `o` below (same column count).
  Matrix stack(const Matrix& o) const;

  /// Unique reduced row-echelon form.
  RrefResult rref() const;
  std::size_t rank() const;

  /// Some x with M x = b, free variables set to 0; nullopt if inconsistent.
  std::optional<std::vector<Scalar>> solve(
      const std::vector<Scalar>& b) const;

  /// Basis of {x : M x = 0}; one vector per free column, entry 1 there.
  std::vector<std::vector<Scalar>> kernel_basis() const;

  /// Two-sided inverse of a square matrix, or nullopt if singular.
  std::optional<Matrix> inverse() const;

  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

 private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<Scalar> a_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
  std::size_t rank;
};

}  // namespace dext
