#pragma once

#include "freeop/rational.hpp"

#include <optional>
#include <vector>

namespace freeop {

/// Dense matrix over Q, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all the same length).
  static Matrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& rhs) const;
  RationalVector operator*(const RationalVector& v) const;
  Matrix transpose() const;
  bool operator==(const Matrix&) const = default;

  /// Reduced row echelon form; pivot columns are written to `pivots`.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  /// Basis of { v : M v = 0 }.
  std::vector<RationalVector> kernel() const;
  /// Some solution of M v = b, if one exists.
  std::optional<RationalVector> solve(const RationalVector& b) const;
  std::optional<Matrix> inverse() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

bool is_zero_vector(const RationalVector& v);

}  // namespace freeop
