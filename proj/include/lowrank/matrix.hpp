#pragma once

#include <cstddef>
#include <vector>

#include "lowrank/exactnum.hpp"

namespace lowrank {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major);

  static RationalMatrix identity(std::size_t n);
  /// u v^T
  static RationalMatrix outer(const std::vector<Rational>& u, const std::vector<Rational>& v);
  /// Columns of the result are the given vectors.
  static RationalMatrix from_columns(const std::vector<std::vector<Rational>>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix transpose() const;
  Rational trace() const;
  bool is_symmetric() const;
  bool is_zero() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
std::vector<Rational> operator*(const RationalMatrix& a, const std::vector<Rational>& x);

/// trace(A^T B), the entrywise inner product.
Rational frobenius_inner(const RationalMatrix& a, const RationalMatrix& b);

Rational dot(const std::vector<Rational>& u, const std::vector<Rational>& v);

/// Rank by fraction-free (Bareiss) elimination after clearing denominators
/// row by row.
std::size_t rank(const RationalMatrix& m);

/// Gauss-Jordan inverse. Throws std::domain_error when singular.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace lowrank
