#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lts/scalar.hpp"

namespace lts {

using Vector = std::vector<Scalar>;

Vector zero_vector(Field field, std::size_t n);
Vector unit_vector(Field field, std::size_t n, std::size_t index);
bool is_zero(std::span<const Scalar> v);
/// y += a * x
void axpy(Vector& y, const Scalar& a, std::span<const Scalar> x);
Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(const Scalar& a, Vector v);

/// Dense row-major matrix over an exact field.
class Matrix {
 public:
  Matrix() : field_(Field::rational()) {}
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  /// Every row must have `cols` entries.
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  void append_row(std::span<const Scalar> v);

  Matrix transpose() const;
  /// Row vector times matrix: v * M.
  Vector left_multiply(std::span<const Scalar> v) const;
  /// Matrix times column vector: M * v.
  Vector right_multiply(std::span<const Scalar> v) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix reduced;                   ///< canonical RREF, zero rows dropped
  std::vector<std::size_t> pivots;  ///< strictly increasing pivot columns
};

/// Canonical reduced row echelon form of the row space of m.
Echelon rref(const Matrix& m);

/// Throws std::domain_error if m is not square and invertible.
Matrix inverse(const Matrix& m);

}  // namespace lts
