#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "segre/exact/scalar.hpp"

namespace segre::exact {

using Vector = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field f = Field::rationals());
  static Matrix identity(std::size_t n, Field f = Field::rationals());
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols, Field f = Field::rationals());
  static Matrix from_ints(const std::vector<std::vector<long long>>& rows, Field f = Field::rationals());

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  Matrix in(const Field& f) const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  bool operator==(const Matrix& o) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

// Reduced row echelon form with leftmost pivots scaled to 1; zero rows are kept at the bottom.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);
// Rows form a basis of {v : m v = 0}, itself in reduced row echelon form.
Matrix kernel(const Matrix& m);
Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
// Drops zero rows of the reduced form.
Matrix row_basis(const Matrix& m);
Matrix stack(const Matrix& top, const Matrix& bottom);

}  // namespace segre::exact
