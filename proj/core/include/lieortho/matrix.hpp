#pragma once

#include "lieortho/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace lieortho {

using Vector = std::vector<Rational>;

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Dense row-major matrix of exact rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(const Vector &diag);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector> &columns);
  static Matrix column_vector(const Vector &v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector &v);

  // Rows [r0, r0+nr) x columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix &b);

  void swap_rows(std::size_t a, std::size_t b);

  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const Matrix &, const Matrix &) = default;

  Matrix &operator+=(const Matrix &rhs);
  Matrix &operator-=(const Matrix &rhs);
  Matrix &operator*=(const Rational &s);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(Matrix a, const Matrix &b);
Matrix operator-(Matrix a, const Matrix &b);
Matrix operator-(Matrix a);
Matrix operator*(const Matrix &a, const Matrix &b);
Matrix operator*(const Rational &s, Matrix m);
Vector operator*(const Matrix &m, const Vector &v);

Vector operator+(Vector a, const Vector &b);
Vector operator-(Vector a, const Vector &b);
Vector scale(const Rational &s, Vector v);
bool is_zero(const Vector &v);
Vector unit_vector(std::size_t n, std::size_t i);

std::ostream &operator<<(std::ostream &os, const Matrix &m);

} // namespace lieortho
