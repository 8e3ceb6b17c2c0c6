#include "lieortho/matrix.hpp"

#include <ostream>
#include <string>
#include <utility>

namespace lieortho {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vector &diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i)
    m(i, i) = diag[i];
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector> &columns) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    m.set_column(j, columns[j]);
  return m;
}

Matrix Matrix::column_vector(const Vector &v) { return from_columns(v.size(), {v}); }

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, const Vector &v) {
  if (v.size() != rows_)
    throw DimensionError("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, j) = v[i];
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                     std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    throw DimensionError("block out of range");
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix &b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
    throw DimensionError("block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      (*this)(r0 + i, c0 + j) = b(i, j);
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap((*this)(a, j), (*this)(b, j));
}

bool Matrix::is_zero() const {
  for (const auto &x : data_)
    if (!x.is_zero())
      return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square())
    return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != Rational(i == j ? 1 : 0))
        return false;
  return true;
}

Matrix &Matrix::operator+=(const Matrix &rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionError("matrix sum dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    data_[k] += rhs.data_[k];
  return *this;
}

Matrix &Matrix::operator-=(const Matrix &rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionError("matrix difference dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    data_[k] -= rhs.data_[k];
  return *this;
}

Matrix &Matrix::operator*=(const Rational &s) {
  for (auto &x : data_)
    x *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
Matrix operator-(Matrix a) { return a *= Rational(-1); }
Matrix operator*(const Rational &s, Matrix m) { return m *= s; }

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.rows())
    throw DimensionError("matrix product dimension mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational &aik = a(i, k);
      if (aik.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero())
          c(i, j) += aik * b(k, j);
    }
  return c;
}

Vector operator*(const Matrix &m, const Vector &v) {
  if (m.cols() != v.size())
    throw DimensionError("matrix-vector dimension mismatch");
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero())
        out[i] += m(i, j) * v[j];
  return out;
}

Vector operator+(Vector a, const Vector &b) {
  if (a.size() != b.size())
    throw DimensionError("vector sum dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] += b[i];
  return a;
}

Vector operator-(Vector a, const Vector &b) {
  if (a.size() != b.size())
    throw DimensionError("vector difference dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] -= b[i];
  return a;
}

Vector scale(const Rational &s, Vector v) {
  for (auto &x : v)
    x *= s;
  return v;
}

bool is_zero(const Vector &v) {
  for (const auto &x : v)
    if (!x.is_zero())
      return false;
  return true;
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

std::ostream &operator<<(std::ostream &os, const Matrix &m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

} // namespace lieortho
