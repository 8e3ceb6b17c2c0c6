#include "lieortho/linalg.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace lieortho {

std::size_t elimination_bit_limit() {
  static const std::size_t limit = [] {
    const char *env = std::getenv("LIEORTHO_MAX_BITS");
    if (env == nullptr || *env == '\0')
      return std::size_t{0};
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception &) {
      return std::size_t{0};
    }
  }();
  return limit;
}

namespace {

void enforce_bit_limit(const Rational &x) {
  const std::size_t limit = elimination_bit_limit();
  if (limit != 0 && x.bits() > limit)
    throw std::overflow_error("entry exceeds LIEORTHO_MAX_BITS=" + std::to_string(limit));
}

void enforce_bit_limit(const mpz_class &x) {
  const std::size_t limit = elimination_bit_limit();
  if (limit != 0 && mpz_sizeinbase(x.get_mpz_t(), 2) > limit)
    throw std::overflow_error("entry exceeds LIEORTHO_MAX_BITS=" + std::to_string(limit));
}

} // namespace

RrefResult rref(const Matrix &m) {
  RrefResult out{m, {}};
  Matrix &a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero())
      ++pivot;
    if (pivot == a.rows())
      continue;
    a.swap_rows(row, pivot);
    const Rational inv = inverse(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j)
      if (!a(row, j).is_zero()) {
        a(row, j) *= inv;
        enforce_bit_limit(a(row, j));
      }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero())
        continue;
      const Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero())
          a(i, j) -= f * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const Matrix &m) { return rref(m).pivots.size(); }

Matrix nullspace(const Matrix &m) {
  const auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f])
      continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -r(k, f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(m.cols(), basis);
}

Matrix canonical_columns(const Matrix &m) {
  const auto [r, pivots] = rref(transpose(m));
  return transpose(r.block(0, 0, pivots.size(), r.cols()));
}

Matrix column_span(const Matrix &m) { return canonical_columns(m); }

Matrix transpose(const Matrix &m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      t(j, i) = m(i, j);
  return t;
}

Matrix power(const Matrix &m, std::size_t k) {
  if (!m.is_square())
    throw DimensionError("power of a non-square matrix");
  Matrix result = Matrix::identity(m.rows());
  Matrix base = m;
  while (k > 0) {
    if (k & 1U)
      result = result * base;
    k >>= 1U;
    if (k > 0)
      base = base * base;
  }
  return result;
}

Rational trace(const Matrix &m) {
  if (!m.is_square())
    throw DimensionError("trace of a non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < m.rows(); ++i)
    t += m(i, i);
  return t;
}

Rational det(const Matrix &m) {
  if (!m.is_square())
    throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return Rational(1);

  // Scale each row to integers; det(m) = det(scaled) / prod(scales).
  std::vector<mpz_class> a(n * n);
  mpz_class scale_product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).value().get_den_mpz_t());
    scale_product *= l;
    for (std::size_t j = 0; j < n; ++j)
      a[i * n + j] = m(i, j).value().get_num() * (l / m(i, j).value().get_den());
  }

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p * n + k] == 0)
      ++p;
    if (p == n)
      return Rational(0);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        enforce_bit_limit(v);
        a[i * n + j] = std::move(v);
      }
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  return Rational(sign * a[n * n - 1], scale_product);
}

Matrix inverse(const Matrix &m) {
  if (!m.is_square())
    throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const auto [r, pivots] = rref(hstack(m, Matrix::identity(n)));
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw SingularMatrixError("matrix is singular");
  return r.block(0, n, n, n);
}

bool solve(const Matrix &m, const Vector &b, Vector &x) {
  if (m.rows() != b.size())
    throw DimensionError("solve: right-hand side length mismatch");
  const auto [r, pivots] = rref(hstack(m, Matrix::column_vector(b)));
  if (!pivots.empty() && pivots.back() == m.cols())
    return false;
  x.assign(m.cols(), Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k)
    x[pivots[k]] = r(k, m.cols());
  return true;
}

Polynomial char_poly(const Matrix &m) {
  if (!m.is_square())
    throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  // coeff[k] is the coefficient of t^k.
  std::vector<Rational> coeff(n + 1);
  coeff[n] = 1;
  Matrix acc(n, n); // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    acc = m * acc;
    for (std::size_t i = 0; i < n; ++i)
      acc(i, i) += coeff[n - k + 1];
    coeff[n - k] = -trace(m * acc) / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(coeff));
}

Matrix block_compose(const std::vector<std::vector<Matrix>> &blocks) {
  if (blocks.empty())
    return Matrix();
  const std::size_t block_cols = blocks.front().size();
  std::vector<std::size_t> row_heights, col_widths(block_cols, 0);
  for (const auto &brow : blocks) {
    if (brow.size() != block_cols)
      throw DimensionError("block_compose: ragged block rows");
    row_heights.push_back(brow.empty() ? 0 : brow.front().rows());
  }
  for (std::size_t bj = 0; bj < block_cols; ++bj)
    col_widths[bj] = blocks.front()[bj].cols();
  std::size_t total_rows = 0, total_cols = 0;
  for (auto h : row_heights)
    total_rows += h;
  for (auto w : col_widths)
    total_cols += w;
  Matrix out(total_rows, total_cols);
  std::size_t r0 = 0;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    std::size_t c0 = 0;
    for (std::size_t bj = 0; bj < block_cols; ++bj) {
      const Matrix &b = blocks[bi][bj];
      if (b.rows() != row_heights[bi] || b.cols() != col_widths[bj])
        throw DimensionError("block_compose: incompatible block sizes");
      out.set_block(r0, c0, b);
      c0 += col_widths[bj];
    }
    r0 += row_heights[bi];
  }
  return out;
}

Matrix block_diagonal(const std::vector<Matrix> &blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto &b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix out(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto &b : blocks) {
    out.set_block(r0, c0, b);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

Matrix hstack(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows())
    throw DimensionError("hstack: row count mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

} // namespace lieortho
