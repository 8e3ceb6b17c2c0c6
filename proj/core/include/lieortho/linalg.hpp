#pragma once

#include "lieortho/matrix.hpp"
#include "lieortho/polynomial.hpp"
#include "lieortho/rational.hpp"

#include <cstddef>
#include <vector>

namespace lieortho {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

// Reduced row-echelon form. The pivot in each column is the first nonzero
// entry at or below the current row.
RrefResult rref(const Matrix &m);

std::size_t rank(const Matrix &m);

// Columns span {x : m x = 0}: one column per free variable f with x_f = 1 and
// the other free variables zero.
Matrix nullspace(const Matrix &m);

// Canonical basis of the column space (see canonical_columns).
Matrix column_span(const Matrix &m);

// Canonical form of a column set: transpose of the nonzero rows of
// rref(m^T). Two column sets span the same space iff their canonical forms are
// equal.
Matrix canonical_columns(const Matrix &m);

Matrix transpose(const Matrix &m);
Matrix power(const Matrix &m, std::size_t k);
Rational trace(const Matrix &m);

// Fraction-free (Bareiss) elimination after clearing row denominators.
Rational det(const Matrix &m);

// Throws SingularMatrixError when det(m) = 0.
Matrix inverse(const Matrix &m);

// Solves m x = b; returns false if inconsistent. Picks free variables = 0.
bool solve(const Matrix &m, const Vector &b, Vector &x);

// Monic det(tE - m), Faddeev-LeVerrier recurrence.
Polynomial char_poly(const Matrix &m);

// Assembles a block matrix. All blocks in a block-row share a row count and
// all blocks in a block-column share a column count.
Matrix block_compose(const std::vector<std::vector<Matrix>> &blocks);
Matrix block_diagonal(const std::vector<Matrix> &blocks);
Matrix hstack(const Matrix &a, const Matrix &b);

// Maximum entry bit size allowed during elimination, from the environment
// variable LIEORTHO_MAX_BITS (0 = unlimited). Exceeding it throws
// std::overflow_error.
std::size_t elimination_bit_limit();

} // namespace lieortho
