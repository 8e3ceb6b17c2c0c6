#pragma once

#include "lieortho/matrix.hpp"
#include "lieortho/rational.hpp"
#include "lieortho/subspace.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lieortho {

// Half-open range [begin, end) of basis indices.
struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  friend bool operator==(const IndexRange &, const IndexRange &) = default;
};

// Declared (not discovered) structure of an algebra. Every list holds
// coordinate ranges of the basis.
struct Decomposition {
  std::vector<IndexRange> summands; // direct-sum ideals
  std::vector<IndexRange> simple;   // simple components
  std::vector<IndexRange> center;
  std::vector<IndexRange> levi;
  std::vector<IndexRange> radical;
  bool semisimple = false;

  bool empty() const {
    return summands.empty() && simple.empty() && center.empty() && levi.empty() &&
           radical.empty() && !semisimple;
  }
  friend bool operator==(const Decomposition &, const Decomposition &) = default;
};

class LieAlgebra;
using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

// Finite-dimensional Lie algebra given by structure constants
// [e_i, e_j] = sum_k c_ij^k e_k. Only i < j is stored.
class LieAlgebra {
public:
  class Builder {
  public:
    explicit Builder(std::size_t dim);
    // Sets [e_i, e_j] (0-based, i != j); i > j stores the negated bracket.
    Builder &set(std::size_t i, std::size_t j, const Vector &value);
    Builder &set(std::size_t i, std::size_t j, std::size_t k, const Rational &c);
    Builder &names(std::vector<std::string> names);
    Builder &decomposition(Decomposition d);
    // Does not check the Jacobi identity; see build_checked.
    LieAlgebra build() const;
    // Throws JacobiError when the identity fails.
    LieAlgebra build_checked() const;

  private:
    std::size_t dim_;
    std::vector<Vector> upper_;
    std::vector<std::string> names_;
    Decomposition decomposition_;
  };

  LieAlgebra() : LieAlgebra(Builder(0).build()) {}

  std::size_t dim() const { return dim_; }
  const std::vector<std::string> &names() const { return names_; }
  const std::string &name(std::size_t i) const { return names_.at(i); }
  const Decomposition &decomposition() const { return decomposition_; }

  // c_ij^k with antisymmetry synthesized.
  Rational constant(std::size_t i, std::size_t j, std::size_t k) const;
  // [e_i, e_j] as a coordinate vector.
  Vector basis_bracket(std::size_t i, std::size_t j) const;
  // C^k = (c_ij^k)_{ij}, skew-symmetric.
  const Matrix &structure_matrix(std::size_t k) const { return structure_.at(k); }
  // ad e_i: column j holds [e_i, e_j].
  const Matrix &ad(std::size_t i) const { return ad_.at(i); }

  bool is_abelian() const;

  friend bool operator==(const LieAlgebra &a, const LieAlgebra &b) {
    return a.dim_ == b.dim_ && a.upper_ == b.upper_;
  }

  LieAlgebraPtr share() const { return std::make_shared<const LieAlgebra>(*this); }

private:
  LieAlgebra(std::size_t dim, std::vector<Vector> upper, std::vector<std::string> names,
             Decomposition decomposition);
  std::size_t pair_index(std::size_t i, std::size_t j) const;

  std::size_t dim_ = 0;
  std::vector<Vector> upper_; // pairs i<j in lexicographic order
  std::vector<std::string> names_;
  Decomposition decomposition_;
  std::vector<Matrix> structure_;
  std::vector<Matrix> ad_;
};

struct JacobiViolation {
  std::size_t i, j, k, l; // 0-based; i < j < k
  Rational residual;
};

struct JacobiReport {
  bool ok = true;
  std::optional<JacobiViolation> violation; // first in lexicographic order
};

class JacobiError : public std::invalid_argument {
public:
  explicit JacobiError(const JacobiViolation &v);
  JacobiViolation violation;
};

Vector bracket(const LieAlgebra &L, const Vector &x, const Vector &y);
JacobiReport jacobi_check(const LieAlgebra &L);

// span{[a, b] : a in A, b in B}
Subspace bracket_span(const LieAlgebra &L, const Subspace &a, const Subspace &b);
// Centralizer of S in L: {x : [x, s] = 0 for all s in S}.
Subspace centralizer(const LieAlgebra &L, const Subspace &s);
Subspace center(const LieAlgebra &L);

Subspace derived_subalgebra(const LieAlgebra &L);
// [S, S, ...] starting from S itself, stopping at zero or stabilization.
std::vector<Subspace> derived_series(const LieAlgebra &L, const Subspace &s);
std::vector<Subspace> derived_series(const LieAlgebra &L);
// Index of the first zero term of the derived series, or nullopt.
std::optional<std::size_t> solvability_degree(const LieAlgebra &L, const Subspace &s);
std::optional<std::size_t> solvability_degree(const LieAlgebra &L);

std::vector<Subspace> lower_central_series(const LieAlgebra &L, const Subspace &s);
std::vector<Subspace> lower_central_series(const LieAlgebra &L);
std::optional<std::size_t> nilpotency_degree(const LieAlgebra &L, const Subspace &s);
std::optional<std::size_t> nilpotency_degree(const LieAlgebra &L);

// Z_1 = Z, Z_{i+1} = preimage of the center of L / Z_i, until stable.
std::vector<Subspace> ascending_central_series(const LieAlgebra &L);

Matrix killing_form(const LieAlgebra &L);
// Killing-orthogonal complement of the derived algebra.
Subspace radical(const LieAlgebra &L);

bool is_subalgebra(const LieAlgebra &L, const Subspace &s);
bool is_ideal(const LieAlgebra &L, const Subspace &s);

struct Quotient {
  LieAlgebra algebra;
  Matrix projection; // (n-d) x n
  Matrix section;    // n x (n-d), unit vectors on the complement coordinates
  std::vector<std::size_t> complement; // coordinates kept
};

// L / I on the non-pivot coordinates of I. Throws std::invalid_argument if I
// is not an ideal.
Quotient quotient(const LieAlgebra &L, const Subspace &ideal);

// Structure constants of a subalgebra in its canonical basis. Throws
// std::invalid_argument if S is not closed under the bracket.
LieAlgebra restrict_algebra(const LieAlgebra &L, const Subspace &s);

LieAlgebra direct_sum(const std::vector<LieAlgebra> &summands);

bool is_automorphism(const LieAlgebra &L, const Matrix &s);

} // namespace lieortho
