#pragma once

#include "lieortho/lie_algebra.hpp"
#include "lieortho/matrix.hpp"
#include "lieortho/polynomial.hpp"
#include "lieortho/subspace.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lieortho {

// Linear operator on a Lie algebra; column j of the matrix is J e_j.
class Operator {
public:
  Operator(LieAlgebraPtr algebra, Matrix matrix);

  static Operator identity(LieAlgebraPtr algebra);

  const LieAlgebra &algebra() const { return *algebra_; }
  const LieAlgebraPtr &algebra_ptr() const { return algebra_; }
  const Matrix &matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.rows(); }

  Vector apply(const Vector &x) const { return matrix_ * x; }

  friend bool operator==(const Operator &a, const Operator &b) {
    return a.matrix_ == b.matrix_ &&
           (a.algebra_ == b.algebra_ || *a.algebra_ == *b.algebra_);
  }

private:
  LieAlgebraPtr algebra_;
  Matrix matrix_;
};

// --- Lie orthogonality --------------------------------------------------

// J^T C^k J = C^k for every structure matrix C^k.
bool is_lie_orthogonal(const Operator &j);
// J^T C^k J - C^k for k = 0..n-1.
std::vector<Matrix> residuals(const Operator &j);

struct OrthogonalityViolation {
  std::size_t i, j; // basis pair, i < j
  Vector expected;  // [e_i, e_j]
  Vector actual;    // [J e_i, J e_j]
};
// First violating basis pair in lexicographic order.
std::optional<OrthogonalityViolation> first_violation(const Operator &j);
// Every violating basis pair, lexicographic.
std::vector<OrthogonalityViolation> violations(const Operator &j);

// --- closure operations ---------------------------------------------------

Operator negate(const Operator &j);
Operator compose(const Operator &a, const Operator &b); // a * b
// Throws SingularMatrixError.
Operator invert(const Operator &j);
// Restriction to a J-invariant subalgebra, in the subspace's canonical basis.
// Throws std::invalid_argument if S is not invariant or not a subalgebra.
Operator restrict(const Operator &j, const Subspace &s);
// S^{-1} J S. Throws std::invalid_argument if S is not an automorphism.
Operator conjugate(const Operator &j, const Matrix &s);

// --- equivalence modulo the center ---------------------------------------

bool are_equivalent(const Operator &a, const Operator &b);

// Basis adapted to L = Z + complement: center basis first, then unit vectors
// on the non-pivot coordinates of Z.
Matrix adapted_basis(const LieAlgebra &L);

// In the adapted basis, sets the center blocks to B0 = E and B1 = 0 and keeps
// the rest. The result is equivalent to J and canonicalize is idempotent.
Operator canonicalize(const Operator &j);

// Essential block: the lower-right (n - dim Z) block in the adapted basis.
Matrix essential_block(const Operator &j);

class OperatorClass {
public:
  explicit OperatorClass(const Operator &j);
  static OperatorClass identity(LieAlgebraPtr algebra);
  const Operator &representative() const { return rep_; }
  friend bool operator==(const OperatorClass &, const OperatorClass &) = default;

private:
  Operator rep_;
};

OperatorClass class_compose(const OperatorClass &a, const OperatorClass &b);
// Throws SingularMatrixError if the essential block is singular.
OperatorClass class_invert(const OperatorClass &a);

// --- spectral decompositions ----------------------------------------------

struct Fitting {
  Subspace nilpotent_part;  // ker J^n
  Subspace invertible_part; // im J^n
};
Fitting fitting(const Operator &j);

struct Spectrum {
  std::vector<RootMultiplicity> eigenvalues; // rational part, decreasing
  bool splits = false;
  Polynomial characteristic;
};
Spectrum rational_spectrum(const Operator &j);

Subspace generalized_eigenspace(const Operator &j, const Rational &lambda);

struct LambdaIdeal {
  Subspace space;
  // Sum of the dimensions of the spanning pieces minus dim(space); nonzero
  // when the pieces overlap.
  std::size_t deficit = 0;
};
// span(L_lambda, L_{1/lambda}, Z), or span(L_lambda, Z) for lambda = +-1.
// Throws std::invalid_argument for lambda = 0.
LambdaIdeal ideal_i_lambda(const Operator &j, const Rational &lambda);

struct FactorOperator {
  Quotient quotient;
  Operator op;
};
// Induced operator on L / I. Throws std::invalid_argument unless I is a
// J-invariant ideal.
FactorOperator factor_operator(const Operator &j, const Subspace &ideal);

// --- reports ----------------------------------------------------------------

enum class Verdict { pass, fail, inapplicable };
std::string to_string(Verdict v);

struct Check {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::string detail;
  // Failed checks carry a pair of vectors that exhibits the failure.
  std::optional<std::pair<Vector, Vector>> witness;
};

struct AutomorphismReport {
  bool is_automorphism = false;
  std::vector<Check> checks;
};

struct InvarianceReport {
  std::vector<Check> checks;
  AutomorphismReport automorphism;
  bool all_passed() const;
  const Check *find(const std::string &name) const;
};

class NotLieOrthogonalError : public std::invalid_argument {
public:
  explicit NotLieOrthogonalError(const OrthogonalityViolation &v);
  OrthogonalityViolation violation;
};

// Runs every applicable invariance check. `extra_ideals` are user-supplied
// ideals tested for invariance when L/I is centerless. Throws
// NotLieOrthogonalError if J is not Lie-orthogonal.
InvarianceReport invariance_report(const Operator &j,
                                   const std::vector<Subspace> &extra_ideals = {});

// For J with eigenvalue 1: the canonicalized restriction to I_1 minus the
// identity is nilpotent with image in the radical of I_1.
Check identity_plus_nilpotent_check(const Operator &j);

// --- direct sums -----------------------------------------------------------

// Block-diagonal operator over the declared summands of L.
Operator direct_sum_operator(const std::vector<Operator> &parts, LieAlgebraPtr algebra);

class SplitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Splits a Lie-orthogonal J over the declared summands of L (up to
// equivalence). Throws SplitError if an off-diagonal block is not
// center-valued.
std::vector<Operator> split_operator(const Operator &j);

} // namespace lieortho
