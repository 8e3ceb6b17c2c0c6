#pragma once

#include "lieortho/lie_algebra.hpp"
#include "lieortho/matrix.hpp"
#include "lieortho/ortho.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace lieortho {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi].
Rational random_integer(Rng &rng, long lo = -3, long hi = 3);
Matrix random_integer_matrix(Rng &rng, std::size_t rows, std::size_t cols, long lo = -3,
                             long hi = 3);

// --- semisimple and reductive algebras ------------------------------------

// +-Id on each declared simple component. Throws DimensionError on a sign
// count mismatch, std::invalid_argument if the simple ranges do not cover L.
Operator semisimple_op(LieAlgebraPtr L, const std::vector<int> &signs);

// +-Id on each simple component plus arbitrary rows on the center
// coordinates (center_rows is (dim Z) x n). The declared simple and center
// ranges must partition the basis.
Operator reductive_op(LieAlgebraPtr L, const std::vector<int> &signs,
                      const Matrix &center_rows);

// gl_n in the matrix-unit basis: sign on the traceless part plus
// X -> f(X) E_n for the functional f.
Operator gln_op(LieAlgebraPtr L, int sign, const Vector &center_functional);
// Projection of canonicalize(J) onto sl_n (along the center) restricted to sl_n
// equals +-Id.
bool gln_in_form(const Operator &j);

// --- symplectic group -----------------------------------------------------

// S = [[0, -E], [E, 0]] of size 2n.
Matrix symplectic_form(std::size_t n);
// M^T S M = S. Throws DimensionError for odd or non-square input.
bool is_symplectic(const Matrix &m);
// Product of `steps` random elementary symplectic factors. Throws
// std::invalid_argument for steps = 0.
Matrix random_symplectic(std::size_t n, Rng &rng, std::size_t steps = 4);
Matrix random_symplectic(std::size_t n, std::uint64_t seed, std::size_t steps = 4);

// --- Heisenberg algebras ------------------------------------------------

// [[r, R], [0, Jhat]] on heisenberg(n). Throws std::invalid_argument if
// Jhat is not symplectic.
Operator heisenberg_op(std::size_t n, const Matrix &jhat, const Rational &r,
                       const Vector &top_row);
// First column zero below row 1 and essential block symplectic.
bool heisenberg_in_form(const Operator &j);

// --- almost abelian algebras ---------------------------------------------

struct AlmostAbelianCase1 {
  Matrix b0, b1, b2, b3; // m x m, m x (n-m-1), m x 1, (n-m-1) x 1
  Rational mu;
};
struct AlmostAbelianCase2 {
  Matrix b0, b1, c; // (n-2) x (n-2), (n-2) x 2, 2 x 2 with det 1
};
using AlmostAbelianParams = std::variant<AlmostAbelianCase1, AlmostAbelianCase2>;

// Matrix A of an almost abelian algebra with abelian ideal <e_1..e_{n-1}>.
// Throws std::invalid_argument if L does not have that shape.
Matrix almost_abelian_matrix(const LieAlgebra &L);

// Center dimension m of an almost abelian algebra in normal layout: the
// first m columns of A vanish and rank A = n - m - 1. Throws
// std::invalid_argument otherwise.
std::size_t normal_layout_center_dim(const Matrix &a);

struct NormalLayout {
  Matrix a;                        // P^T A P
  std::vector<std::size_t> order;  // new coordinate k is old coordinate order[k]
};
// Reorders the ideal coordinates so that ker A comes first. Throws
// std::invalid_argument when ker A is not spanned by unit vectors.
NormalLayout to_normal_layout(const Matrix &a);

Operator almost_abelian_op(LieAlgebraPtr L, const AlmostAbelianParams &params);
bool almost_abelian_in_form(const Operator &j);

// --- minimal nilradical and sl2 semidirect -------------------------------

// Block-diagonal SL_2 copies on minimal_nilradical(n); for odd n the first
// row is center_row (zero operator on g1 plus a center-valued part).
Operator minimal_nilradical_op(std::size_t n, const std::vector<Matrix> &copies,
                               const Vector &center_row = {});
bool minimal_nilradical_in_form(const Operator &j);

// Exactly Id and -Id on sl2_semidirect_2g1().
std::vector<Operator> sl2_semidirect_ops();

// --- family specifications -----------------------------------------------

struct SemisimpleSpec {
  std::string algebra = "sl2";
  std::vector<int> signs;
};
struct ReductiveSpec {
  std::string algebra = "sl2+g1";
  std::vector<int> signs;
  Matrix center_rows;
};
struct GlnSpec {
  std::size_t n = 2;
  int sign = 1;
  Vector functional;
};
struct HeisenbergSpec {
  std::size_t n = 1;
  Matrix jhat;
  Rational r;
  Vector top_row;
};
struct AlmostAbelianSpec {
  Matrix a;
  AlmostAbelianParams params;
};
struct MinimalNilradicalSpec {
  std::size_t n = 2;
  std::vector<Matrix> copies;
  Vector center_row;
};
struct Sl2SemidirectSpec {
  int sign = 1;
};

using FamilySpec = std::variant<SemisimpleSpec, ReductiveSpec, GlnSpec, HeisenbergSpec,
                                AlmostAbelianSpec, MinimalNilradicalSpec, Sl2SemidirectSpec>;

Operator build(const FamilySpec &spec);

// --- randomized verification ---------------------------------------------

struct FamilyGenerator {
  std::string name;
  LieAlgebraPtr algebra;
  std::function<Operator(Rng &)> sample;          // random in-form operator
  std::function<bool(const Operator &)> in_form;  // membership in the form
};

struct VerificationReport {
  std::string family;
  std::size_t samples = 0;
  std::size_t sound = 0;         // samples that are Lie-orthogonal
  std::size_t perturbations = 0;
  std::size_t rejected = 0;      // perturbations that are not Lie-orthogonal
  std::size_t equivalent = 0;    // Lie-orthogonal but equivalent to an in-form operator
  std::optional<std::string> counterexample;
  bool passed() const {
    return sound == samples && rejected + equivalent == perturbations && !counterexample;
  }
};

// Single random entry change of a sampled operator, retried until it leaves
// the form. Returns nullopt if no such change was found.
std::optional<Operator> perturb_out_of_form(const FamilyGenerator &g, Rng &rng);

VerificationReport verify_family(const FamilyGenerator &g, std::size_t n_samples,
                                 std::size_t n_perturbations, std::uint64_t seed);

// Generators by tag: "semisimple:<algebra>", "reductive:<algebra>", "gl:N",
// "heisenberg:N", "almost-abelian" (needs A), "minimal-nilradical:N",
// "sl2-semidirect".
FamilyGenerator semisimple_family(const std::string &algebra);
FamilyGenerator reductive_family(const std::string &algebra);
FamilyGenerator gln_family(std::size_t n);
FamilyGenerator heisenberg_family(std::size_t n);
FamilyGenerator almost_abelian_family(const Matrix &a);
FamilyGenerator minimal_nilradical_family(std::size_t n);
FamilyGenerator sl2_semidirect_family();
// Block-diagonal samples over the direct sum of the parts' algebras. In form
// when the off-diagonal blocks vanish and every diagonal block is in form.
FamilyGenerator direct_sum_family(const std::vector<FamilyGenerator> &parts);

} // namespace lieortho
