#pragma once

#include "lieortho/matrix.hpp"
#include "lieortho/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace lieortho {

// Univariate polynomial over Q, coefficients stored lowest degree first.
// Trailing zero coefficients are stripped, so the zero polynomial has no
// coefficients and degree -1.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational &c);
  // t - root
  static Polynomial linear_factor(const Rational &root);

  const std::vector<Rational> &coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(std::size_t k) const;
  Rational leading() const;

  Rational evaluate(const Rational &t) const;
  // Matrix substitution p(m), Horner scheme.
  Matrix evaluate(const Matrix &m) const;

  // Quotient and remainder of division by a nonzero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial &divisor) const;

  std::string str(const std::string &var = "t") const;

  friend bool operator==(const Polynomial &, const Polynomial &) = default;
  friend Polynomial operator+(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator-(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);

private:
  void normalize();
  std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial &p, std::size_t k);

struct RootMultiplicity {
  Rational root;
  std::size_t multiplicity;
  friend bool operator==(const RootMultiplicity &, const RootMultiplicity &) = default;
};

struct RationalRoots {
  // Sorted by decreasing root value.
  std::vector<RootMultiplicity> roots;
  // Cofactor with no rational roots: p = prod (t - r)^k * remainder.
  Polynomial remainder;
};

// All rational roots of a nonzero polynomial, via the rational-root theorem on
// the integer-cleared primitive polynomial. Throws std::invalid_argument on
// the zero polynomial.
RationalRoots rational_roots(const Polynomial &p);

// Prime factorization of |n| (n != 0) as (prime, exponent) pairs, ascending.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class &n);

} // namespace lieortho
