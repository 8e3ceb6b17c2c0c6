#pragma once

#include "lieortho/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lieortho {

// A linear subspace of Q^n held in canonical form: the basis columns are the
// transpose of the nonzero rows of rref(spanning^T). Equal subspaces have
// equal bases.
class Subspace {
public:
  explicit Subspace(std::size_t ambient = 0);
  // Span of the columns of `spanning` (which must have `ambient` rows).
  explicit Subspace(const Matrix &spanning);

  static Subspace whole(std::size_t n);
  static Subspace span(std::size_t ambient, const std::vector<Vector> &vectors);
  // Span of the unit vectors e_begin .. e_{end-1}.
  static Subspace coordinate_range(std::size_t ambient, std::size_t begin, std::size_t end);

  std::size_t ambient() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == ambient(); }

  const Matrix &basis() const { return basis_; }
  Vector basis_vector(std::size_t k) const { return basis_.column(k); }
  // Coordinate index where basis vector k has its leading 1.
  const std::vector<std::size_t> &pivots() const { return pivots_; }
  // Coordinates outside the pivot set, ascending.
  std::vector<std::size_t> non_pivots() const;

  bool contains(const Vector &v) const;
  bool contains(const Subspace &other) const;
  // Coordinates of v in this basis, or nullopt if v is not in the subspace.
  std::optional<Vector> coordinates(const Vector &v) const;

  friend bool operator==(const Subspace &, const Subspace &) = default;

private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace &a, const Subspace &b);
Subspace intersection(const Subspace &a, const Subspace &b);
// m(S), the image of S under m.
Subspace image(const Matrix &m, const Subspace &s);
Subspace kernel(const Matrix &m);
Subspace image(const Matrix &m);

} // namespace lieortho
