#include "lieortho/subspace.hpp"

#include "lieortho/linalg.hpp"

namespace lieortho {

Subspace::Subspace(std::size_t ambient) : basis_(ambient, 0) {}

Subspace::Subspace(const Matrix &spanning) {
  const auto [r, pivots] = rref(transpose(spanning));
  basis_ = transpose(r.block(0, 0, pivots.size(), r.cols()));
  pivots_ = pivots;
}

Subspace Subspace::whole(std::size_t n) { return Subspace(Matrix::identity(n)); }

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector> &vectors) {
  return Subspace(Matrix::from_columns(ambient, vectors));
}

Subspace Subspace::coordinate_range(std::size_t ambient, std::size_t begin,
                                    std::size_t end) {
  std::vector<Vector> vs;
  for (std::size_t i = begin; i < end; ++i)
    vs.push_back(unit_vector(ambient, i));
  return span(ambient, vs);
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<bool> is_pivot(ambient(), false);
  for (auto p : pivots_)
    is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient(); ++i)
    if (!is_pivot[i])
      out.push_back(i);
  return out;
}

std::optional<Vector> Subspace::coordinates(const Vector &v) const {
  if (v.size() != ambient())
    throw DimensionError("subspace membership: vector length mismatch");
  // The basis is in reduced form, so the only candidate coordinates are the
  // entries of v at the pivot positions.
  Vector c(dim());
  for (std::size_t k = 0; k < dim(); ++k)
    c[k] = v[pivots_[k]];
  if (basis_ * c != v)
    return std::nullopt;
  return c;
}

bool Subspace::contains(const Vector &v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace &other) const {
  if (other.ambient() != ambient())
    throw DimensionError("subspace containment: ambient mismatch");
  for (std::size_t k = 0; k < other.dim(); ++k)
    if (!contains(other.basis_vector(k)))
      return false;
  return true;
}

Subspace sum(const Subspace &a, const Subspace &b) {
  if (a.ambient() != b.ambient())
    throw DimensionError("subspace sum: ambient mismatch");
  return Subspace(hstack(a.basis(), b.basis()));
}

Subspace intersection(const Subspace &a, const Subspace &b) {
  if (a.ambient() != b.ambient())
    throw DimensionError("subspace intersection: ambient mismatch");
  if (a.is_zero() || b.is_zero())
    return Subspace(a.ambient());
  // [A | -B] (x; y) = 0  =>  A x lies in both.
  const Matrix k = nullspace(hstack(a.basis(), -b.basis()));
  return Subspace(a.basis() * k.block(0, 0, a.dim(), k.cols()));
}

Subspace image(const Matrix &m, const Subspace &s) { return Subspace(m * s.basis()); }

Subspace kernel(const Matrix &m) { return Subspace(nullspace(m)); }

Subspace image(const Matrix &m) { return Subspace(m); }

} // namespace lieortho
