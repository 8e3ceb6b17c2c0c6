#include "lieortho/lie_algebra.hpp"

#include "lieortho/linalg.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace lieortho {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back("e" + std::to_string(i + 1));
  return names;
}

std::size_t pair_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

} // namespace

LieAlgebra::Builder::Builder(std::size_t dim)
    : dim_(dim), upper_(pair_count(dim), Vector(dim)), names_(default_names(dim)) {}

LieAlgebra::Builder &LieAlgebra::Builder::set(std::size_t i, std::size_t j,
                                              const Vector &value) {
  if (i >= dim_ || j >= dim_)
    throw DimensionError("bracket index out of range");
  if (value.size() != dim_)
    throw DimensionError("bracket value has wrong length");
  if (i == j) {
    if (!is_zero(value))
      throw std::invalid_argument("[e_i, e_i] must vanish");
    return *this;
  }
  const bool swapped = i > j;
  if (swapped)
    std::swap(i, j);
  const std::size_t idx = i * dim_ - i * (i + 1) / 2 + (j - i - 1);
  upper_[idx] = swapped ? scale(Rational(-1), value) : value;
  return *this;
}

LieAlgebra::Builder &LieAlgebra::Builder::set(std::size_t i, std::size_t j, std::size_t k,
                                              const Rational &c) {
  if (k >= dim_)
    throw DimensionError("bracket index out of range");
  if (i == j)
    throw std::invalid_argument("[e_i, e_i] must vanish");
  const std::size_t lo = std::min(i, j), hi = std::max(i, j);
  if (hi >= dim_)
    throw DimensionError("bracket index out of range");
  const std::size_t idx = lo * dim_ - lo * (lo + 1) / 2 + (hi - lo - 1);
  upper_[idx][k] = i < j ? c : -c;
  return *this;
}

LieAlgebra::Builder &LieAlgebra::Builder::names(std::vector<std::string> names) {
  if (names.size() != dim_)
    throw DimensionError("basis name count mismatch");
  names_ = std::move(names);
  return *this;
}

LieAlgebra::Builder &LieAlgebra::Builder::decomposition(Decomposition d) {
  auto check = [&](const std::vector<IndexRange> &rs) {
    for (const auto &r : rs)
      if (r.begin > r.end || r.end > dim_)
        throw DimensionError("decomposition range out of bounds");
  };
  check(d.summands);
  check(d.simple);
  check(d.center);
  check(d.levi);
  check(d.radical);
  decomposition_ = std::move(d);
  return *this;
}

LieAlgebra LieAlgebra::Builder::build() const {
  return LieAlgebra(dim_, upper_, names_, decomposition_);
}

LieAlgebra LieAlgebra::Builder::build_checked() const {
  LieAlgebra L = build();
  const auto report = jacobi_check(L);
  if (!report.ok)
    throw JacobiError(*report.violation);
  return L;
}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<Vector> upper,
                       std::vector<std::string> names, Decomposition decomposition)
    : dim_(dim), upper_(std::move(upper)), names_(std::move(names)),
      decomposition_(std::move(decomposition)) {
  structure_.assign(dim_, Matrix(dim_, dim_));
  ad_.assign(dim_, Matrix(dim_, dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const Vector &v = upper_[pair_index(i, j)];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (v[k].is_zero())
          continue;
        structure_[k](i, j) = v[k];
        structure_[k](j, i) = -v[k];
        ad_[i](k, j) = v[k];
        ad_[j](k, i) = -v[k];
      }
    }
}

std::size_t LieAlgebra::pair_index(std::size_t i, std::size_t j) const {
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

Rational LieAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j)
    return Rational(0);
  if (i < j)
    return upper_[pair_index(i, j)].at(k);
  return -upper_[pair_index(j, i)].at(k);
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_)
    throw DimensionError("basis index out of range");
  if (i == j)
    return Vector(dim_);
  if (i < j)
    return upper_[pair_index(i, j)];
  return scale(Rational(-1), upper_[pair_index(j, i)]);
}

bool LieAlgebra::is_abelian() const {
  for (const auto &v : upper_)
    if (!lieortho::is_zero(v))
      return false;
  return true;
}

JacobiError::JacobiError(const JacobiViolation &v)
    : std::invalid_argument("Jacobi identity fails at (" + std::to_string(v.i + 1) + "," +
                            std::to_string(v.j + 1) + "," + std::to_string(v.k + 1) +
                            ") component " + std::to_string(v.l + 1) + ", residual " +
                            v.residual.str()),
      violation(v) {}

Vector bracket(const LieAlgebra &L, const Vector &x, const Vector &y) {
  const std::size_t n = L.dim();
  if (x.size() != n || y.size() != n)
    throw DimensionError("bracket: vector length mismatch");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero() && y[i].is_zero())
      continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational w = x[i] * y[j] - x[j] * y[i];
      if (w.is_zero())
        continue;
      const Matrix &ad = L.ad(i);
      for (std::size_t k = 0; k < n; ++k)
        if (!ad(k, j).is_zero())
          out[k] += w * ad(k, j);
    }
  }
  return out;
}

JacobiReport jacobi_check(const LieAlgebra &L) {
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        const Vector cyc = bracket(L, L.basis_bracket(i, j), ek) +
                           bracket(L, L.basis_bracket(j, k), ei) +
                           bracket(L, L.basis_bracket(k, i), ej);
        for (std::size_t l = 0; l < n; ++l)
          if (!cyc[l].is_zero())
            return {false, JacobiViolation{i, j, k, l, cyc[l]}};
      }
  return {};
}

Subspace bracket_span(const LieAlgebra &L, const Subspace &a, const Subspace &b) {
  std::vector<Vector> vs;
  for (std::size_t p = 0; p < a.dim(); ++p)
    for (std::size_t q = 0; q < b.dim(); ++q) {
      Vector v = bracket(L, a.basis_vector(p), b.basis_vector(q));
      if (!is_zero(v))
        vs.push_back(std::move(v));
    }
  return Subspace::span(L.dim(), vs);
}

Subspace centralizer(const LieAlgebra &L, const Subspace &s) {
  const std::size_t n = L.dim();
  // [x, s] = sum_i x_i (ad e_i) s, stacked over the basis of S.
  Matrix system(n * s.dim(), n);
  for (std::size_t q = 0; q < s.dim(); ++q) {
    const Vector sv = s.basis_vector(q);
    for (std::size_t i = 0; i < n; ++i) {
      const Vector col = L.ad(i) * sv;
      for (std::size_t k = 0; k < n; ++k)
        system(q * n + k, i) = col[k];
    }
  }
  return kernel(system);
}

Subspace center(const LieAlgebra &L) { return centralizer(L, Subspace::whole(L.dim())); }

Subspace derived_subalgebra(const LieAlgebra &L) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j)
      vs.push_back(L.basis_bracket(i, j));
  return Subspace::span(L.dim(), vs);
}

std::vector<Subspace> derived_series(const LieAlgebra &L, const Subspace &s) {
  std::vector<Subspace> series{s};
  for (std::size_t step = 0; step <= L.dim() && !series.back().is_zero(); ++step) {
    Subspace next = bracket_span(L, series.back(), series.back());
    if (next == series.back())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subspace> derived_series(const LieAlgebra &L) {
  return derived_series(L, Subspace::whole(L.dim()));
}

std::optional<std::size_t> solvability_degree(const LieAlgebra &L, const Subspace &s) {
  const auto series = derived_series(L, s);
  if (!series.back().is_zero())
    return std::nullopt;
  return series.size() - 1;
}

std::optional<std::size_t> solvability_degree(const LieAlgebra &L) {
  return solvability_degree(L, Subspace::whole(L.dim()));
}

std::vector<Subspace> lower_central_series(const LieAlgebra &L, const Subspace &s) {
  std::vector<Subspace> series{s};
  for (std::size_t step = 0; step <= L.dim() && !series.back().is_zero(); ++step) {
    Subspace next = bracket_span(L, s, series.back());
    if (next == series.back())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra &L) {
  return lower_central_series(L, Subspace::whole(L.dim()));
}

std::optional<std::size_t> nilpotency_degree(const LieAlgebra &L, const Subspace &s) {
  const auto series = lower_central_series(L, s);
  if (!series.back().is_zero())
    return std::nullopt;
  return series.size() - 1;
}

std::optional<std::size_t> nilpotency_degree(const LieAlgebra &L) {
  return nilpotency_degree(L, Subspace::whole(L.dim()));
}

std::vector<Subspace> ascending_central_series(const LieAlgebra &L) {
  std::vector<Subspace> series{center(L)};
  for (std::size_t step = 0; step <= L.dim(); ++step) {
    const Subspace &z = series.back();
    const Quotient q = quotient(L, z);
    const Subspace zq = center(q.algebra);
    Subspace next = sum(z, image(q.section, zq));
    if (next == z)
      break;
    series.push_back(std::move(next));
  }
  return series;
}

Matrix killing_form(const LieAlgebra &L) {
  const std::size_t n = L.dim();
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      k(i, j) = trace(L.ad(i) * L.ad(j));
      k(j, i) = k(i, j);
    }
  return k;
}

Subspace radical(const LieAlgebra &L) {
  const Subspace d = derived_subalgebra(L);
  return kernel(transpose(d.basis()) * killing_form(L));
}

bool is_subalgebra(const LieAlgebra &L, const Subspace &s) {
  return s.contains(bracket_span(L, s, s));
}

bool is_ideal(const LieAlgebra &L, const Subspace &s) {
  return s.contains(bracket_span(L, Subspace::whole(L.dim()), s));
}

Quotient quotient(const LieAlgebra &L, const Subspace &ideal) {
  if (ideal.ambient() != L.dim())
    throw DimensionError("quotient: ambient mismatch");
  if (!is_ideal(L, ideal))
    throw std::invalid_argument("quotient: subspace is not an ideal");
  const std::size_t n = L.dim();
  const auto comp = ideal.non_pivots();
  const std::size_t m = comp.size();
  Matrix proj(m, n), sec(n, m);
  for (std::size_t r = 0; r < m; ++r) {
    proj(r, comp[r]) = 1;
    sec(comp[r], r) = 1;
    for (std::size_t k = 0; k < ideal.dim(); ++k)
      proj(r, ideal.pivots()[k]) = -ideal.basis()(comp[r], k);
  }
  LieAlgebra::Builder b(m);
  std::vector<std::string> names;
  for (auto c : comp)
    names.push_back(L.name(c));
  b.names(names);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = a + 1; c < m; ++c)
      b.set(a, c, proj * L.basis_bracket(comp[a], comp[c]));
  return {b.build(), std::move(proj), std::move(sec), comp};
}

LieAlgebra restrict_algebra(const LieAlgebra &L, const Subspace &s) {
  const std::size_t d = s.dim();
  LieAlgebra::Builder b(d);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < d; ++a) {
    const Vector v = s.basis_vector(a);
    const auto p = s.pivots()[a];
    names.push_back(v == unit_vector(L.dim(), p) ? L.name(p) : "s" + std::to_string(a + 1));
  }
  b.names(names);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t c = a + 1; c < d; ++c) {
      const auto coords = s.coordinates(bracket(L, s.basis_vector(a), s.basis_vector(c)));
      if (!coords)
        throw std::invalid_argument("restrict_algebra: subspace is not a subalgebra");
      b.set(a, c, *coords);
    }
  return b.build();
}

LieAlgebra direct_sum(const std::vector<LieAlgebra> &summands) {
  std::size_t n = 0;
  for (const auto &s : summands)
    n += s.dim();
  LieAlgebra::Builder b(n);
  Decomposition d;
  d.semisimple = !summands.empty();
  std::vector<std::string> names;
  std::set<std::string> seen;
  bool collision = false;
  std::size_t offset = 0;
  auto shifted = [&](const std::vector<IndexRange> &rs, std::vector<IndexRange> &out) {
    for (const auto &r : rs)
      out.push_back({r.begin + offset, r.end + offset});
  };
  for (const auto &s : summands) {
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = i + 1; j < s.dim(); ++j) {
        const Vector v = s.basis_bracket(i, j);
        for (std::size_t k = 0; k < s.dim(); ++k)
          if (!v[k].is_zero())
            b.set(offset + i, offset + j, offset + k, v[k]);
      }
    d.summands.push_back({offset, offset + s.dim()});
    const Decomposition &sd = s.decomposition();
    shifted(sd.simple, d.simple);
    shifted(sd.center, d.center);
    shifted(sd.levi, d.levi);
    shifted(sd.radical, d.radical);
    d.semisimple = d.semisimple && sd.semisimple;
    for (const auto &nm : s.names()) {
      collision = collision || !seen.insert(nm).second;
      names.push_back(nm);
    }
    offset += s.dim();
  }
  if (collision) {
    offset = 0;
    for (std::size_t si = 0; si < summands.size(); ++si) {
      for (std::size_t i = 0; i < summands[si].dim(); ++i)
        names[offset + i] += "_" + std::to_string(si + 1);
      offset += summands[si].dim();
    }
  }
  b.names(std::move(names));
  b.decomposition(std::move(d));
  return b.build();
}

bool is_automorphism(const LieAlgebra &L, const Matrix &s) {
  const std::size_t n = L.dim();
  if (s.rows() != n || s.cols() != n)
    throw DimensionError("is_automorphism: matrix size mismatch");
  if (det(s).is_zero())
    return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (s * L.basis_bracket(i, j) != bracket(L, s.column(i), s.column(j)))
        return false;
  return true;
}

} // namespace lieortho
