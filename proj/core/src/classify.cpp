#include "lieortho/classify.hpp"

#include "lieortho/catalog.hpp"
#include "lieortho/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace lieortho {

namespace {

void check_sign(int s) {
  if (s != 1 && s != -1)
    throw std::invalid_argument("signs must be +1 or -1, got " + std::to_string(s));
}

// Which declared range (if any) holds coordinate c.
std::vector<int> range_owner(std::size_t n, const std::vector<IndexRange> &ranges) {
  std::vector<int> owner(n, -1);
  for (std::size_t k = 0; k < ranges.size(); ++k)
    for (std::size_t c = ranges[k].begin; c < ranges[k].end; ++c) {
      if (owner[c] != -1)
        throw std::invalid_argument("declared ranges overlap at coordinate " +
                                    std::to_string(c + 1));
      owner[c] = static_cast<int>(k);
    }
  return owner;
}

void require_shape(const Matrix &m, std::size_t rows, std::size_t cols, const char *what) {
  if (m.rows() != rows || m.cols() != cols)
    throw DimensionError(std::string(what) + " must be " + std::to_string(rows) + "x" +
                         std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
}

bool is_signed_identity_block(const Matrix &j, const IndexRange &r, int sign) {
  for (std::size_t a = r.begin; a < r.end; ++a)
    for (std::size_t b = r.begin; b < r.end; ++b)
      if (j(a, b) != Rational(a == b ? sign : 0))
        return false;
  return true;
}

// Rows on `ranges` are +-Id per range and zero outside it.
bool signed_blocks_in_form(const Matrix &j, const std::vector<IndexRange> &ranges) {
  for (const auto &r : ranges) {
    if (!is_signed_identity_block(j, r, 1) && !is_signed_identity_block(j, r, -1))
      return false;
    for (std::size_t a = r.begin; a < r.end; ++a)
      for (std::size_t b = 0; b < j.cols(); ++b)
        if ((b < r.begin || b >= r.end) && !j(a, b).is_zero())
          return false;
  }
  return true;
}

std::vector<int> random_signs(Rng &rng, std::size_t k) {
  std::bernoulli_distribution coin(0.5);
  std::vector<int> s(k);
  for (auto &x : s)
    x = coin(rng) ? 1 : -1;
  return s;
}

Rational random_nonzero(Rng &rng) {
  Rational r;
  while (r.is_zero())
    r = random_integer(rng);
  return r;
}

Vector random_vector(Rng &rng, std::size_t n) {
  Vector v(n);
  for (auto &x : v)
    x = random_integer(rng);
  return v;
}

Vector gln_identity(std::size_t n) {
  Vector v(n * n);
  for (std::size_t i = 0; i < n; ++i)
    v[i * n + i] = 1;
  return v;
}

std::size_t gln_order(std::size_t dim) {
  std::size_t n = 0;
  while (n * n < dim)
    ++n;
  if (n * n != dim || n < 2)
    throw DimensionError("algebra dimension " + std::to_string(dim) + " is not n^2");
  return n;
}

// Projection onto sl_n along <E_n>: X -> X - tr(X)/n E_n.
Matrix gln_traceless_projection(std::size_t n) {
  const Vector e = gln_identity(n);
  Matrix p = Matrix::identity(n * n);
  const Rational inv(1, static_cast<long>(n));
  for (std::size_t a = 0; a < n * n; ++a)
    for (std::size_t b = 0; b < n * n; ++b)
      p(a, b) -= inv * e[a] * e[b];
  return p;
}

} // namespace

Rational random_integer(Rng &rng, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return Rational(d(rng));
}

Matrix random_integer_matrix(Rng &rng, std::size_t rows, std::size_t cols, long lo,
                             long hi) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = random_integer(rng, lo, hi);
  return m;
}

Operator semisimple_op(LieAlgebraPtr L, const std::vector<int> &signs) {
  const auto &simple = L->decomposition().simple;
  if (signs.size() != simple.size())
    throw DimensionError("semisimple_op: " + std::to_string(signs.size()) + " signs for " +
                         std::to_string(simple.size()) + " simple components");
  const auto owner = range_owner(L->dim(), simple);
  for (int o : owner)
    if (o == -1)
      throw std::invalid_argument("semisimple_op: simple components do not cover the algebra");
  Matrix j(L->dim(), L->dim());
  for (std::size_t c = 0; c < L->dim(); ++c) {
    check_sign(signs[owner[c]]);
    j(c, c) = signs[owner[c]];
  }
  return Operator(std::move(L), std::move(j));
}

Operator reductive_op(LieAlgebraPtr L, const std::vector<int> &signs,
                      const Matrix &center_rows) {
  const Decomposition &d = L->decomposition();
  const std::size_t n = L->dim();
  if (signs.size() != d.simple.size())
    throw DimensionError("reductive_op: " + std::to_string(signs.size()) + " signs for " +
                         std::to_string(d.simple.size()) + " simple components");
  const auto simple_owner = range_owner(n, d.simple);
  const auto center_owner = range_owner(n, d.center);
  std::vector<std::size_t> center_coords;
  for (std::size_t c = 0; c < n; ++c) {
    if ((simple_owner[c] == -1) == (center_owner[c] == -1))
      throw std::invalid_argument(
          "reductive_op: simple and center ranges must partition the basis");
    if (center_owner[c] != -1)
      center_coords.push_back(c);
  }
  require_shape(center_rows, center_coords.size(), n, "reductive_op: center rows");
  Matrix j(n, n);
  for (std::size_t c = 0; c < n; ++c)
    if (simple_owner[c] != -1) {
      check_sign(signs[simple_owner[c]]);
      j(c, c) = signs[simple_owner[c]];
    }
  for (std::size_t r = 0; r < center_coords.size(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      j(center_coords[r], c) = center_rows(r, c);
  return Operator(std::move(L), std::move(j));
}

Operator gln_op(LieAlgebraPtr L, int sign, const Vector &f) {
  check_sign(sign);
  const std::size_t n = gln_order(L->dim());
  if (f.size() != n * n)
    throw DimensionError("gln_op: functional must have n^2 entries");
  Matrix j = Rational(sign) * gln_traceless_projection(n);
  const Vector e = gln_identity(n);
  for (std::size_t a = 0; a < n * n; ++a)
    for (std::size_t b = 0; b < n * n; ++b)
      j(a, b) += e[a] * f[b];
  return Operator(std::move(L), std::move(j));
}

bool gln_in_form(const Operator &j) {
  const std::size_t n = gln_order(j.dim());
  const Matrix m = gln_traceless_projection(n) * canonicalize(j).matrix();
  std::vector<Vector> traceless;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b)
        traceless.push_back(unit_vector(n * n, a * n + b));
  for (std::size_t a = 0; a + 1 < n; ++a)
    traceless.push_back(unit_vector(n * n, a * n + a) -
                        unit_vector(n * n, (a + 1) * n + a + 1));
  for (int sign : {1, -1}) {
    bool ok = true;
    for (const auto &x : traceless)
      if (m * x != scale(Rational(sign), x)) {
        ok = false;
        break;
      }
    if (ok)
      return true;
  }
  return false;
}

Matrix symplectic_form(std::size_t n) {
  Matrix s(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    s(i, n + i) = -1;
    s(n + i, i) = 1;
  }
  return s;
}

bool is_symplectic(const Matrix &m) {
  if (!m.is_square() || m.rows() % 2 != 0)
    throw DimensionError("is_symplectic: matrix must be square of even size");
  const Matrix s = symplectic_form(m.rows() / 2);
  return transpose(m) * s * m == s;
}

Matrix random_symplectic(std::size_t n, Rng &rng, std::size_t steps) {
  if (steps == 0)
    throw std::invalid_argument("random_symplectic: steps must be at least 1");
  const Matrix s = symplectic_form(n);
  const Matrix e = Matrix::identity(n);
  auto symmetric = [&]() {
    Matrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i; k < n; ++k)
        b(i, k) = b(k, i) = random_integer(rng);
    return b;
  };
  std::uniform_int_distribution<int> kind(0, 3);
  Matrix m = Matrix::identity(2 * n);
  for (std::size_t step = 0; step < steps; ++step) {
    Matrix f;
    switch (kind(rng)) {
    case 0: { // transvection x -> x + c w(v, x) v
      const Vector v = random_vector(rng, 2 * n);
      const Rational c = random_integer(rng, 0, 1) * 2 - 1;
      const Matrix col = Matrix::column_vector(v);
      f = Matrix::identity(2 * n) + c * (col * transpose(col) * s);
      break;
    }
    case 1:
      f = block_compose({{e, symmetric()}, {Matrix(n, n), e}});
      break;
    case 2:
      f = block_compose({{e, Matrix(n, n)}, {symmetric(), e}});
      break;
    default: { // diag(A^{-T}, A) with A unimodular
      Matrix lower = Matrix::identity(n), upper = Matrix::identity(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < i; ++k) {
          lower(i, k) = random_integer(rng);
          upper(k, i) = random_integer(rng);
        }
      const Matrix a = lower * upper;
      f = block_diagonal({transpose(inverse(a)), a});
      break;
    }
    }
    m = m * f;
  }
  return m;
}

Matrix random_symplectic(std::size_t n, std::uint64_t seed, std::size_t steps) {
  Rng rng(seed);
  return random_symplectic(n, rng, steps);
}

Operator heisenberg_op(std::size_t n, const Matrix &jhat, const Rational &r,
                       const Vector &top_row) {
  require_shape(jhat, 2 * n, 2 * n, "heisenberg_op: Jhat");
  if (top_row.size() != 2 * n)
    throw DimensionError("heisenberg_op: R must have 2n entries");
  if (!is_symplectic(jhat))
    throw std::invalid_argument("heisenberg_op: Jhat is not symplectic");
  Matrix j(2 * n + 1, 2 * n + 1);
  j(0, 0) = r;
  for (std::size_t c = 0; c < 2 * n; ++c)
    j(0, c + 1) = top_row[c];
  j.set_block(1, 1, jhat);
  return Operator(catalog::heisenberg(n).share(), std::move(j));
}

bool heisenberg_in_form(const Operator &j) {
  const std::size_t dim = j.dim();
  if (dim % 2 == 0)
    throw DimensionError("heisenberg_in_form: dimension must be odd");
  const Matrix &m = j.matrix();
  for (std::size_t i = 1; i < dim; ++i)
    if (!m(i, 0).is_zero())
      return false;
  return is_symplectic(m.block(1, 1, dim - 1, dim - 1));
}

Matrix almost_abelian_matrix(const LieAlgebra &L) {
  const std::size_t n = L.dim();
  if (n < 2)
    throw std::invalid_argument("almost abelian algebra needs dimension >= 2");
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j + 1 < n; ++j)
      if (!is_zero(L.basis_bracket(i, j)))
        throw std::invalid_argument("<e1..e_{n-1}> is not abelian");
  Matrix a(n - 1, n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    if (!L.constant(n - 1, j, n - 1).is_zero())
      throw std::invalid_argument("<e1..e_{n-1}> is not an ideal");
    for (std::size_t i = 0; i + 1 < n; ++i)
      a(i, j) = L.constant(n - 1, j, i);
  }
  return a;
}

std::size_t normal_layout_center_dim(const Matrix &a) {
  std::size_t m = 0;
  while (m < a.cols() && is_zero(a.column(m)))
    ++m;
  if (m == a.cols())
    throw std::invalid_argument("A = 0: the algebra is abelian");
  if (rank(a) != a.rows() - m)
    throw std::invalid_argument("A is not in normal layout: the zero columns must come "
                                "first and span the kernel");
  return m;
}

NormalLayout to_normal_layout(const Matrix &a) {
  if (!a.is_square())
    throw DimensionError("to_normal_layout: A must be square");
  const Subspace k = kernel(a);
  std::vector<bool> in_kernel(a.cols(), false);
  for (std::size_t b = 0; b < k.dim(); ++b) {
    const Vector v = k.basis_vector(b);
    if (v != unit_vector(a.cols(), k.pivots()[b]))
      throw std::invalid_argument(
          "to_normal_layout: ker A is not spanned by basis vectors; no coordinate "
          "permutation reaches the normal layout");
    in_kernel[k.pivots()[b]] = true;
  }
  NormalLayout out;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (in_kernel[c])
      out.order.push_back(c);
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!in_kernel[c])
      out.order.push_back(c);
  Matrix p(a.rows(), a.cols());
  for (std::size_t c = 0; c < out.order.size(); ++c)
    p(out.order[c], c) = 1;
  out.a = transpose(p) * a * p;
  return out;
}

Operator almost_abelian_op(LieAlgebraPtr L, const AlmostAbelianParams &params) {
  const Matrix a = almost_abelian_matrix(*L);
  const std::size_t m = normal_layout_center_dim(a);
  const std::size_t n = L->dim();
  Matrix j(n, n);
  if (const auto *p = std::get_if<AlmostAbelianCase1>(&params)) {
    if (m + 2 >= n)
      throw std::invalid_argument("almost_abelian_op: case 1 needs dim Z < n - 2");
    if (p->mu.is_zero())
      throw std::invalid_argument("almost_abelian_op: mu must be nonzero");
    const std::size_t k = n - m - 1;
    require_shape(p->b0, m, m, "B0");
    require_shape(p->b1, m, k, "B1");
    require_shape(p->b2, m, 1, "B2");
    require_shape(p->b3, k, 1, "B3");
    j.set_block(0, 0, p->b0);
    j.set_block(0, m, p->b1);
    j.set_block(0, n - 1, p->b2);
    j.set_block(m, m, p->mu * Matrix::identity(k));
    j.set_block(m, n - 1, p->b3);
    j(n - 1, n - 1) = inverse(p->mu);
  } else {
    const auto &q = std::get<AlmostAbelianCase2>(params);
    if (m + 2 != n)
      throw std::invalid_argument("almost_abelian_op: case 2 needs dim Z = n - 2");
    require_shape(q.b0, n - 2, n - 2, "B0");
    require_shape(q.b1, n - 2, 2, "B1");
    require_shape(q.c, 2, 2, "C");
    if (det(q.c) != Rational(1))
      throw std::invalid_argument("almost_abelian_op: det C must be 1");
    j.set_block(0, 0, q.b0);
    j.set_block(0, n - 2, q.b1);
    j.set_block(n - 2, n - 2, q.c);
  }
  return Operator(std::move(L), std::move(j));
}

bool almost_abelian_in_form(const Operator &j) {
  const std::size_t m = normal_layout_center_dim(almost_abelian_matrix(j.algebra()));
  const std::size_t n = j.dim();
  const Matrix &x = j.matrix();
  if (m + 2 == n) {
    for (std::size_t r = n - 2; r < n; ++r)
      for (std::size_t c = 0; c < n - 2; ++c)
        if (!x(r, c).is_zero())
          return false;
    return det(x.block(n - 2, n - 2, 2, 2)) == Rational(1);
  }
  const Rational mu = x(m, m);
  if (mu.is_zero())
    return false;
  for (std::size_t r = m; r + 1 < n; ++r)
    for (std::size_t c = 0; c + 1 < n; ++c)
      if (x(r, c) != (r == c ? mu : Rational(0)))
        return false;
  for (std::size_t c = 0; c + 1 < n; ++c)
    if (!x(n - 1, c).is_zero())
      return false;
  return x(n - 1, n - 1) == inverse(mu);
}

Operator minimal_nilradical_op(std::size_t n, const std::vector<Matrix> &copies,
                               const Vector &center_row) {
  auto L = catalog::minimal_nilradical(n).share();
  const std::size_t offset = n % 2;
  if (copies.size() != n / 2)
    throw DimensionError("minimal_nilradical_op: expected " + std::to_string(n / 2) +
                         " copies");
  Matrix j(n, n);
  for (std::size_t k = 0; k < copies.size(); ++k) {
    require_shape(copies[k], 2, 2, "copy");
    if (det(copies[k]) != Rational(1))
      throw std::invalid_argument("minimal_nilradical_op: copy " + std::to_string(k + 1) +
                                  " has determinant " + det(copies[k]).str());
    j.set_block(offset + 2 * k, offset + 2 * k, copies[k]);
  }
  if (offset == 0 && !center_row.empty())
    throw std::invalid_argument("minimal_nilradical_op: even n has no center");
  if (offset == 1 && !center_row.empty()) {
    if (center_row.size() != n)
      throw DimensionError("minimal_nilradical_op: center row must have n entries");
    for (std::size_t c = 0; c < n; ++c)
      j(0, c) = center_row[c];
  }
  return Operator(std::move(L), std::move(j));
}

bool minimal_nilradical_in_form(const Operator &j) {
  const std::size_t n = j.dim();
  const std::size_t offset = n % 2;
  const Matrix &x = j.matrix();
  for (std::size_t r = offset; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const bool same_copy = c >= offset && (r - offset) / 2 == (c - offset) / 2;
      if (!same_copy && !x(r, c).is_zero())
        return false;
    }
  for (std::size_t k = offset; k < n; k += 2)
    if (det(x.block(k, k, 2, 2)) != Rational(1))
      return false;
  return true;
}

std::vector<Operator> sl2_semidirect_ops() {
  auto L = catalog::sl2_semidirect_2g1().share();
  return {Operator::identity(L), Operator(L, -Matrix::identity(5))};
}

Operator build(const FamilySpec &spec) {
  struct Visitor {
    Operator operator()(const SemisimpleSpec &s) const {
      return semisimple_op(catalog::by_name(s.algebra).share(), s.signs);
    }
    Operator operator()(const ReductiveSpec &s) const {
      return reductive_op(catalog::by_name(s.algebra).share(), s.signs, s.center_rows);
    }
    Operator operator()(const GlnSpec &s) const {
      return gln_op(catalog::gln(s.n).share(), s.sign, s.functional);
    }
    Operator operator()(const HeisenbergSpec &s) const {
      return heisenberg_op(s.n, s.jhat, s.r, s.top_row);
    }
    Operator operator()(const AlmostAbelianSpec &s) const {
      return almost_abelian_op(catalog::almost_abelian(s.a).share(), s.params);
    }
    Operator operator()(const MinimalNilradicalSpec &s) const {
      return minimal_nilradical_op(s.n, s.copies, s.center_row);
    }
    Operator operator()(const Sl2SemidirectSpec &s) const {
      check_sign(s.sign);
      return sl2_semidirect_ops()[s.sign == 1 ? 0 : 1];
    }
  };
  return std::visit(Visitor{}, spec);
}

std::optional<Operator> perturb_out_of_form(const FamilyGenerator &g, Rng &rng) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    const Operator base = g.sample(rng);
    const std::size_t n = base.dim();
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    const std::size_t r = idx(rng), c = idx(rng);
    Matrix m = base.matrix();
    m(r, c) += random_nonzero(rng);
    Operator p(base.algebra_ptr(), std::move(m));
    if (!g.in_form(p))
      return p;
  }
  return std::nullopt;
}

VerificationReport verify_family(const FamilyGenerator &g, std::size_t n_samples,
                                 std::size_t n_perturbations, std::uint64_t seed) {
  Rng rng(seed);
  VerificationReport rep;
  rep.family = g.name;
  for (std::size_t s = 0; s < n_samples; ++s) {
    const Operator j = g.sample(rng);
    ++rep.samples;
    if (is_lie_orthogonal(j))
      ++rep.sound;
    else if (!rep.counterexample) {
      std::ostringstream os;
      os << "sample " << s + 1 << " is not Lie-orthogonal:\n" << j.matrix();
      rep.counterexample = os.str();
    }
  }
  for (std::size_t s = 0; s < n_perturbations; ++s) {
    auto p = perturb_out_of_form(g, rng);
    ++rep.perturbations;
    if (!p) {
      if (!rep.counterexample)
        rep.counterexample = "perturbation " + std::to_string(s + 1) +
                             ": no single-entry change leaves the form";
      continue;
    }
    if (!is_lie_orthogonal(*p))
      ++rep.rejected;
    else if (g.in_form(canonicalize(*p)))
      ++rep.equivalent;
    else if (!rep.counterexample) {
      std::ostringstream os;
      os << "perturbation " << s + 1
         << " is Lie-orthogonal but outside the classified form:\n"
         << p->matrix();
      rep.counterexample = os.str();
    }
  }
  return rep;
}

FamilyGenerator semisimple_family(const std::string &algebra) {
  auto L = catalog::by_name(algebra).share();
  const auto simple = L->decomposition().simple;
  FamilyGenerator g;
  g.name = "semisimple:" + algebra;
  g.algebra = L;
  g.sample = [L, k = simple.size()](Rng &rng) { return semisimple_op(L, random_signs(rng, k)); };
  g.in_form = [simple](const Operator &j) {
    return signed_blocks_in_form(j.matrix(), simple);
  };
  return g;
}

FamilyGenerator reductive_family(const std::string &algebra) {
  auto L = catalog::by_name(algebra).share();
  const Decomposition d = L->decomposition();
  std::size_t zdim = 0;
  for (const auto &r : d.center)
    zdim += r.size();
  FamilyGenerator g;
  g.name = "reductive:" + algebra;
  g.algebra = L;
  g.sample = [L, k = d.simple.size(), zdim](Rng &rng) {
    return reductive_op(L, random_signs(rng, k), random_integer_matrix(rng, zdim, L->dim()));
  };
  g.in_form = [simple = d.simple](const Operator &j) {
    return signed_blocks_in_form(j.matrix(), simple);
  };
  return g;
}

FamilyGenerator gln_family(std::size_t n) {
  auto L = catalog::gln(n).share();
  FamilyGenerator g;
  g.name = "gl:" + std::to_string(n);
  g.algebra = L;
  g.sample = [L, n](Rng &rng) {
    return gln_op(L, random_signs(rng, 1)[0], random_vector(rng, n * n));
  };
  g.in_form = gln_in_form;
  return g;
}

FamilyGenerator heisenberg_family(std::size_t n) {
  FamilyGenerator g;
  g.name = "heisenberg:" + std::to_string(n);
  g.algebra = catalog::heisenberg(n).share();
  g.sample = [n](Rng &rng) {
    std::uniform_int_distribution<std::size_t> steps(1, 4);
    const Matrix jhat = random_symplectic(n, rng, steps(rng));
    const Rational r = random_integer(rng);
    return heisenberg_op(n, jhat, r, random_vector(rng, 2 * n));
  };
  g.in_form = heisenberg_in_form;
  return g;
}

FamilyGenerator almost_abelian_family(const Matrix &a) {
  auto L = catalog::almost_abelian(a).share();
  const std::size_t m = normal_layout_center_dim(a);
  const std::size_t n = L->dim();
  FamilyGenerator g;
  g.name = "almost-abelian";
  g.algebra = L;
  g.sample = [L, m, n](Rng &rng) {
    if (m + 2 == n) {
      AlmostAbelianCase2 p{random_integer_matrix(rng, n - 2, n - 2),
                           random_integer_matrix(rng, n - 2, 2), random_symplectic(1, rng)};
      return almost_abelian_op(L, p);
    }
    const std::size_t k = n - m - 1;
    AlmostAbelianCase1 p{random_integer_matrix(rng, m, m), random_integer_matrix(rng, m, k),
                         random_integer_matrix(rng, m, 1), random_integer_matrix(rng, k, 1),
                         random_nonzero(rng)};
    return almost_abelian_op(L, p);
  };
  g.in_form = almost_abelian_in_form;
  return g;
}

FamilyGenerator minimal_nilradical_family(std::size_t n) {
  FamilyGenerator g;
  g.name = "minimal-nilradical:" + std::to_string(n);
  g.algebra = catalog::minimal_nilradical(n).share();
  g.sample = [n](Rng &rng) {
    std::vector<Matrix> copies;
    for (std::size_t k = 0; k < n / 2; ++k)
      copies.push_back(random_symplectic(1, rng));
    Vector row;
    if (n % 2 == 1)
      row = random_vector(rng, n);
    return minimal_nilradical_op(n, copies, row);
  };
  g.in_form = minimal_nilradical_in_form;
  return g;
}

FamilyGenerator sl2_semidirect_family() {
  const auto ops = sl2_semidirect_ops();
  FamilyGenerator g;
  g.name = "sl2-semidirect";
  g.algebra = ops[0].algebra_ptr();
  g.sample = [ops](Rng &rng) { return ops[random_signs(rng, 1)[0] == 1 ? 0 : 1]; };
  g.in_form = [ops](const Operator &j) {
    return j.matrix() == ops[0].matrix() || j.matrix() == ops[1].matrix();
  };
  return g;
}

FamilyGenerator direct_sum_family(const std::vector<FamilyGenerator> &parts) {
  std::vector<LieAlgebra> algebras;
  std::string name;
  for (const auto &p : parts) {
    algebras.push_back(*p.algebra);
    name += (name.empty() ? "" : "+") + p.name;
  }
  auto L = direct_sum(algebras).share();
  FamilyGenerator g;
  g.name = name;
  g.algebra = L;
  g.sample = [L, parts](Rng &rng) {
    std::vector<Operator> blocks;
    for (const auto &p : parts)
      blocks.push_back(p.sample(rng));
    return direct_sum_operator(blocks, L);
  };
  g.in_form = [parts](const Operator &j) {
    const auto &summands = j.algebra().decomposition().summands;
    const Matrix &x = j.matrix();
    for (std::size_t a = 0; a < summands.size(); ++a)
      for (std::size_t b = 0; b < summands.size(); ++b)
        if (a != b &&
            !x.block(summands[a].begin, summands[b].begin, summands[a].size(),
                     summands[b].size())
                 .is_zero())
          return false;
    for (std::size_t a = 0; a < summands.size(); ++a) {
      const auto &s = summands[a];
      if (!parts[a].in_form(
              Operator(parts[a].algebra, x.block(s.begin, s.begin, s.size(), s.size()))))
        return false;
    }
    return true;
  };
  return g;
}

} // namespace lieortho
