#include "lieortho/ortho.hpp"

#include "lieortho/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace lieortho {

namespace {

std::string vec_str(const Vector &v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

Check pass(std::string name, std::string detail = {}) {
  return {std::move(name), Verdict::pass, std::move(detail), std::nullopt};
}

Check fail(std::string name, std::string detail, Vector a, Vector b) {
  return {std::move(name), Verdict::fail, std::move(detail),
          std::make_pair(std::move(a), std::move(b))};
}

Check inapplicable(std::string name, std::string detail) {
  return {std::move(name), Verdict::inapplicable, std::move(detail), std::nullopt};
}

// First basis vector x of S with J x outside S.
std::optional<Vector> invariance_witness(const Matrix &j, const Subspace &s) {
  for (std::size_t k = 0; k < s.dim(); ++k) {
    const Vector x = s.basis_vector(k);
    if (!s.contains(j * x))
      return x;
  }
  return std::nullopt;
}

Check invariant_subspace_check(const std::string &name, const Matrix &j,
                               const Subspace &s, const std::string &what) {
  if (auto x = invariance_witness(j, s))
    return fail(name, what + " is not J-invariant", *x, j * *x);
  return pass(name, what + " (dim " + std::to_string(s.dim()) + ") is J-invariant");
}

// First pair of basis vectors a of A, b of B with [a, b] != 0.
std::optional<std::pair<Vector, Vector>> noncommuting_pair(const LieAlgebra &L,
                                                           const Subspace &a,
                                                           const Subspace &b) {
  for (std::size_t p = 0; p < a.dim(); ++p)
    for (std::size_t q = 0; q < b.dim(); ++q) {
      const Vector x = a.basis_vector(p), y = b.basis_vector(q);
      if (!is_zero(bracket(L, x, y)))
        return std::make_pair(x, y);
    }
  return std::nullopt;
}

Matrix subtract_identity(const Matrix &m) { return m - Matrix::identity(m.rows()); }

} // namespace

Operator::Operator(LieAlgebraPtr algebra, Matrix matrix)
    : algebra_(std::move(algebra)), matrix_(std::move(matrix)) {
  if (!algebra_)
    throw std::invalid_argument("operator without algebra");
  if (matrix_.rows() != algebra_->dim() || matrix_.cols() != algebra_->dim())
    throw DimensionError("operator matrix size " + std::to_string(matrix_.rows()) + "x" +
                         std::to_string(matrix_.cols()) + " does not match algebra dimension " +
                         std::to_string(algebra_->dim()));
}

Operator Operator::identity(LieAlgebraPtr algebra) {
  const auto n = algebra->dim();
  return Operator(std::move(algebra), Matrix::identity(n));
}

std::vector<Matrix> residuals(const Operator &j) {
  const LieAlgebra &L = j.algebra();
  const Matrix jt = transpose(j.matrix());
  std::vector<Matrix> out;
  out.reserve(L.dim());
  for (std::size_t k = 0; k < L.dim(); ++k)
    out.push_back(jt * L.structure_matrix(k) * j.matrix() - L.structure_matrix(k));
  return out;
}

bool is_lie_orthogonal(const Operator &j) {
  for (const auto &r : residuals(j))
    if (!r.is_zero())
      return false;
  return true;
}

std::optional<OrthogonalityViolation> first_violation(const Operator &j) {
  const LieAlgebra &L = j.algebra();
  for (std::size_t a = 0; a < L.dim(); ++a)
    for (std::size_t b = a + 1; b < L.dim(); ++b) {
      Vector expected = L.basis_bracket(a, b);
      Vector actual = bracket(L, j.matrix().column(a), j.matrix().column(b));
      if (expected != actual)
        return OrthogonalityViolation{a, b, std::move(expected), std::move(actual)};
    }
  return std::nullopt;
}

std::vector<OrthogonalityViolation> violations(const Operator &j) {
  const LieAlgebra &L = j.algebra();
  std::vector<OrthogonalityViolation> out;
  for (std::size_t a = 0; a < L.dim(); ++a)
    for (std::size_t b = a + 1; b < L.dim(); ++b) {
      Vector expected = L.basis_bracket(a, b);
      Vector actual = bracket(L, j.matrix().column(a), j.matrix().column(b));
      if (expected != actual)
        out.push_back({a, b, std::move(expected), std::move(actual)});
    }
  return out;
}

Operator negate(const Operator &j) { return Operator(j.algebra_ptr(), -j.matrix()); }

Operator compose(const Operator &a, const Operator &b) {
  if (a.dim() != b.dim())
    throw DimensionError("compose: operators on different algebras");
  return Operator(a.algebra_ptr(), a.matrix() * b.matrix());
}

Operator invert(const Operator &j) { return Operator(j.algebra_ptr(), inverse(j.matrix())); }

Operator restrict(const Operator &j, const Subspace &s) {
  const LieAlgebra &L = j.algebra();
  if (s.ambient() != L.dim())
    throw DimensionError("restrict: ambient mismatch");
  if (invariance_witness(j.matrix(), s))
    throw std::invalid_argument("restrict: subspace is not J-invariant");
  if (!is_subalgebra(L, s))
    throw std::invalid_argument("restrict: subspace is not a subalgebra");
  Matrix m(s.dim(), s.dim());
  for (std::size_t a = 0; a < s.dim(); ++a)
    m.set_column(a, *s.coordinates(j.apply(s.basis_vector(a))));
  return Operator(restrict_algebra(L, s).share(), std::move(m));
}

Operator conjugate(const Operator &j, const Matrix &s) {
  if (!is_automorphism(j.algebra(), s))
    throw std::invalid_argument("conjugate: matrix is not an automorphism");
  return Operator(j.algebra_ptr(), inverse(s) * j.matrix() * s);
}

bool are_equivalent(const Operator &a, const Operator &b) {
  if (a.dim() != b.dim())
    throw DimensionError("are_equivalent: operators on different algebras");
  const Subspace z = center(a.algebra());
  const Matrix diff = a.matrix() - b.matrix();
  for (std::size_t c = 0; c < diff.cols(); ++c)
    if (!z.contains(diff.column(c)))
      return false;
  return true;
}

Matrix adapted_basis(const LieAlgebra &L) {
  const Subspace z = center(L);
  const auto comp = z.non_pivots();
  Matrix t(L.dim(), L.dim());
  t.set_block(0, 0, z.basis());
  for (std::size_t r = 0; r < comp.size(); ++r)
    t(comp[r], z.dim() + r) = 1;
  return t;
}

Operator canonicalize(const Operator &j) {
  const std::size_t k = center(j.algebra()).dim();
  if (k == 0)
    return j;
  const Matrix t = adapted_basis(j.algebra());
  const Matrix tinv = inverse(t);
  Matrix a = tinv * j.matrix() * t;
  const std::size_t n = j.dim();
  a.set_block(0, 0, Matrix::identity(k));
  a.set_block(0, k, Matrix(k, n - k));
  return Operator(j.algebra_ptr(), t * a * tinv);
}

Matrix essential_block(const Operator &j) {
  const std::size_t k = center(j.algebra()).dim();
  const Matrix t = adapted_basis(j.algebra());
  const Matrix a = inverse(t) * j.matrix() * t;
  return a.block(k, k, j.dim() - k, j.dim() - k);
}

OperatorClass::OperatorClass(const Operator &j) : rep_(canonicalize(j)) {}

OperatorClass OperatorClass::identity(LieAlgebraPtr algebra) {
  return OperatorClass(Operator::identity(std::move(algebra)));
}

OperatorClass class_compose(const OperatorClass &a, const OperatorClass &b) {
  return OperatorClass(compose(a.representative(), b.representative()));
}

OperatorClass class_invert(const OperatorClass &a) {
  try {
    return OperatorClass(invert(a.representative()));
  } catch (const SingularMatrixError &) {
    throw SingularMatrixError(
        "class_invert: essential block is singular; the operator is not Lie-orthogonal");
  }
}

Fitting fitting(const Operator &j) {
  const Matrix p = power(j.matrix(), j.dim());
  return {kernel(p), image(p)};
}

Spectrum rational_spectrum(const Operator &j) {
  Spectrum s;
  s.characteristic = char_poly(j.matrix());
  auto roots = rational_roots(s.characteristic);
  std::size_t total = 0;
  for (const auto &r : roots.roots)
    total += r.multiplicity;
  s.eigenvalues = std::move(roots.roots);
  s.splits = total == j.dim();
  return s;
}

Subspace generalized_eigenspace(const Operator &j, const Rational &lambda) {
  const std::size_t n = j.dim();
  return kernel(power(j.matrix() - lambda * Matrix::identity(n), n));
}

LambdaIdeal ideal_i_lambda(const Operator &j, const Rational &lambda) {
  if (lambda.is_zero())
    throw std::invalid_argument("ideal_i_lambda: lambda = 0 (I_0 is the center)");
  std::vector<Subspace> pieces{generalized_eigenspace(j, lambda)};
  if (lambda != Rational(1) && lambda != Rational(-1))
    pieces.push_back(generalized_eigenspace(j, inverse(lambda)));
  pieces.push_back(center(j.algebra()));
  Subspace total(j.dim());
  std::size_t dims = 0;
  for (const auto &p : pieces) {
    total = sum(total, p);
    dims += p.dim();
  }
  return {total, dims - total.dim()};
}

FactorOperator factor_operator(const Operator &j, const Subspace &ideal) {
  const LieAlgebra &L = j.algebra();
  if (!is_ideal(L, ideal))
    throw std::invalid_argument("factor_operator: subspace is not an ideal");
  if (invariance_witness(j.matrix(), ideal))
    throw std::invalid_argument("factor_operator: ideal is not J-invariant");
  Quotient q = quotient(L, ideal);
  Matrix m = q.projection * j.matrix() * q.section;
  auto algebra = q.algebra.share();
  return {std::move(q), Operator(std::move(algebra), std::move(m))};
}

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::pass:
    return "pass";
  case Verdict::fail:
    return "FAIL";
  case Verdict::inapplicable:
    return "n/a";
  }
  return "?";
}

bool InvarianceReport::all_passed() const {
  for (const auto &c : checks)
    if (c.verdict == Verdict::fail)
      return false;
  for (const auto &c : automorphism.checks)
    if (c.verdict == Verdict::fail)
      return false;
  return true;
}

const Check *InvarianceReport::find(const std::string &name) const {
  for (const auto &c : checks)
    if (c.name == name)
      return &c;
  for (const auto &c : automorphism.checks)
    if (c.name == name)
      return &c;
  return nullptr;
}

NotLieOrthogonalError::NotLieOrthogonalError(const OrthogonalityViolation &v)
    : std::invalid_argument("operator is not Lie-orthogonal: [J e" + std::to_string(v.i + 1) +
                            ", J e" + std::to_string(v.j + 1) + "] = " + vec_str(v.actual) +
                            " but [e" + std::to_string(v.i + 1) + ", e" +
                            std::to_string(v.j + 1) + "] = " + vec_str(v.expected)),
      violation(v) {}

namespace {

Check zero_eigenspace_check(const Operator &j, const Subspace &z, const Subspace &l0) {
  const LieAlgebra &L = j.algebra();
  for (std::size_t k = 0; k < l0.dim(); ++k) {
    const Vector x = l0.basis_vector(k);
    if (z.contains(x))
      continue;
    for (std::size_t i = 0; i < L.dim(); ++i) {
      const Vector e = unit_vector(L.dim(), i);
      if (!is_zero(bracket(L, x, e)))
        return fail("zero_eigenspace_in_center", "L0 contains a non-central vector", x, e);
    }
  }
  return pass("zero_eigenspace_in_center",
              "L0 (dim " + std::to_string(l0.dim()) + ") lies in the center");
}

Check ascending_series_check(const Operator &j) {
  const auto series = ascending_central_series(j.algebra());
  for (std::size_t t = 0; t < series.size(); ++t)
    if (auto x = invariance_witness(j.matrix(), series[t]))
      return fail("ascending_series_invariant",
                  "term Z_" + std::to_string(t + 1) + " is not J-invariant", *x,
                  j.apply(*x));
  return pass("ascending_series_invariant",
              std::to_string(series.size()) + " terms, all J-invariant");
}

Check eigenspace_commutation_check(const Operator &j, const Spectrum &spec) {
  const LieAlgebra &L = j.algebra();
  std::vector<Subspace> spaces;
  for (const auto &ev : spec.eigenvalues)
    spaces.push_back(generalized_eigenspace(j, ev.root));
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < spaces.size(); ++a)
    for (std::size_t b = a; b < spaces.size(); ++b) {
      const Rational &la = spec.eigenvalues[a].root, &lb = spec.eigenvalues[b].root;
      if (la * lb == Rational(1))
        continue;
      ++pairs;
      if (auto w = noncommuting_pair(L, spaces[a], spaces[b]))
        return fail("eigenspace_commutation",
                    "[L_" + la.str() + ", L_" + lb.str() + "] != 0", w->first, w->second);
    }
  if (!spec.splits)
    return inapplicable("eigenspace_commutation",
                        "inapplicable (irrational spectrum); rational part: " +
                            std::to_string(pairs) + " pairs commute");
  return pass("eigenspace_commutation", std::to_string(pairs) + " eigenvalue pairs commute");
}

Check lambda_ideal_check(const Operator &j, const Spectrum &spec) {
  const LieAlgebra &L = j.algebra();
  std::size_t count = 0;
  for (const auto &ev : spec.eigenvalues) {
    if (ev.root.is_zero())
      continue;
    ++count;
    const Subspace ideal = ideal_i_lambda(j, ev.root).space;
    const Subspace image = bracket_span(L, Subspace::whole(L.dim()), ideal);
    if (!ideal.contains(image)) {
      for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t k = 0; k < ideal.dim(); ++k) {
          const Vector e = unit_vector(L.dim(), i), x = ideal.basis_vector(k);
          if (!ideal.contains(bracket(L, e, x)))
            return fail("lambda_ideals", "I_" + ev.root.str() + " is not an ideal", e, x);
        }
    }
    if (ev.root != Rational(1) && ev.root != Rational(-1)) {
      const auto series = derived_series(L, ideal);
      if (series.size() > 3 || !series.back().is_zero()) {
        auto w = noncommuting_pair(L, series.at(1), series.at(1));
        return fail("lambda_ideals",
                    "I_" + ev.root.str() + " has solvability degree above two", w->first,
                    w->second);
      }
    }
  }
  if (!spec.splits)
    return inapplicable("lambda_ideals", "inapplicable (irrational spectrum); " +
                                             std::to_string(count) +
                                             " rational I_lambda checked");
  return pass("lambda_ideals", std::to_string(count) + " ideals I_lambda verified");
}

Check semisimple_check(const Operator &j) {
  if (!j.algebra().decomposition().semisimple)
    return inapplicable("semisimple_annihilation", "algebra not declared semisimple");
  const Matrix sq = j.matrix() * j.matrix();
  for (std::size_t i = 0; i < j.dim(); ++i) {
    const Vector e = unit_vector(j.dim(), i);
    if (sq * e != e)
      return fail("semisimple_annihilation", "J^2 != Id", e, sq * e);
  }
  return pass("semisimple_annihilation", "J^2 = Id");
}

Check centerless_quotient_check(const Operator &j, const std::vector<Subspace> &extra) {
  const LieAlgebra &L = j.algebra();
  std::vector<std::pair<std::string, Subspace>> candidates;
  for (std::size_t k = 0; k < extra.size(); ++k)
    candidates.emplace_back("supplied ideal " + std::to_string(k + 1), extra[k]);
  const Decomposition &d = L.decomposition();
  auto add = [&](const std::vector<IndexRange> &rs, const std::string &what) {
    for (const auto &r : rs)
      candidates.emplace_back(what + " [" + std::to_string(r.begin + 1) + "," +
                                  std::to_string(r.end) + "]",
                              Subspace::coordinate_range(L.dim(), r.begin, r.end));
  };
  add(d.summands, "summand");
  add(d.simple, "simple component");
  add(d.radical, "declared radical");
  std::size_t tested = 0;
  for (const auto &[label, s] : candidates) {
    if (s.ambient() != L.dim() || !is_ideal(L, s))
      continue;
    if (!center(quotient(L, s).algebra).is_zero())
      continue;
    ++tested;
    if (auto x = invariance_witness(j.matrix(), s))
      return fail("centerless_quotient_ideals", label + " is not J-invariant", *x,
                  j.apply(*x));
  }
  if (tested == 0)
    return inapplicable("centerless_quotient_ideals", "no ideal with centerless quotient");
  return pass("centerless_quotient_ideals",
              std::to_string(tested) + " ideals with centerless quotient are J-invariant");
}

AutomorphismReport automorphism_report(const Operator &j, const Subspace &rad) {
  const LieAlgebra &L = j.algebra();
  AutomorphismReport rep;
  rep.is_automorphism = is_automorphism(L, j.matrix());
  if (!rep.is_automorphism)
    return rep;
  const Matrix jm = subtract_identity(j.matrix());
  const Subspace derived = derived_subalgebra(L);
  const Subspace im = image(jm);

  Check kernel_check = pass("kernel_contains_derived", "ker(J - Id) contains L'");
  for (std::size_t k = 0; k < derived.dim(); ++k) {
    const Vector d = derived.basis_vector(k);
    if (!is_zero(jm * d)) {
      kernel_check = fail("kernel_contains_derived", "ker(J - Id) misses L'", d, jm * d);
      break;
    }
  }
  rep.checks.push_back(std::move(kernel_check));

  if (auto w = noncommuting_pair(L, im, derived))
    rep.checks.push_back(fail("image_commutes_with_derived", "[im(J - Id), L'] != 0",
                              w->first, w->second));
  else
    rep.checks.push_back(pass("image_commutes_with_derived", "[im(J - Id), L'] = 0"));

  Check radical_check = pass("image_in_radical", "im(J - Id) lies in the radical");
  for (std::size_t i = 0; i < L.dim(); ++i) {
    const Vector e = unit_vector(L.dim(), i);
    if (!rad.contains(jm * e)) {
      radical_check = fail("image_in_radical", "im(J - Id) leaves the radical", e, jm * e);
      break;
    }
  }
  rep.checks.push_back(std::move(radical_check));
  return rep;
}

} // namespace

InvarianceReport invariance_report(const Operator &j, const std::vector<Subspace> &extra) {
  if (auto v = first_violation(j))
    throw NotLieOrthogonalError(*v);
  const LieAlgebra &L = j.algebra();
  const Subspace z = center(L);
  const Subspace rad = radical(L);
  const Spectrum spec = rational_spectrum(j);

  InvarianceReport rep;
  rep.checks.push_back(zero_eigenspace_check(j, z, fitting(j).nilpotent_part));
  rep.checks.push_back(invariant_subspace_check("center_invariant", j.matrix(), z, "center"));
  rep.checks.push_back(
      invariant_subspace_check("radical_invariant", j.matrix(), rad, "radical"));
  rep.checks.push_back(ascending_series_check(j));
  rep.checks.push_back(eigenspace_commutation_check(j, spec));
  rep.checks.push_back(lambda_ideal_check(j, spec));
  rep.checks.push_back(semisimple_check(j));
  rep.checks.push_back(centerless_quotient_check(j, extra));
  rep.automorphism = automorphism_report(j, rad);
  return rep;
}

Check identity_plus_nilpotent_check(const Operator &j) {
  const std::string name = "identity_plus_nilpotent";
  if (auto v = first_violation(j))
    throw NotLieOrthogonalError(*v);
  if (generalized_eigenspace(j, Rational(1)).is_zero())
    return inapplicable(name, "1 is not an eigenvalue");
  const Subspace i1 = ideal_i_lambda(j, Rational(1)).space;
  const Operator j1 = canonicalize(restrict(j, i1));
  const Matrix n = subtract_identity(j1.matrix());
  if (!power(n, n.rows()).is_zero())
    return fail(name, "J_1 - Id is not nilpotent on I_1", i1.basis_vector(0),
                j.apply(i1.basis_vector(0)));
  const Subspace r1 = radical(j1.algebra());
  for (std::size_t a = 0; a < n.cols(); ++a) {
    const Vector img = n * unit_vector(n.cols(), a);
    if (!r1.contains(img))
      return fail(name, "image of J_1 - Id leaves the radical of I_1",
                  i1.basis_vector(a), i1.basis() * img);
  }
  return pass(name, "I_1 (dim " + std::to_string(i1.dim()) +
                        "): J_1 = Id + N, N nilpotent, im N in radical (dim " +
                        std::to_string(r1.dim()) + ")");
}

Operator direct_sum_operator(const std::vector<Operator> &parts, LieAlgebraPtr algebra) {
  const auto &summands = algebra->decomposition().summands;
  if (summands.size() != parts.size())
    throw DimensionError("direct_sum_operator: " + std::to_string(parts.size()) +
                         " blocks for " + std::to_string(summands.size()) + " summands");
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].dim() != summands[k].size())
      throw DimensionError("direct_sum_operator: block " + std::to_string(k + 1) +
                           " has the wrong size");
    blocks.push_back(parts[k].matrix());
  }
  return Operator(std::move(algebra), block_diagonal(blocks));
}

std::vector<Operator> split_operator(const Operator &j) {
  const LieAlgebra &L = j.algebra();
  const auto &summands = L.decomposition().summands;
  if (summands.empty())
    throw std::invalid_argument("split_operator: algebra declares no direct-sum summands");
  if (auto v = first_violation(j))
    throw NotLieOrthogonalError(*v);
  const Operator jc = canonicalize(j);
  const Subspace z = center(L);
  const std::size_t n = L.dim();
  for (std::size_t a = 0; a < summands.size(); ++a)
    for (std::size_t b = 0; b < summands.size(); ++b) {
      if (a == b)
        continue;
      // P_a J P_b, columns of summand b, rows of summand a.
      for (std::size_t c = summands[b].begin; c < summands[b].end; ++c) {
        Vector v(n);
        for (std::size_t r = summands[a].begin; r < summands[a].end; ++r)
          v[r] = jc.matrix()(r, c);
        if (!z.contains(v))
          throw SplitError("split_operator: block (" + std::to_string(a + 1) + "," +
                           std::to_string(b + 1) + ") is not center-valued at column " +
                           std::to_string(c + 1) + ", witness " + vec_str(v));
      }
    }
  std::vector<Operator> parts;
  for (const auto &s : summands) {
    auto sub = restrict_algebra(L, Subspace::coordinate_range(n, s.begin, s.end)).share();
    parts.emplace_back(std::move(sub),
                       jc.matrix().block(s.begin, s.begin, s.size(), s.size()));
  }
  return parts;
}

} // namespace lieortho
