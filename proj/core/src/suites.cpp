#include "lieortho/suites.hpp"

#include "lieortho/catalog.hpp"
#include "lieortho/linalg.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lieortho {

namespace {

class Tally {
public:
  explicit Tally(std::string name) { r_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()> &describe) {
    ++r_.cases;
    if (ok)
      return;
    ++r_.failures;
    if (!r_.witness)
      r_.witness = describe();
  }
  void absorb(const VerificationReport &v) {
    r_.cases += v.samples + v.perturbations;
    const std::size_t bad = (v.samples - v.sound) + (v.perturbations - v.rejected - v.equivalent);
    r_.failures += bad;
    if (bad && !r_.witness)
      r_.witness = v.family + ": " + v.counterexample.value_or("failure");
  }
  SuiteResult result() const { return r_; }

private:
  SuiteResult r_;
};

std::string show(const std::string &family, const Operator &j, const std::string &what) {
  std::ostringstream os;
  os << family << ": " << what << "\n" << j.matrix();
  return os.str();
}

std::uint64_t family_seed(std::uint64_t seed, std::size_t index) {
  return seed * 1000003u + index;
}

// Upper triangular with diagonal entries drawn from `diag`.
Matrix random_triangular(Rng &rng, std::size_t n, const std::vector<Rational> &diag) {
  Matrix m(n, n);
  std::uniform_int_distribution<std::size_t> pick(0, diag.size() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = diag[pick(rng)];
    for (std::size_t k = i + 1; k < n; ++k)
      m(i, k) = random_integer(rng);
  }
  return m;
}

void closure_suite(Tally &t, std::uint64_t seed, std::size_t samples) {
  const auto families = standard_families();
  for (std::size_t f = 0; f < families.size(); ++f) {
    const auto &g = families[f];
    Rng rng(family_seed(seed, f));
    for (std::size_t s = 0; s < samples; ++s) {
      const Operator a = g.sample(rng), b = g.sample(rng);
      auto lo = [&](const Operator &j, const char *what) {
        t.expect(is_lie_orthogonal(j), [&] { return show(g.name, j, what); });
      };
      lo(negate(a), "negation not Lie-orthogonal");
      lo(compose(a, b), "composition not Lie-orthogonal");
      lo(canonicalize(a), "canonical form not Lie-orthogonal");
      if (!det(a.matrix()).is_zero())
        lo(invert(a), "inverse not Lie-orthogonal");
      if (is_automorphism(a.algebra(), b.matrix()))
        lo(conjugate(a, b.matrix()), "conjugate not Lie-orthogonal");
      const Subspace rad = radical(a.algebra());
      if (!rad.is_zero())
        lo(restrict(a, rad), "restriction to the radical not Lie-orthogonal");
      const Subspace z = center(a.algebra());
      if (!z.is_zero())
        lo(factor_operator(a, z).op, "factor operator not Lie-orthogonal");
    }
  }
}

void center_suite(Tally &t, std::uint64_t seed, std::size_t samples) {
  const auto families = standard_families();
  for (std::size_t f = 0; f < families.size(); ++f) {
    const auto &g = families[f];
    const Subspace z = center(*g.algebra);
    Rng rng(family_seed(seed, f));
    for (std::size_t s = 0; s < samples; ++s) {
      const Operator j = g.sample(rng);
      t.expect(z.contains(fitting(j).nilpotent_part),
               [&] { return show(g.name, j, "L0 not in the center"); });
      t.expect(z.contains(image(j.matrix(), z)),
               [&] { return show(g.name, j, "center not invariant"); });
      const Operator c = canonicalize(j);
      t.expect(are_equivalent(j, c) && canonicalize(c) == c,
               [&] { return show(g.name, j, "canonical form not equivalent or not idempotent"); });
    }
  }
}

void radical_suite(Tally &t, std::uint64_t seed, std::size_t samples) {
  const auto families = standard_families();
  for (std::size_t f = 0; f < families.size(); ++f) {
    const auto &g = families[f];
    const Subspace rad = radical(*g.algebra);
    t.expect(is_ideal(*g.algebra, rad) &&
                 solvability_degree(restrict_algebra(*g.algebra, rad)).has_value(),
             [&] { return g.name + ": radical is not a solvable ideal"; });
    Rng rng(family_seed(seed, f));
    for (std::size_t s = 0; s < samples; ++s) {
      const Operator j = g.sample(rng);
      t.expect(rad.contains(image(j.matrix(), rad)),
               [&] { return show(g.name, j, "radical not invariant"); });
      const Check *c = invariance_report(j).find("centerless_quotient_ideals");
      t.expect(c && c->verdict != Verdict::fail,
               [&] { return show(g.name, j, "ideal with centerless quotient not invariant"); });
    }
  }
}

void series_suite(Tally &t, std::uint64_t seed, std::size_t samples) {
  const auto families = standard_families();
  for (std::size_t f = 0; f < families.size(); ++f) {
    const auto &g = families[f];
    const auto series = ascending_central_series(*g.algebra);
    Rng rng(family_seed(seed, f));
    for (std::size_t s = 0; s < samples; ++s) {
      const Operator j = g.sample(rng);
      for (const auto &term : series)
        t.expect(term.contains(image(j.matrix(), term)),
                 [&] { return show(g.name, j, "ascending series term not invariant"); });
    }
  }
}

void eigen_suite(Tally &t, std::uint64_t seed, std::size_t samples) {
  Rng rng(seed);
  const std::vector<Rational> diag{Rational(2), Rational(-2), Rational(1, 2), Rational(3)};
  for (const auto &a : almost_abelian_instances()) {
    const std::size_t m = normal_layout_center_dim(a);
    const std::size_t n = a.rows() + 1;
    if (m + 2 >= n)
      continue;
    auto L = catalog::almost_abelian(a).share();
    for (const Rational &mu : {Rational(2), Rational(3), Rational(-3)})
      for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t k = n - m - 1;
        AlmostAbelianCase1 p{random_triangular(rng, m, diag), random_integer_matrix(rng, m, k),
                             random_integer_matrix(rng, m, 1),
                             random_integer_matrix(rng, k, 1), mu};
        const Operator j = almost_abelian_op(L, p);
        const Spectrum spec = rational_spectrum(j);
        t.expect(spec.splits, [&] { return show("almost-abelian", j, "spectrum does not split"); });
        const InvarianceReport rep = invariance_report(j);
        for (const char *name : {"eigenspace_commutation", "lambda_ideals"}) {
          const Check *c = rep.find(name);
          t.expect(c && c->verdict == Verdict::pass,
                   [&] { return show("almost-abelian", j, std::string(name) + ": " + c->detail); });
        }
        bool avoids_units = spec.splits;
        for (const auto &ev : spec.eigenvalues)
          if (ev.root == Rational(1) || ev.root == Rational(-1))
            avoids_units = false;
        if (avoids_units) {
          const auto deg = solvability_degree(*L);
          t.expect(deg && *deg <= 2, [&] {
            return show("almost-abelian", j, "spectrum avoids +-1 but solvability degree > 2");
          });
        }
      }
  }
}

void semisimple_suite(Tally &t, std::uint64_t seed, std::size_t samples) {
  Rng rng(seed);
  for (const std::string name : {"sl2", "sl:3", "sl2+sl2"}) {
    auto L = catalog::by_name(name).share();
    const std::size_t k = L->decomposition().simple.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::vector<int> signs(k);
      for (std::size_t b = 0; b < k; ++b)
        signs[b] = (mask >> b) & 1 ? -1 : 1;
      const Operator j = semisimple_op(L, signs);
      t.expect(is_lie_orthogonal(j) && (j.matrix() * j.matrix()).is_identity(),
               [&] { return show(name, j, "signed identity rejected or J^2 != Id"); });
      const Check *c = invariance_report(j).find("semisimple_annihilation");
      t.expect(c && c->verdict == Verdict::pass,
               [&] { return show(name, j, "annihilation check did not pass"); });
    }
    for (std::size_t s = 0; s < samples; ++s) {
      Matrix m = random_integer_matrix(rng, L->dim(), L->dim());
      const Operator j(L, m);
      const bool trivial = m.is_identity() || (-m).is_identity();
      if (trivial)
        continue;
      t.expect(!is_lie_orthogonal(j),
               [&] { return show(name, j, "random non-trivial operator accepted"); });
    }
  }
}

void verify_suite(Tally &t, const std::vector<FamilyGenerator> &families,
                  std::uint64_t seed, std::size_t samples) {
  for (std::size_t f = 0; f < families.size(); ++f)
    t.absorb(verify_family(families[f], samples, samples, family_seed(seed, f)));
}

void heisenberg_suite(Tally &t, std::uint64_t seed, std::size_t samples) {
  verify_suite(t, {heisenberg_family(1), heisenberg_family(2), heisenberg_family(3)}, seed,
               samples);
}

void almost_abelian_suite(Tally &t, std::uint64_t seed, std::size_t samples) {
  std::vector<FamilyGenerator> fams;
  for (const auto &a : almost_abelian_instances())
    fams.push_back(almost_abelian_family(a));
  verify_suite(t, fams, seed, samples);
}

void minimal_nilradical_suite(Tally &t, std::uint64_t seed, std::size_t samples) {
  verify_suite(t,
               {minimal_nilradical_family(2), minimal_nilradical_family(3),
                minimal_nilradical_family(4), minimal_nilradical_family(5)},
               seed, samples);
}

void sl2_semidirect_suite(Tally &t, std::uint64_t seed, std::size_t samples) {
  const auto ops = sl2_semidirect_ops();
  t.expect(ops.size() == 2, [] { return std::string("expected exactly two operators"); });
  for (const auto &j : ops)
    t.expect(is_lie_orthogonal(j), [&] { return show("sl2-semidirect", j, "rejected"); });
  // Id + N with a single coefficient of N (values in <e4, e5>) set to 1.
  const auto L = ops[0].algebra_ptr();
  for (std::size_t col = 0; col < 5; ++col)
    for (std::size_t row : {3, 4}) {
      Matrix m = Matrix::identity(5);
      m(row, col) += 1;
      const Operator j(L, m);
      t.expect(!is_lie_orthogonal(j),
               [&] { return show("sl2-semidirect", j, "Id + N candidate accepted"); });
    }
  verify_suite(t, {sl2_semidirect_family()}, seed, samples);
}

void class_group_suite(Tally &t, std::uint64_t seed, std::size_t samples) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto g = heisenberg_family(n);
    Rng rng(family_seed(seed, n));
    const OperatorClass id = OperatorClass::identity(g.algebra);
    for (std::size_t s = 0; s < samples; ++s) {
      const OperatorClass a(g.sample(rng)), b(g.sample(rng)), c(g.sample(rng));
      auto fail = [&](const char *what) {
        return [&, what] { return show(g.name, a.representative(), what); };
      };
      t.expect(class_compose(class_compose(a, b), c) == class_compose(a, class_compose(b, c)),
               fail("associativity fails"));
      t.expect(class_compose(a, id) == a && class_compose(id, a) == a,
               fail("identity law fails"));
      t.expect(class_compose(a, class_invert(a)) == id && class_compose(class_invert(a), a) == id,
               fail("inverse law fails"));
      const Matrix block = essential_block(class_compose(a, b).representative());
      t.expect(block == essential_block(a.representative()) * essential_block(b.representative()),
               fail("class composition does not multiply symplectic blocks"));
    }
  }
}

using SuiteFn = void (*)(Tally &, std::uint64_t, std::size_t);

const std::vector<std::pair<std::string, SuiteFn>> &registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"closure", closure_suite},
      {"center", center_suite},
      {"radical", radical_suite},
      {"series", series_suite},
      {"eigen", eigen_suite},
      {"semisimple", semisimple_suite},
      {"heisenberg", heisenberg_suite},
      {"almost-abelian", almost_abelian_suite},
      {"minimal-nilradical", minimal_nilradical_suite},
      {"sl2-semidirect", sl2_semidirect_suite},
      {"class-group", class_group_suite},
  };
  return r;
}

} // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto &[name, fn] : registry())
    out.push_back(name);
  return out;
}

SuiteResult run_suite(const std::string &name, std::uint64_t seed, std::size_t samples) {
  for (const auto &[n, fn] : registry())
    if (n == name) {
      Tally t(name);
      fn(t, seed, samples);
      return t.result();
    }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_suites(const std::string &name, std::uint64_t seed,
                                    std::size_t samples) {
  if (name != "all")
    return {run_suite(name, seed, samples)};
  std::vector<SuiteResult> out;
  for (const auto &[n, fn] : registry())
    out.push_back(run_suite(n, seed, samples));
  return out;
}

std::vector<Matrix> almost_abelian_instances() {
  return {
      Matrix{{1}},                                  // g2
      Matrix{{0, 0}, {0, 1}},                       // g1 + g2
      Matrix{{0, 1}, {0, 0}},                       // heisenberg
      Matrix{{0, 0, 1}, {0, 0, 0}, {0, 0, 1}},      // rank 1, dim Z = 2
      Matrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}},      // centerless
      Matrix{{0, 0, 0}, {0, 1, 1}, {0, 0, 1}},      // dim Z = 1
      Matrix{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}} // nilpotent, dim Z = 1
  };
}

std::vector<FamilyGenerator> standard_families() {
  std::vector<FamilyGenerator> out{
      semisimple_family("sl2"),        semisimple_family("sl:3"),
      semisimple_family("sl2+sl2"),    reductive_family("sl2+g1"),
      reductive_family("sl2+abelian:2"), gln_family(2),
      gln_family(3),                   heisenberg_family(1),
      heisenberg_family(2),            heisenberg_family(3),
      minimal_nilradical_family(2),    minimal_nilradical_family(3),
      minimal_nilradical_family(4),    minimal_nilradical_family(5),
      sl2_semidirect_family(),
      direct_sum_family({semisimple_family("sl2"), minimal_nilradical_family(2)}),
  };
  for (const auto &a : almost_abelian_instances())
    out.push_back(almost_abelian_family(a));
  return out;
}

} // namespace lieortho
