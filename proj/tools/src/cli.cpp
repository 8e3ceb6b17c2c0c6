#include "lieortho_cli/cli.hpp"

#include "lieortho/catalog.hpp"
#include "lieortho/classify.hpp"
#include "lieortho/io.hpp"
#include "lieortho/linalg.hpp"
#include "lieortho/ortho.hpp"
#include "lieortho/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace lieortho::cli {

namespace {

using io::Json;

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class Context {
public:
  Context(std::istream &in, std::ostream &out) : in_(in), out_(out) {}

  Json read(const std::string &path) {
    if (path == "-") {
      if (stdin_used_)
        throw InputError("stdin can be read only once");
      stdin_used_ = true;
      try {
        return Json::parse(in_);
      } catch (const Json::parse_error &e) {
        throw InputError(std::string("invalid JSON on stdin: ") + e.what());
      }
    }
    return io::read_file(path);
  }

  LieAlgebraPtr algebra(const std::string &path) {
    return io::algebra_from_json(read(path)).share();
  }

  Operator op(const LieAlgebraPtr &L, const std::string &path) {
    Matrix m = io::operator_matrix_from_json(read(path));
    if (m.rows() != L->dim())
      throw DimensionError("operator is " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + " but the algebra has dimension " +
                           std::to_string(L->dim()));
    return Operator(L, std::move(m));
  }

  std::ostream &out() { return out_; }

private:
  std::istream &in_;
  std::ostream &out_;
  bool stdin_used_ = false;
};

std::string vec(const Vector &v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

// Linear combination in basis names, e.g. "e1 - 2*e3".
std::string combo(const LieAlgebra &L, const Vector &v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero())
      continue;
    const bool neg = v[k].sign() < 0;
    const Rational mag = abs(v[k]);
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (!mag.is_one())
      s += mag.str() + "*";
    s += L.name(k);
  }
  return s.empty() ? "0" : s;
}

void print_subspace(std::ostream &os, const std::string &label, const Subspace &s) {
  os << label << ": dim " << s.dim() << '\n';
  for (std::size_t k = 0; k < s.dim(); ++k)
    os << "  " << vec(s.basis_vector(k)) << '\n';
}

void print_matrix(std::ostream &os, const Matrix &m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
}

std::string dims(const std::vector<Subspace> &series) {
  std::string s;
  for (const auto &t : series)
    s += (s.empty() ? "" : " ") + std::to_string(t.dim());
  return s;
}

Json series_json(const std::vector<Subspace> &series) {
  Json out = Json::array();
  for (const auto &t : series)
    out.push_back(io::subspace_to_json(t));
  return out;
}

Json degree_json(const std::optional<std::size_t> &d) {
  return d ? Json(*d) : Json(nullptr);
}

std::string degree_str(const std::optional<std::size_t> &d, const char *none) {
  return d ? std::to_string(*d) : none;
}

void print_check(std::ostream &os, const LieAlgebra &L, const Check &c) {
  os << "  " << std::left << std::setw(30) << c.name << std::setw(6) << to_string(c.verdict)
     << c.detail << '\n';
  if (c.witness)
    os << "    witness: x = " << combo(L, c.witness->first)
       << ", y = " << combo(L, c.witness->second) << '\n';
}

// --- commands -------------------------------------------------------------

int cmd_catalog(Context &ctx, const std::vector<std::string> &spec, bool list) {
  if (list || spec.empty()) {
    for (const auto &f : catalog::family_names())
      ctx.out() << f << '\n';
    return spec.empty() && !list ? exit_input_error : exit_ok;
  }
  std::string name = spec[0];
  if (spec.size() > 1)
    name += ":" + spec[1];
  if (spec.size() > 2)
    throw InputError("catalog takes a family and at most one parameter");
  ctx.out() << io::algebra_to_json(catalog::by_name(name)).dump(2) << '\n';
  return exit_ok;
}

int cmd_analyze(Context &ctx, const std::string &path, bool json) {
  const auto L = ctx.algebra(path);
  const Subspace z = center(*L);
  const auto derived = derived_series(*L);
  const auto lower = lower_central_series(*L);
  const auto ascending = ascending_central_series(*L);
  const Matrix killing = killing_form(*L);
  const Subspace rad = radical(*L);
  const auto solv = solvability_degree(*L);
  const auto nilp = nilpotency_degree(*L);
  if (json) {
    Json out;
    out["dim"] = L->dim();
    out["basis"] = L->names();
    out["center"] = io::subspace_to_json(z);
    out["derived_series"] = series_json(derived);
    out["lower_central_series"] = series_json(lower);
    out["ascending_central_series"] = series_json(ascending);
    out["killing_form"] = io::to_json(killing);
    out["killing_rank"] = rank(killing);
    out["radical"] = io::subspace_to_json(rad);
    out["solvability_degree"] = degree_json(solv);
    out["nilpotency_degree"] = degree_json(nilp);
    ctx.out() << out.dump(2) << '\n';
    return exit_ok;
  }
  auto &os = ctx.out();
  os << "dim: " << L->dim() << '\n';
  os << "basis:";
  for (const auto &n : L->names())
    os << ' ' << n;
  os << '\n';
  print_subspace(os, "center", z);
  os << "derived series dims: " << dims(derived) << '\n';
  os << "lower central series dims: " << dims(lower) << '\n';
  os << "ascending central series dims: " << dims(ascending) << '\n';
  os << "killing form rank: " << rank(killing) << '\n';
  print_subspace(os, "radical", rad);
  os << "solvability degree: " << degree_str(solv, "not solvable") << '\n';
  os << "nilpotency degree: " << degree_str(nilp, "not nilpotent") << '\n';
  return exit_ok;
}

int cmd_check(Context &ctx, const std::string &alg, const std::string &opf, bool json) {
  const auto L = ctx.algebra(alg);
  const Operator j = ctx.op(L, opf);
  const auto res = residuals(j);
  std::size_t nonzero_matrices = 0, nonzero_entries = 0;
  for (const auto &r : res) {
    std::size_t e = 0;
    for (std::size_t a = 0; a < r.rows(); ++a)
      for (std::size_t b = 0; b < r.cols(); ++b)
        e += r(a, b).is_zero() ? 0 : 1;
    nonzero_entries += e;
    nonzero_matrices += e ? 1 : 0;
  }
  const bool ok = nonzero_matrices == 0;
  const auto all = violations(j);
  const Matrix ess = essential_block(j);
  const bool even = ess.rows() % 2 == 0 && ess.rows() > 0;
  std::optional<InvarianceReport> report;
  if (ok)
    report = invariance_report(j);

  if (json) {
    Json out;
    out["lie_orthogonal"] = ok;
    out["residuals"] = {{"nonzero_matrices", nonzero_matrices},
                        {"nonzero_entries", nonzero_entries}};
    Json vs = Json::array();
    for (const auto &v : all)
      vs.push_back({{"i", v.i + 1},
                    {"j", v.j + 1},
                    {"expected", io::to_json(v.expected)},
                    {"actual", io::to_json(v.actual)}});
    out["violations"] = vs;
    out["essential_block"] = io::to_json(ess);
    out["essential_block_symplectic"] = even ? Json(is_symplectic(ess)) : Json(nullptr);
    out["report"] = report ? io::report_to_json(*report) : Json(nullptr);
    ctx.out() << out.dump(2) << '\n';
    return ok ? exit_ok : exit_false;
  }
  auto &os = ctx.out();
  os << "Lie-orthogonal: " << (ok ? "yes" : "no") << '\n';
  os << "residuals: " << nonzero_matrices << " of " << res.size()
     << " structure matrices violated, " << nonzero_entries << " nonzero entries\n";
  for (const auto &v : all) {
    const std::string a = L->name(v.i), b = L->name(v.j);
    os << "violated relation [" << a << ", " << b << "] = " << combo(*L, v.expected)
       << ", but [J " << a << ", J " << b << "] = " << combo(*L, v.actual) << '\n';
  }
  os << "essential block (" << ess.rows() << "x" << ess.cols() << "):\n";
  print_matrix(os, ess);
  if (even)
    os << "essential block symplectic: " << (is_symplectic(ess) ? "yes" : "no") << '\n';
  if (report) {
    os << "invariance report:\n";
    for (const auto &c : report->checks)
      print_check(os, *L, c);
    os << "automorphism: " << (report->automorphism.is_automorphism ? "yes" : "no") << '\n';
    for (const auto &c : report->automorphism.checks)
      print_check(os, *L, c);
  }
  return ok ? exit_ok : exit_false;
}

int cmd_equiv(Context &ctx, const std::string &alg, const std::string &a,
              const std::string &b, bool json) {
  const auto L = ctx.algebra(alg);
  const Operator ja = ctx.op(L, a), jb = ctx.op(L, b);
  const bool eq = are_equivalent(ja, jb);
  const Operator ca = canonicalize(ja), cb = canonicalize(jb);
  if (json) {
    Json out;
    out["equivalent"] = eq;
    out["canonical"] = Json::array({io::to_json(ca.matrix()), io::to_json(cb.matrix())});
    ctx.out() << out.dump(2) << '\n';
  } else {
    ctx.out() << "equivalent: " << (eq ? "yes" : "no") << "\ncanonical form of first:\n";
    print_matrix(ctx.out(), ca.matrix());
    ctx.out() << "canonical form of second:\n";
    print_matrix(ctx.out(), cb.matrix());
  }
  return eq ? exit_ok : exit_false;
}

int cmd_fitting(Context &ctx, const std::string &alg, const std::string &opf, bool json) {
  const auto L = ctx.algebra(alg);
  const Operator j = ctx.op(L, opf);
  const Fitting f = fitting(j);
  if (json) {
    Json out;
    out["nilpotent_part"] = io::subspace_to_json(f.nilpotent_part);
    out["invertible_part"] = io::subspace_to_json(f.invertible_part);
    ctx.out() << out.dump(2) << '\n';
  } else {
    print_subspace(ctx.out(), "L0 (ker J^n)", f.nilpotent_part);
    print_subspace(ctx.out(), "Lhat (im J^n)", f.invertible_part);
  }
  return exit_ok;
}

int cmd_spectrum(Context &ctx, const std::string &alg, const std::string &opf, bool json) {
  const auto L = ctx.algebra(alg);
  const Operator j = ctx.op(L, opf);
  const Spectrum s = rational_spectrum(j);
  const bool lo = is_lie_orthogonal(j);
  if (json) {
    Json out;
    out["characteristic_polynomial"] = io::to_json(Vector(s.characteristic.coefficients()));
    out["splits"] = s.splits;
    Json evs = Json::array();
    for (const auto &ev : s.eigenvalues) {
      Json e;
      e["eigenvalue"] = io::to_json(ev.root);
      e["multiplicity"] = ev.multiplicity;
      e["generalized_eigenspace"] = io::subspace_to_json(generalized_eigenspace(j, ev.root));
      if (lo && !ev.root.is_zero()) {
        const LambdaIdeal I = ideal_i_lambda(j, ev.root);
        e["ideal"] = io::subspace_to_json(I.space);
        e["ideal_deficit"] = I.deficit;
      }
      evs.push_back(e);
    }
    out["eigenvalues"] = evs;
    ctx.out() << out.dump(2) << '\n';
    return exit_ok;
  }
  auto &os = ctx.out();
  os << "characteristic polynomial: " << s.characteristic.str() << '\n';
  os << "splits over Q: " << (s.splits ? "yes" : "no") << '\n';
  for (const auto &ev : s.eigenvalues) {
    os << "eigenvalue " << ev.root << " (multiplicity " << ev.multiplicity << ")\n";
    print_subspace(os, "  generalized eigenspace", generalized_eigenspace(j, ev.root));
    if (lo && !ev.root.is_zero()) {
      const LambdaIdeal I = ideal_i_lambda(j, ev.root);
      print_subspace(os, "  ideal I_" + ev.root.str(), I.space);
      if (I.deficit)
        os << "  (sum not direct, deficit " << I.deficit << ")\n";
    }
  }
  return exit_ok;
}

FamilyGenerator generator_for(const FamilySpec &spec) {
  struct Visitor {
    FamilyGenerator operator()(const SemisimpleSpec &s) const {
      return semisimple_family(s.algebra);
    }
    FamilyGenerator operator()(const ReductiveSpec &s) const {
      return reductive_family(s.algebra);
    }
    FamilyGenerator operator()(const GlnSpec &s) const { return gln_family(s.n); }
    FamilyGenerator operator()(const HeisenbergSpec &s) const {
      return heisenberg_family(s.n);
    }
    FamilyGenerator operator()(const AlmostAbelianSpec &s) const {
      return almost_abelian_family(s.a);
    }
    FamilyGenerator operator()(const MinimalNilradicalSpec &s) const {
      return minimal_nilradical_family(s.n);
    }
    FamilyGenerator operator()(const Sl2SemidirectSpec &) const {
      return sl2_semidirect_family();
    }
  };
  return std::visit(Visitor{}, spec);
}

int cmd_classify(Context &ctx, const std::string &family, const std::string &params,
                 std::uint64_t seed, std::size_t samples, bool json) {
  Json p = Json::object();
  if (!params.empty()) {
    if (params[0] == '@')
      p = ctx.read(params.substr(1));
    else
      try {
        p = Json::parse(params);
      } catch (const Json::parse_error &e) {
        throw InputError(std::string("invalid --params JSON: ") + e.what());
      }
  }
  const FamilySpec spec = io::family_spec_from_json(family, p);
  const Operator j = build(spec);
  const bool lo = is_lie_orthogonal(j);
  const VerificationReport rep = verify_family(generator_for(spec), samples, samples, seed);
  if (json) {
    Json out;
    out["operator"] = io::operator_to_json(j);
    out["lie_orthogonal"] = lo;
    out["verification"] = io::verification_to_json(rep);
    ctx.out() << out.dump(2) << '\n';
  } else {
    auto &os = ctx.out();
    os << "operator on " << rep.family << ":\n";
    print_matrix(os, j.matrix());
    os << "Lie-orthogonal: " << (lo ? "yes" : "no") << '\n';
    os << "verification (seed " << seed << "): sound " << rep.sound << "/" << rep.samples
       << ", perturbations rejected " << rep.rejected << "/" << rep.perturbations;
    if (rep.equivalent)
      os << " (+" << rep.equivalent << " equivalent to the form)";
    os << '\n';
    if (rep.counterexample)
      os << "counterexample: " << *rep.counterexample << '\n';
  }
  return lo && rep.passed() ? exit_ok : exit_false;
}

int cmd_verify(Context &ctx, const std::string &suite, std::uint64_t seed, std::size_t samples,
               bool json) {
  const auto names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw InputError("unknown suite '" + suite + "'");
  const auto results = run_suites(suite, seed, samples);
  bool ok = true;
  for (const auto &r : results)
    ok = ok && r.passed();
  if (json) {
    Json out;
    out["seed"] = seed;
    out["samples"] = samples;
    Json arr = Json::array();
    for (const auto &r : results)
      arr.push_back({{"suite", r.name},
                     {"cases", r.cases},
                     {"failures", r.failures},
                     {"passed", r.passed()},
                     {"witness", r.witness ? Json(*r.witness) : Json(nullptr)}});
    out["suites"] = arr;
    out["passed"] = ok;
    ctx.out() << out.dump(2) << '\n';
  } else {
    for (const auto &r : results) {
      ctx.out() << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(20) << r.name
                << r.cases << " cases, " << r.failures << " failures\n";
      if (r.witness)
        ctx.out() << "  counterexample: " << *r.witness << '\n';
    }
  }
  return ok ? exit_ok : exit_false;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Exact Lie-orthogonal operator toolkit", "lieortho"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::vector<std::string> cat_spec;
  bool cat_list = false;
  auto *cat = app.add_subcommand("catalog", "Emit a catalog algebra as JSON");
  cat->add_option("family", cat_spec, "Family and optional parameter, e.g. heisenberg 2");
  cat->add_flag("--list", cat_list, "List families");

  std::string alg, op1, op2;
  auto *analyze = app.add_subcommand("analyze", "Structure report for an algebra");
  analyze->add_option("algebra", alg, "Algebra JSON file ('-' for stdin)")->required();

  auto add_op_cmd = [&](const char *name, const char *desc) {
    auto *c = app.add_subcommand(name, desc);
    c->add_option("algebra", alg, "Algebra JSON file")->required();
    c->add_option("operator", op1, "Operator JSON file")->required();
    return c;
  };
  auto *check = add_op_cmd("check", "Decide Lie orthogonality and run invariance checks");
  auto *fit = add_op_cmd("fitting", "Fitting decomposition L0 + Lhat");
  auto *spec = add_op_cmd("spectrum", "Rational spectrum, eigenspaces and ideals I_lambda");
  auto *equiv = add_op_cmd("equiv", "Equivalence modulo the center");
  equiv->add_option("other", op2, "Second operator JSON file")->required();

  std::string family, params;
  std::uint64_t seed = 42;
  std::size_t samples = 100;
  auto *cls = app.add_subcommand("classify", "Build a classified operator and verify its family");
  cls->add_option("family", family,
                  "semisimple | reductive | gl | heisenberg | almost-abelian | "
                  "minimal-nilradical | sl2-semidirect")
      ->required();
  cls->add_option("--params", params, "Family parameters as JSON (or @file)");
  cls->add_option("--seed", seed, "Random seed");
  cls->add_option("--samples", samples, "Samples and perturbations");

  std::string suite;
  auto *ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("suite", suite, "Suite name or 'all'")->required();
  ver->add_option("--seed", seed, "Random seed");
  ver->add_option("--samples", samples, "Samples per family");

  for (auto *sub : {cat, analyze, check, fit, spec, equiv, cls, ver})
    sub->add_flag("--json", json, "Machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError &e) {
    for (auto *sub : app.get_subcommands())
      if (std::find(args.begin(), args.end(), "--help") != args.end()) {
        out << sub->help();
        return exit_ok;
      }
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }

  Context ctx(in, out);
  try {
    if (cat->parsed())
      return cmd_catalog(ctx, cat_spec, cat_list);
    if (analyze->parsed())
      return cmd_analyze(ctx, alg, json);
    if (check->parsed())
      return cmd_check(ctx, alg, op1, json);
    if (equiv->parsed())
      return cmd_equiv(ctx, alg, op1, op2, json);
    if (fit->parsed())
      return cmd_fitting(ctx, alg, op1, json);
    if (spec->parsed())
      return cmd_spectrum(ctx, alg, op1, json);
    if (cls->parsed())
      return cmd_classify(ctx, family, params, seed, samples, json);
    if (ver->parsed())
      return cmd_verify(ctx, suite, seed, samples, json);
  } catch (const JacobiError &e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const Json::exception &e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const std::overflow_error &e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const std::domain_error &e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }
  return exit_input_error;
}

} // namespace lieortho::cli
