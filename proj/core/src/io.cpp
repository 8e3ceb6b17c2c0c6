#include "lieortho/io.hpp"

#include "lieortho/catalog.hpp"

#include <fstream>
#include <iostream>
#include <map>

namespace lieortho::io {

namespace {

const Json &require(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t index_from_json(const Json &j, std::size_t dim, const char *what) {
  if (!j.is_number_integer())
    throw ParseError(std::string(what) + " must be an integer index");
  const long v = j.get<long>();
  if (v < 1 || static_cast<std::size_t>(v) > dim)
    throw ParseError(std::string(what) + " index " + std::to_string(v) + " outside 1.." +
                     std::to_string(dim));
  return static_cast<std::size_t>(v - 1);
}

std::size_t count_from_json(const Json &j, const char *what) {
  if (!j.is_number_integer() || j.get<long>() < 0)
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

Json ranges_to_json(const std::vector<IndexRange> &rs) {
  Json out = Json::array();
  for (const auto &r : rs)
    out.push_back(Json::array({r.begin + 1, r.end}));
  return out;
}

std::vector<IndexRange> ranges_from_json(const Json &j, std::size_t dim) {
  if (!j.is_array())
    throw ParseError("decomposition ranges must be a list of [first, last] pairs");
  std::vector<IndexRange> out;
  for (const auto &r : j) {
    if (!r.is_array() || r.size() != 2)
      throw ParseError("decomposition range must be [first, last]");
    const std::size_t first = index_from_json(r[0], dim, "range");
    const std::size_t last = index_from_json(r[1], dim, "range");
    if (last < first)
      throw ParseError("decomposition range has last < first");
    out.push_back({first, last + 1});
  }
  return out;
}

Json witness_to_json(const std::optional<std::pair<Vector, Vector>> &w) {
  if (!w)
    return nullptr;
  return Json::array({to_json(w->first), to_json(w->second)});
}

Matrix optional_matrix(const Json &params, const char *key, std::size_t rows,
                       std::size_t cols) {
  if (!params.contains(key))
    return Matrix(rows, cols);
  if (rows == 0 || cols == 0)
    return Matrix(rows, cols);
  return matrix_from_json(params.at(key));
}

std::vector<int> signs_from_json(const Json &params, std::size_t count) {
  if (!params.contains("signs"))
    return std::vector<int>(count, 1);
  const Json &s = params.at("signs");
  if (!s.is_array())
    throw ParseError("signs must be a list");
  std::vector<int> out;
  for (const auto &x : s) {
    if (!x.is_number_integer())
      throw ParseError("signs must be integers");
    out.push_back(x.get<int>());
  }
  return out;
}

} // namespace

Json to_json(const Rational &r) { return r.str(); }

Json to_json(const Vector &v) {
  Json out = Json::array();
  for (const auto &x : v)
    out.push_back(to_json(x));
  return out;
}

Json to_json(const Matrix &m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Rational rational_from_json(const Json &j) {
  if (j.is_number_integer())
    return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument &e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

Vector vector_from_json(const Json &j) {
  if (!j.is_array())
    throw ParseError("vector must be a list");
  Vector v;
  for (const auto &x : j)
    v.push_back(rational_from_json(x));
  return v;
}

Matrix matrix_from_json(const Json &j) {
  if (!j.is_array())
    throw ParseError("matrix must be a list of rows");
  if (j.empty())
    return Matrix();
  std::vector<Vector> rows;
  for (const auto &r : j)
    rows.push_back(vector_from_json(r));
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw ParseError("matrix rows have different lengths");
    for (std::size_t c = 0; c < m.cols(); ++c)
      m(i, c) = rows[i][c];
  }
  return m;
}

Json algebra_to_json(const LieAlgebra &L) {
  Json out;
  out["dim"] = L.dim();
  out["basis"] = L.names();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const Vector v = L.basis_bracket(i, j);
      if (is_zero(v))
        continue;
      Json result = Json::object();
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero())
          result[std::to_string(k + 1)] = to_json(v[k]);
      brackets.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"result", result}});
    }
  out["brackets"] = brackets;
  const Decomposition &d = L.decomposition();
  if (!d.empty()) {
    Json dj;
    if (!d.summands.empty())
      dj["summands"] = ranges_to_json(d.summands);
    if (!d.simple.empty())
      dj["simple"] = ranges_to_json(d.simple);
    if (!d.center.empty())
      dj["center"] = ranges_to_json(d.center);
    if (!d.levi.empty())
      dj["levi"] = ranges_to_json(d.levi);
    if (!d.radical.empty())
      dj["radical"] = ranges_to_json(d.radical);
    dj["semisimple"] = d.semisimple;
    out["decomposition"] = dj;
  }
  return out;
}

LieAlgebra algebra_from_json(const Json &j) {
  if (!j.is_object())
    throw ParseError("algebra must be a JSON object");
  const std::size_t dim = count_from_json(require(j, "dim"), "dim");
  LieAlgebra::Builder b(dim);
  if (j.contains("basis")) {
    const Json &names = j.at("basis");
    if (!names.is_array() || names.size() != dim)
      throw ParseError("basis must list exactly dim names");
    std::vector<std::string> v;
    for (const auto &n : names) {
      if (!n.is_string())
        throw ParseError("basis names must be strings");
      v.push_back(n.get<std::string>());
    }
    b.names(std::move(v));
  }
  if (j.contains("brackets")) {
    const Json &br = j.at("brackets");
    if (!br.is_array())
      throw ParseError("brackets must be a list");
    std::map<std::pair<std::size_t, std::size_t>, bool> seen;
    for (const auto &e : br) {
      const std::size_t i = index_from_json(require(e, "i"), dim, "i");
      const std::size_t jj = index_from_json(require(e, "j"), dim, "j");
      if (i >= jj)
        throw ParseError("bracket entries need i < j, got i=" + std::to_string(i + 1) +
                         " j=" + std::to_string(jj + 1));
      if (seen[{i, jj}])
        throw ParseError("duplicate bracket entry for i=" + std::to_string(i + 1) +
                         " j=" + std::to_string(jj + 1));
      seen[{i, jj}] = true;
      const Json &res = require(e, "result");
      if (!res.is_object())
        throw ParseError("bracket result must be an object {\"k\": \"c\"}");
      for (const auto &[key, val] : res.items()) {
        std::size_t k = 0;
        try {
          std::size_t pos = 0;
          const long kv = std::stol(key, &pos);
          if (pos != key.size() || kv < 1 || static_cast<std::size_t>(kv) > dim)
            throw std::invalid_argument("");
          k = static_cast<std::size_t>(kv - 1);
        } catch (const std::exception &) {
          throw ParseError("bracket result key '" + key + "' is not an index in 1.." +
                           std::to_string(dim));
        }
        b.set(i, jj, k, rational_from_json(val));
      }
    }
  }
  if (j.contains("decomposition")) {
    const Json &dj = j.at("decomposition");
    if (!dj.is_object())
      throw ParseError("decomposition must be an object");
    Decomposition d;
    if (dj.contains("summands"))
      d.summands = ranges_from_json(dj.at("summands"), dim);
    if (dj.contains("simple"))
      d.simple = ranges_from_json(dj.at("simple"), dim);
    if (dj.contains("center"))
      d.center = ranges_from_json(dj.at("center"), dim);
    if (dj.contains("levi"))
      d.levi = ranges_from_json(dj.at("levi"), dim);
    if (dj.contains("radical"))
      d.radical = ranges_from_json(dj.at("radical"), dim);
    if (dj.contains("semisimple")) {
      if (!dj.at("semisimple").is_boolean())
        throw ParseError("semisimple must be a boolean");
      d.semisimple = dj.at("semisimple").get<bool>();
    }
    b.decomposition(std::move(d));
  }
  return b.build_checked();
}

Json operator_to_json(const Operator &j) {
  Json out;
  out["matrix"] = to_json(j.matrix());
  return out;
}

Matrix operator_matrix_from_json(const Json &j) {
  const Matrix m = matrix_from_json(j.is_object() ? require(j, "matrix") : j);
  if (!m.is_square())
    throw ParseError("operator matrix must be square");
  return m;
}

Json subspace_to_json(const Subspace &s) {
  Json out;
  out["dim"] = s.dim();
  Json basis = Json::array();
  for (std::size_t k = 0; k < s.dim(); ++k)
    basis.push_back(to_json(s.basis_vector(k)));
  out["basis"] = basis;
  return out;
}

Json check_to_json(const Check &c) {
  Json out;
  out["name"] = c.name;
  out["verdict"] = c.verdict == Verdict::pass   ? "pass"
                   : c.verdict == Verdict::fail ? "fail"
                                                : "inapplicable";
  out["detail"] = c.detail;
  out["witness"] = witness_to_json(c.witness);
  return out;
}

Json report_to_json(const InvarianceReport &r) {
  Json out;
  Json checks = Json::array();
  for (const auto &c : r.checks)
    checks.push_back(check_to_json(c));
  out["checks"] = checks;
  Json aut;
  aut["is_automorphism"] = r.automorphism.is_automorphism;
  Json achecks = Json::array();
  for (const auto &c : r.automorphism.checks)
    achecks.push_back(check_to_json(c));
  aut["checks"] = achecks;
  out["automorphism"] = aut;
  out["all_passed"] = r.all_passed();
  return out;
}

Json verification_to_json(const VerificationReport &r) {
  Json out;
  out["family"] = r.family;
  out["samples"] = r.samples;
  out["sound"] = r.sound;
  out["perturbations"] = r.perturbations;
  out["rejected"] = r.rejected;
  out["equivalent"] = r.equivalent;
  out["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
  out["passed"] = r.passed();
  return out;
}

FamilySpec family_spec_from_json(const std::string &family, const Json &params) {
  if (!params.is_object())
    throw ParseError("params must be a JSON object");
  if (family == "semisimple") {
    SemisimpleSpec s;
    if (params.contains("algebra"))
      s.algebra = params.at("algebra").get<std::string>();
    s.signs = signs_from_json(params,
                              catalog::by_name(s.algebra).decomposition().simple.size());
    return s;
  }
  if (family == "reductive") {
    ReductiveSpec s;
    if (params.contains("algebra"))
      s.algebra = params.at("algebra").get<std::string>();
    const LieAlgebra L = catalog::by_name(s.algebra);
    std::size_t zdim = 0;
    for (const auto &r : L.decomposition().center)
      zdim += r.size();
    s.signs = signs_from_json(params, L.decomposition().simple.size());
    s.center_rows = optional_matrix(params, "center_rows", zdim, L.dim());
    return s;
  }
  if (family == "gl") {
    GlnSpec s;
    s.n = count_from_json(require(params, "n"), "n");
    if (params.contains("sign"))
      s.sign = params.at("sign").get<int>();
    s.functional = params.contains("functional") ? vector_from_json(params.at("functional"))
                                                 : Vector(s.n * s.n);
    return s;
  }
  if (family == "heisenberg") {
    HeisenbergSpec s;
    s.n = count_from_json(require(params, "n"), "n");
    s.jhat = params.contains("jhat") ? matrix_from_json(params.at("jhat"))
                                     : Matrix::identity(2 * s.n);
    s.r = params.contains("r") ? rational_from_json(params.at("r")) : Rational(1);
    s.top_row = params.contains("R") ? vector_from_json(params.at("R")) : Vector(2 * s.n);
    return s;
  }
  if (family == "almost-abelian") {
    AlmostAbelianSpec s;
    s.a = matrix_from_json(require(params, "A"));
    if (!s.a.is_square() || s.a.empty())
      throw ParseError("A must be a nonempty square matrix");
    const std::size_t n = s.a.rows() + 1;
    const std::size_t m = normal_layout_center_dim(s.a);
    if (m + 2 == n) {
      AlmostAbelianCase2 p;
      p.b0 = optional_matrix(params, "B0", n - 2, n - 2);
      p.b1 = optional_matrix(params, "B1", n - 2, 2);
      p.c = params.contains("C") ? matrix_from_json(params.at("C")) : Matrix::identity(2);
      s.params = p;
    } else {
      const std::size_t k = n - m - 1;
      AlmostAbelianCase1 p;
      p.b0 = optional_matrix(params, "B0", m, m);
      p.b1 = optional_matrix(params, "B1", m, k);
      p.b2 = optional_matrix(params, "B2", m, 1);
      p.b3 = optional_matrix(params, "B3", k, 1);
      p.mu = params.contains("mu") ? rational_from_json(params.at("mu")) : Rational(1);
      s.params = p;
    }
    return s;
  }
  if (family == "minimal-nilradical") {
    MinimalNilradicalSpec s;
    s.n = count_from_json(require(params, "n"), "n");
    if (params.contains("copies")) {
      for (const auto &c : params.at("copies"))
        s.copies.push_back(matrix_from_json(c));
    } else {
      s.copies.assign(s.n / 2, Matrix::identity(2));
    }
    if (params.contains("center_row"))
      s.center_row = vector_from_json(params.at("center_row"));
    return s;
  }
  if (family == "sl2-semidirect") {
    Sl2SemidirectSpec s;
    if (params.contains("sign"))
      s.sign = params.at("sign").get<int>();
    return s;
  }
  throw ParseError("unknown family '" + family +
                   "' (semisimple, reductive, gl, heisenberg, almost-abelian, "
                   "minimal-nilradical, sl2-semidirect)");
}

Json read_file(const std::string &path) {
  try {
    if (path == "-")
      return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in)
      throw ParseError("cannot open '" + path + "'");
    return Json::parse(in);
  } catch (const Json::parse_error &e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

} // namespace lieortho::io
