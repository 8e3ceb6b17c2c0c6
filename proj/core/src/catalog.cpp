#include "lieortho/catalog.hpp"

#include "lieortho/linalg.hpp"

#include <functional>
#include <stdexcept>

namespace lieortho::catalog {

namespace {

// Lie algebra spanned by the given n x n matrices under the commutator;
// `coords` expresses a matrix in that basis.
LieAlgebra matrix_algebra(const std::vector<Matrix> &basis,
                          const std::function<Vector(const Matrix &)> &coords,
                          std::vector<std::string> names, Decomposition d) {
  LieAlgebra::Builder b(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      b.set(i, j, coords(basis[i] * basis[j] - basis[j] * basis[i]));
  b.names(std::move(names));
  b.decomposition(std::move(d));
  return b.build();
}

Matrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

std::size_t parse_count(const std::string &s, const std::string &family) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size() || v < 0)
      throw std::invalid_argument("");
    return static_cast<std::size_t>(v);
  } catch (const std::exception &) {
    throw std::invalid_argument("bad parameter '" + s + "' for family " + family);
  }
}

} // namespace

LieAlgebra abelian(std::size_t n) {
  Decomposition d;
  if (n > 0)
    d.center.push_back({0, n});
  return LieAlgebra::Builder(n).decomposition(d).build();
}

LieAlgebra g2() { return LieAlgebra::Builder(2).set(0, 1, 1, 1).build(); }

LieAlgebra sl2_cross() {
  Decomposition d;
  d.simple.push_back({0, 3});
  d.levi.push_back({0, 3});
  d.semisimple = true;
  return LieAlgebra::Builder(3)
      .set(0, 1, 2, 1)
      .set(1, 2, 0, 1)
      .set(2, 0, 1, 1)
      .decomposition(d)
      .build();
}

LieAlgebra gln(std::size_t n) {
  if (n < 2)
    throw std::invalid_argument("gln requires n >= 2");
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      basis.push_back(matrix_unit(n, i, j));
      names.push_back("E" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
  auto coords = [n](const Matrix &m) {
    Vector v(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        v[i * n + j] = m(i, j);
    return v;
  };
  return matrix_algebra(basis, coords, names, {});
}

LieAlgebra sln(std::size_t n) {
  if (n < 2)
    throw std::invalid_argument("sln requires n >= 2");
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        basis.push_back(matrix_unit(n, i, j));
        names.push_back("E" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    basis.push_back(matrix_unit(n, i, i) - matrix_unit(n, i + 1, i + 1));
    names.push_back("H" + std::to_string(i + 1));
  }
  auto coords = [n](const Matrix &m) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j)
          v.push_back(m(i, j));
    // diag = sum h_k H_k  =>  h_k = d_1 + ... + d_k
    Rational partial;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      partial += m(k, k);
      v.push_back(partial);
    }
    return v;
  };
  Decomposition d;
  d.simple.push_back({0, n * n - 1});
  d.levi.push_back({0, n * n - 1});
  d.semisimple = true;
  return matrix_algebra(basis, coords, names, d);
}

LieAlgebra heisenberg(std::size_t n) {
  if (n < 1)
    throw std::invalid_argument("heisenberg requires n >= 1");
  const std::size_t dim = 2 * n + 1;
  LieAlgebra::Builder b(dim);
  std::vector<std::string> names{"e"};
  for (std::size_t j = 1; j <= n; ++j)
    names.push_back("p" + std::to_string(j));
  for (std::size_t j = 1; j <= n; ++j)
    names.push_back("q" + std::to_string(j));
  for (std::size_t j = 0; j < n; ++j)
    b.set(1 + j, 1 + n + j, 0, 1);
  Decomposition d;
  d.center.push_back({0, 1});
  return b.names(names).decomposition(d).build();
}

LieAlgebra almost_abelian(const Matrix &a) {
  if (!a.is_square())
    throw DimensionError("almost_abelian: A must be square");
  if (a.is_zero())
    throw std::invalid_argument("almost_abelian: A = 0 gives an abelian algebra");
  const std::size_t m = a.rows();
  LieAlgebra::Builder b(m + 1);
  for (std::size_t j = 0; j < m; ++j) {
    Vector v(m + 1);
    for (std::size_t i = 0; i < m; ++i)
      v[i] = a(i, j);
    b.set(m, j, v);
  }
  return b.build();
}

LieAlgebra sl2_semidirect_2g1() {
  Decomposition d;
  d.levi.push_back({0, 3});
  d.radical.push_back({3, 5});
  return LieAlgebra::Builder(5)
      .set(0, 1, 1, 2)
      .set(0, 2, 2, -2)
      .set(1, 2, 0, 1)
      .set(0, 3, 3, 1)
      .set(1, 4, 3, 1)
      .set(2, 3, 4, 1)
      .set(0, 4, 4, -1)
      .decomposition(d)
      .build();
}

LieAlgebra minimal_nilradical(std::size_t n) {
  if (n < 2)
    throw std::invalid_argument("minimal_nilradical requires n >= 2");
  std::vector<LieAlgebra> parts;
  if (n % 2 == 1)
    parts.push_back(abelian(1));
  for (std::size_t k = 0; k < n / 2; ++k)
    parts.push_back(g2());
  return direct_sum(parts);
}

std::vector<std::string> family_names() {
  return {"abelian:N", "g1",          "g2",          "sl2",
          "gl:N",      "sl:N",        "heisenberg:N", "sl2-semidirect",
          "minimal-nilradical:N"};
}

LieAlgebra by_name(const std::string &spec) {
  if (spec.find('+') != std::string::npos) {
    std::vector<LieAlgebra> parts;
    std::size_t start = 0;
    while (start <= spec.size()) {
      const auto plus = spec.find('+', start);
      const auto piece = spec.substr(start, plus == std::string::npos ? std::string::npos
                                                                      : plus - start);
      parts.push_back(by_name(piece));
      if (plus == std::string::npos)
        break;
      start = plus + 1;
    }
    return direct_sum(parts);
  }
  const auto colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  const std::string param = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto need = [&]() {
    if (param.empty())
      throw std::invalid_argument("family " + family + " needs a parameter (" + family +
                                  ":N)");
    return parse_count(param, family);
  };
  if (family == "abelian")
    return abelian(need());
  if (family == "g1")
    return abelian(1);
  if (family == "g2")
    return g2();
  if (family == "sl2")
    return sl2_cross();
  if (family == "gl" || family == "gln")
    return gln(need());
  if (family == "sl" || family == "sln")
    return sln(need());
  if (family == "heisenberg" || family == "h")
    return heisenberg(need());
  if (family == "sl2-semidirect" || family == "sl2_semidirect_2g1")
    return sl2_semidirect_2g1();
  if (family == "minimal-nilradical")
    return minimal_nilradical(need());
  throw std::invalid_argument("unknown algebra family '" + family + "'");
}

} // namespace lieortho::catalog
