#pragma once

#include "lieortho/classify.hpp"
#include "lieortho/lie_algebra.hpp"
#include "lieortho/matrix.hpp"
#include "lieortho/ortho.hpp"
#include "lieortho/subspace.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace lieortho::io {

// Keys keep insertion order so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Rationals are written as "p" or "p/q" strings; integers are also accepted
// on input.
Json to_json(const Rational &r);
Json to_json(const Vector &v);
Json to_json(const Matrix &m); // row-major list of rows
Rational rational_from_json(const Json &j);
Vector vector_from_json(const Json &j);
Matrix matrix_from_json(const Json &j);

// {"dim", "basis", "brackets": [{"i", "j", "result": {"k": "c"}}],
//  "decomposition": {...}} with 1-based indices and i < j. Ranges in the
// decomposition are inclusive [first, last] pairs.
Json algebra_to_json(const LieAlgebra &L);
// Throws ParseError on malformed input and JacobiError on an invalid tensor.
LieAlgebra algebra_from_json(const Json &j);

// {"matrix": [[...], ...]}, column j = image of basis vector j.
Json operator_to_json(const Operator &j);
Matrix operator_matrix_from_json(const Json &j);

// {"dim", "basis": [v_1, ...]} with the canonical basis vectors.
Json subspace_to_json(const Subspace &s);

Json check_to_json(const Check &c);
Json report_to_json(const InvarianceReport &r);
Json verification_to_json(const VerificationReport &r);

// Family parameters for the classify command. Keys per family:
//   semisimple:          {"algebra", "signs"}
//   reductive:           {"algebra", "signs", "center_rows"}
//   gl:                  {"n", "sign", "functional"}
//   heisenberg:          {"n", "jhat", "r", "R"}
//   almost-abelian:      {"A", "mu", "B0", "B1", "B2", "B3"} or {"A", "B0", "B1", "C"}
//   minimal-nilradical:  {"n", "copies", "center_row"}
//   sl2-semidirect:      {"sign"}
FamilySpec family_spec_from_json(const std::string &family, const Json &params);

Json read_file(const std::string &path); // "-" reads stdin

} // namespace lieortho::io
