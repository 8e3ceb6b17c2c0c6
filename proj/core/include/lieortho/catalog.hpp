#pragma once

#include "lieortho/lie_algebra.hpp"
#include "lieortho/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace lieortho::catalog {

LieAlgebra abelian(std::size_t n);

// [e1, e2] = e2
LieAlgebra g2();

// [e1, e2] = e3, [e2, e3] = e1, [e3, e1] = e2
LieAlgebra sl2_cross();

// Matrix-unit basis E^{ij}, index i*n + j.
LieAlgebra gln(std::size_t n);
// Off-diagonal E^{ij} (row-major), then H_i = E^{ii} - E^{i+1,i+1}.
LieAlgebra sln(std::size_t n);

// Basis {e, p_1..p_n, q_1..q_n}, [p_j, q_j] = e.
LieAlgebra heisenberg(std::size_t n);

// Abelian ideal <e_1..e_{n-1}> and [e_n, e_j] = sum_i a_ij e_i.
LieAlgebra almost_abelian(const Matrix &a);

// sl2 semidirect 2g1: Levi <e1,e2,e3>, abelian radical <e4,e5>.
LieAlgebra sl2_semidirect_2g1();

// (n/2) g2 for even n, g1 + [n/2] g2 (g1 first) for odd n.
LieAlgebra minimal_nilradical(std::size_t n);

// Parses "name" or "name:param" and "a+b+..." direct sums, e.g. "sl2+g2",
// "heisenberg:2", "gl:3", "abelian:1". Throws std::invalid_argument for
// unknown families.
LieAlgebra by_name(const std::string &spec);

// Families accepted by by_name.
std::vector<std::string> family_names();

} // namespace lieortho::catalog
