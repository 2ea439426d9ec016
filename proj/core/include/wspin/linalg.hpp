#pragma once

#include <optional>
#include <vector>

#include "wspin/rational.hpp"

namespace wspin {

// Exact linear algebra over the rationals; matrices are dense row-major
// vectors of rows. Sizes here are tiny (numbers of variables / monomials),
// so plain Gauss elimination with exact arithmetic is the right tool.
using RationalMatrix = std::vector<std::vector<Rational>>;

std::size_t rational_rank(RationalMatrix m);

// Determinant of a square matrix.
Rational rational_det(RationalMatrix m);

// Solves A x = b. Returns nullopt when the system is inconsistent.
// `unique` is set to false when the solution space is positive-dimensional
// (the returned vector is then one particular solution).
std::optional<std::vector<Rational>> rational_solve(RationalMatrix a,
                                                    std::vector<Rational> b,
                                                    bool& unique);

// Inverse of a square nonsingular matrix; throws RankDeficient otherwise.
RationalMatrix rational_inverse(const RationalMatrix& m);

// Indices of a maximal set of linearly independent rows, scanned in order.
std::vector<std::size_t> independent_rows(const RationalMatrix& m);

}  // namespace wspin
