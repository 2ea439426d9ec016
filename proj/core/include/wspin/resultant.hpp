#pragma once

#include <string>

#include "wspin/mpoly.hpp"
#include "wspin/polynomial.hpp"

namespace wspin {

// Determinant of a square matrix of exact polynomials by the one-step
// fraction-free (Bareiss) scheme; every division is exact.
MPoly bareiss_determinant(std::vector<std::vector<MPoly>> m);

// Resultant of f and g with respect to `var` as the determinant of the
// standard Sylvester matrix (deg f + deg g square, f-rows first). When
// exactly one argument has degree 0 in `var` the usual convention applies:
// Res(c, g) = c^{deg g}. Both degree 0 is an error.
MPoly sylvester_resultant(const MPoly& f, const MPoly& g, const std::string& var);

// The eliminated one-variable consequence of the gradient system
// dW/dx_j = s_j: a polynomial p in (x_i, s_1..s_t) with
//   p(u_i, s) = 0 for every solution u of the system.
// For t = 1 this is dW/dx - s itself; for t = 2 the Sylvester resultant of
// the two shifted partials with the other variable eliminated; t >= 3 throws
// UnsupportedArity. The result is sign-normalized so its leading
// x_i-coefficient (a constant) is positive, and the gradient symbols are
// named s1..st in the variable order of W.
MPoly elimination_poly(const QHPolynomial& w, const std::string& xi);

}  // namespace wspin
