#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wspin/polynomial.hpp"

namespace wspin {

enum class NondegVerdict { proved, refuted, inconclusive };

// Result of the isolated-singularity check. `proved` and `refuted` are exact
// for t <= 2; for t >= 3 `refuted` may rest on a numeric witness (then
// witness_exact is false and `residual` reports |grad W| there) and `proved`
// is never claimed — the best positive answer is `inconclusive`.
struct NondegeneracyReport {
    NondegVerdict verdict = NondegVerdict::inconclusive;
    bool weights_unique = false;
    std::optional<std::vector<std::complex<double>>> witness;  // nonzero critical point
    bool witness_exact = false;
    double residual = 0.0;
    std::string detail;
};

// Decides whether the only critical point of W is the origin.
//   t = 1: trivial (a valid weight system forces W = c x^d).
//   t = 2: exact, via axis restrictions of the two partials plus the
//          structure of their resultants (quasi-homogeneous resultants in one
//          variable are monomials, so a nonzero resultant confines common
//          zeros to the axes).
//   t >= 3: exact coordinate-subspace sweep (catches partials vanishing
//           identically on a subspace), then a seeded Gauss-Newton hunt for a
//           nontrivial zero of the gradient.
NondegeneracyReport check_nondegenerate(const QHPolynomial& w, std::uint64_t seed = 20240823);

}  // namespace wspin
