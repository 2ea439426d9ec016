#pragma once

#include <vector>

#include "wspin/polynomial.hpp"
#include "wspin/rational.hpp"

namespace wspin {

// An element of the diagonal symmetry group: the phase vector a with
// coordinatewise action x_l :-> e^{2 pi i a_l} x_l, each a_l in [0,1) ∩ Q.
//
// Membership is characterized by the exponent lattice alone: a ∈ H iff
// B a ∈ Z^s. (The tempting containment H ⊆ μ_{d/k_1} x ... x μ_{d/k_t} fails
// whenever some k_i does not divide d — e.g. the y-variable of x^n + x y^2
// has d/k_y = 2n/(n-1) — so the lattice condition is the one used here.)
struct PhaseVector {
    std::vector<Rational> a;

    bool operator==(const PhaseVector&) const = default;
    // Lexicographic, for canonical group element ordering.
    bool operator<(const PhaseVector& o) const { return a < o.a; }
};

// Componentwise sum reduced mod 1 (the group law).
PhaseVector phase_add(const PhaseVector& x, const PhaseVector& y);

// Exact membership test: every a_l in [0,1) and B a integral.
bool in_symmetry_group(const QHPolynomial& w, const PhaseVector& a);

// Enumerates all of H, sorted lexicographically. Requires a valid unique
// weight system (so that H is finite). Enumeration picks t independent rows
// B' of B and walks the integer box m_i in [0, sum_j b'_ij), solving
// a = B'^{-1} m exactly and filtering by the remaining rows.
std::vector<PhaseVector> symmetry_group(const QHPolynomial& w);

}  // namespace wspin
