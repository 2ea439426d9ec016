#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wspin/polynomial.hpp"
#include "wspin/rational.hpp"
#include "wspin/symmetry.hpp"
#include "wspin/weights.hpp"

namespace wspin {

// A marked point: a label plus the symmetry-group element describing the
// local action on the structure bundles.
struct Mark {
    std::string label;
    PhaseVector decoration;
};

// Genus-g curve with marked points decorated by elements of the symmetry
// group of the superpotential.
struct SpinCurveSpec {
    int genus = 0;
    QHPolynomial w;
    std::vector<Mark> marks;
};

// Throws unless genus >= 0, labels are unique, every decoration has one
// phase per variable and lies in the symmetry group (DecorationNotInGroup).
void validate_spec(const SpinCurveSpec& spec);

// Per-variable and per-monomial Ramond bookkeeping. A bundle is Ramond at a
// mark when the local action on it is trivial (phase 0); a monomial is
// Ramond there when every variable it involves is.
struct MarkClassification {
    std::vector<std::vector<Rational>> phase;      // [mark][variable] a_j(h_l)
    std::vector<std::vector<Rational>> c;          // [mark][variable] a_j - q_j
    std::vector<std::vector<bool>> ramond;         // [mark][variable]
    std::vector<std::vector<bool>> monomial_ramond;  // [mark][monomial]
};
MarkClassification classify_marks(const SpinCurveSpec& spec);

// Degrees of the desingularized bundles:
//   deg_j = q_j (2g - 2 + k) - sum_l a_j(h_l),
// the unique solution of the per-monomial constraints
//   sum_j b_ij deg_j = (2g - 2) - sum_l sum_j b_ij (a_j(h_l) - q_j).
// The spec is admissible when every degree is an integer.
struct DegreeReport {
    std::vector<Rational> deg;
    bool admissible = false;
};
DegreeReport bundle_degrees(const SpinCurveSpec& spec);

// Weighted-space data for the linearized problem in variable j at
// integrability exponent p: per-mark weight kappa_{j,l}(p) = -a_j + q_j - 2/p
// together with the non-resonance and growth conditions controlling when the
// weighted estimate (and the Fredholm property) holds.
struct FredholmReport {
    std::size_t variable = 0;
    Rational p;
    std::vector<Rational> kappa;            // per mark
    std::vector<bool> mark_nonresonant;     // (i) per mark: a - q + 2/p not in Z
    bool condition_i = false;               // all marks nonresonant
    bool condition_ii = false;              // p < 2/q_j whenever some c_{jl} < 0
    bool valid = false;                     // (i) and (ii)
    bool fredholm = false;  // additionally a - q + 2/p avoids {1,2} and p < 2/q_j
};
FredholmReport fredholm_weights(const SpinCurveSpec& spec, std::size_t j,
                                const Rational& p);

// Number of eigenvalue crossings when the weight moves from kappa1 to kappa2
// (componentwise, one component per cylinder end): each integer strictly
// between contributes one to the index. Throws SpectrumTouched when a
// component of either vector is itself an integer.
int index_change(const std::vector<Rational>& kappa1,
                 const std::vector<Rational>& kappa2);

// #{marks with c_{jl} < 0}: the index correction between the weighted
// cylinder model and the unweighted problem, valid for 2 < p below the
// variable's critical exponent (POutOfRange otherwise).
int index_shift(const SpinCurveSpec& spec, std::size_t j, const Rational& p);

// Residue pairing: boundary values are supplied per mark label, one complex
// value per variable, exactly at the marks carrying at least one Ramond
// monomial. R sums those monomials at those values; everything else pairs to
// zero.
std::complex<double> residue_sum(
    const SpinCurveSpec& spec,
    const std::map<std::string, std::vector<std::complex<double>>>& boundary_values);

// JSON form {genus, superpotential, marks: [{label, phases: ["p/q", ...]}]}.
nlohmann::ordered_json curve_spec_to_json(const SpinCurveSpec& spec);
SpinCurveSpec curve_spec_from_json(const nlohmann::json& doc);

}  // namespace wspin
