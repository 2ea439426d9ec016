#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wspin/orbicurve.hpp"
#include "wspin/polynomial.hpp"
#include "wspin/rational.hpp"

namespace wspin {

// Machine-readable reports for the command-line surface. Exact quantities
// (weights, phases, degrees) serialize as strings "p/q" in lowest terms so
// they survive any JSON reader unchanged; measured quantities stay doubles.

// Weights, growth exponents, admissible integrability ranges, symmetry-group
// order and the nondegeneracy verdict (null when undecided).
nlohmann::ordered_json analyze_report(const QHPolynomial& w, std::uint64_t seed);

// Full enumeration of the diagonal symmetry group.
nlohmann::ordered_json group_report(const QHPolynomial& w);

// Mark classification, bundle degrees and admissibility; when p is supplied,
// also the per-variable index shift (null for variables where p is outside
// the admissible window).
nlohmann::ordered_json curve_report(const SpinCurveSpec& spec,
                                    const std::optional<Rational>& p);

// The one-variable polynomial certifying per-variable root localization.
nlohmann::ordered_json eliminate_report(const QHPolynomial& w, const std::string& var);

// Certified per-variable radii at the given gradient values.
nlohmann::ordered_json bound_certified_report(
    const QHPolynomial& w, const std::vector<std::complex<double>>& s);

// Monte-Carlo sup-ratio probe of the growth bound.
nlohmann::ordered_json bound_empirical_report(const QHPolynomial& w, int samples,
                                              std::uint64_t seed);

// Residue-energy identity check {r, u0, R, E, rel_err}.
nlohmann::ordered_json identity_report(int r, double u0);

// Flat "key: value" rendering of a report for --format text.
std::string render_text(const nlohmann::ordered_json& doc);

}  // namespace wspin
