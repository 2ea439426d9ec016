#pragma once

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wspin/rational.hpp"

namespace wspin {

// One term c * prod_l x_l^{e_l}; exponents are aligned with the owning
// polynomial's variable list.
struct Monomial {
    Rational coeff;
    std::vector<int> exponents;

    bool operator==(const Monomial&) const = default;
};

// Canonical term order used everywhere: total degree ascending, ties broken
// lexicographically with the larger exponent vector first, so that
// "x^3 + x*y^2" and "x^3 + x*y^3" are already in canonical order.
bool canonical_term_less(const std::vector<int>& a, const std::vector<int>& b);

// A candidate superpotential: a nonzero polynomial with rational coefficients
// held in canonical form (sorted terms, like terms merged, no zero terms).
// Whether it actually admits a valid weight system is decided separately.
class QHPolynomial {
public:
    // Canonicalizes; throws ZeroPolynomial if everything cancels and
    // InvalidParameter on malformed input (negative exponents, arity
    // mismatches, duplicate variable names).
    QHPolynomial(std::vector<std::string> variables, std::vector<Monomial> monomials);

    const std::vector<std::string>& variables() const noexcept { return vars_; }
    const std::vector<Monomial>& monomials() const noexcept { return monos_; }
    std::size_t variable_count() const noexcept { return vars_.size(); }
    std::size_t monomial_count() const noexcept { return monos_.size(); }

    // s x t matrix of exponents, one row per monomial in canonical order.
    std::vector<std::vector<Integer>> exponent_matrix() const;

    std::complex<double> evaluate(std::span<const std::complex<double>> point) const;
    // All partial derivatives evaluated at a point.
    std::vector<std::complex<double>> gradient(std::span<const std::complex<double>> point) const;

    // Index of a variable by name; throws InvalidParameter if absent.
    std::size_t variable_index(std::string_view name) const;

    bool operator==(const QHPolynomial&) const = default;

private:
    std::vector<std::string> vars_;
    std::vector<Monomial> monos_;
};

// Parses the textual grammar
//   poly   := sign? term (sign term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := ident ('^' nat)?
//   coeff  := int ('/' nat)?
// Explicit '*' is mandatory (implicit multiplication is rejected; "xy" lexes
// as a single identifier). Variable order is first appearance unless an
// explicit list is supplied, in which case unknown identifiers are errors.
QHPolynomial parse_poly(std::string_view text);
QHPolynomial parse_poly(std::string_view text, std::vector<std::string> variables);

// Canonical text form; parse_poly(format_poly(p)) == p.
std::string format_poly(const QHPolynomial& p);

}  // namespace wspin
