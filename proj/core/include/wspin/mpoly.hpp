#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wspin/polynomial.hpp"
#include "wspin/rational.hpp"

namespace wspin {

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed, ordered variable list. This is the working type of the elimination
// machinery; QHPolynomial stays the parser-facing canonical superpotential.
class MPoly {
public:
    struct TermLess {
        bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
            return canonical_term_less(a, b);
        }
    };
    using TermMap = std::map<std::vector<int>, Rational, TermLess>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> variables);
    MPoly(std::vector<std::string> variables, TermMap terms);

    static MPoly constant(std::vector<std::string> variables, const Rational& c);
    static MPoly variable(std::vector<std::string> variables, std::size_t index);
    // Embeds a QHPolynomial into a (possibly larger) ring; the ring must
    // contain all of p's variables.
    static MPoly from_qh(const QHPolynomial& p, std::vector<std::string> ring);

    const std::vector<std::string>& variables() const noexcept { return vars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    std::size_t variable_index(std::string_view name) const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly operator*(const Rational& c) const;
    bool operator==(const MPoly& o) const = default;

    MPoly pow(int e) const;
    MPoly derivative(std::size_t var) const;

    int degree_in(std::size_t var) const;  // -1 for the zero polynomial
    long total_degree() const;             // -1 for the zero polynomial
    // Coefficient polynomials of var^0 .. var^deg (exponent of `var` zeroed).
    std::vector<MPoly> coefficients_in(std::size_t var) const;
    // Coefficient of var^k.
    MPoly coefficient_of(std::size_t var, int k) const;

    // Substitutes 0 for the given variable.
    MPoly at_zero(std::size_t var) const;
    // Projects onto a sub-ring; throws if a dropped variable actually occurs.
    MPoly project(std::vector<std::string> ring) const;

    Rational evaluate_rational(std::span<const Rational> point) const;
    std::complex<double> evaluate_complex(std::span<const std::complex<double>> point) const;

    // Exact division; throws InvalidParameter when the quotient is not a
    // polynomial (used by the fraction-free determinant, where divisibility
    // is guaranteed).
    static MPoly exact_divide(const MPoly& num, const MPoly& den);

    // Same grammar as format_poly, terms in canonical order.
    std::string to_string() const;
    // Terms ordered by descending power of `main_var` (canonical within equal
    // powers) — the natural layout for elimination polynomials.
    std::string to_string_by_var(std::size_t main_var) const;

private:
    void check_same_ring(const MPoly& o) const;
    void prune();

    std::vector<std::string> vars_;
    TermMap terms_;
};

}  // namespace wspin
