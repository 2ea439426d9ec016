#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "wspin/error.hpp"
#include "wspin/mpoly.hpp"
#include "wspin/polynomial.hpp"
#include "wspin/rational.hpp"
#include "wspin/resultant.hpp"
#include "wspin/weights.hpp"

using namespace wspin;

namespace {

const std::vector<std::string> kTwoVarCases = {
    "x^3+x*y^2", "x^4+x*y^2", "x^5+x*y^2", "x^6+x*y^2", "x^7+x*y^2",
    "x^8+x*y^2", "x^3+y^4", "x^3+x*y^3", "x^3+y^5",
};

// Exact rational gradient of w at a rational point.
std::vector<Rational> rational_gradient(const QHPolynomial& w,
                                        const std::vector<Rational>& u) {
    const MPoly f = MPoly::from_qh(w, w.variables());
    std::vector<Rational> grad;
    for (std::size_t j = 0; j < w.variable_count(); ++j)
        grad.push_back(f.derivative(j).evaluate_rational(u));
    return grad;
}

}  // namespace

TEST_CASE("pinned elimination polynomials for the cubic families") {
    const QHPolynomial d4 = parse_poly("x^3+x*y^2");
    CHECK(elimination_poly(d4, "x").to_string_by_var(0) ==
          "12*x^4 - 4*s1*x^2 + s2^2");
    CHECK(elimination_poly(d4, "y").to_string_by_var(0) ==
          "4*y^4 - 4*s1*y^2 + 3*s2^2");
    const QHPolynomial e6 = parse_poly("x^3+y^4");
    CHECK(elimination_poly(e6, "x").to_string_by_var(0) ==
          "27*x^6 - 27*s1*x^4 + 9*s1^2*x^2 - s1^3");
}

TEST_CASE("single-variable case reduces to the derivative itself") {
    CHECK(elimination_poly(parse_poly("x^3"), "x").to_string_by_var(0) ==
          "3*x^2 - s1");
    CHECK(elimination_poly(parse_poly("x^5"), "x").to_string_by_var(0) ==
          "5*x^4 - s1");
}

TEST_CASE("three or more variables are rejected for certified elimination") {
    CHECK_THROWS_AS(elimination_poly(parse_poly("x^3+y^3+z^3+x*y*z"), "x"),
                    UnsupportedArity);
}

TEST_CASE("unknown variables are rejected") {
    CHECK_THROWS_AS(elimination_poly(parse_poly("x^3+y^4"), "z"), InvalidParameter);
}

TEST_CASE("leading coefficient is a positive constant independent of the gradient values") {
    for (const auto& text : kTwoVarCases) {
        const QHPolynomial w = parse_poly(text);
        for (const auto& var : w.variables()) {
            const MPoly p = elimination_poly(w, var);
            const auto coeffs = p.coefficients_in(0);
            REQUIRE(!coeffs.empty());
            const MPoly& lead = coeffs.back();
            CHECK(lead.is_constant());
            CHECK(lead.evaluate_rational(std::vector<Rational>(
                      p.variables().size(), Rational(0))) > 0);
        }
    }
}

TEST_CASE("gradient-value exponents obey the growth bound") {
    // In each term, the total s-degree is at most (drop in main-variable
    // power) times the variable's growth exponent.
    for (const auto& text : kTwoVarCases) {
        const QHPolynomial w = parse_poly(text);
        const WeightProfile profile = growth_exponents(w);
        for (std::size_t i = 0; i < w.variable_count(); ++i) {
            const MPoly p = elimination_poly(w, w.variables()[i]);
            const int top = p.degree_in(0);
            for (const auto& [e, c] : p.terms()) {
                const int drop = top - e[0];
                long s_total = 0;
                for (std::size_t j = 1; j < e.size(); ++j) s_total += e[j];
                CHECK(Rational(s_total) <= Rational(drop) * profile.delta[i]);
            }
        }
    }
}

TEST_CASE("elimination vanishes on the graph of the gradient map") {
    std::mt19937_64 rng(91040);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 6);
    int checked = 0;
    while (checked < 200) {
        const QHPolynomial w =
            parse_poly(kTwoVarCases[static_cast<std::size_t>(checked) % kTwoVarCases.size()]);
        const std::size_t t = w.variable_count();
        std::vector<Rational> u;
        for (std::size_t j = 0; j < t; ++j) u.emplace_back(num(rng), den(rng));
        const std::vector<Rational> s = rational_gradient(w, u);

        for (std::size_t i = 0; i < t; ++i) {
            const MPoly p = elimination_poly(w, w.variables()[i]);
            // Point layout of the elimination ring: (x_i, s_1, ..., s_t).
            std::vector<Rational> point = {u[i]};
            point.insert(point.end(), s.begin(), s.end());
            CHECK(p.evaluate_rational(point) == Rational(0));
        }
        ++checked;
    }
}

TEST_CASE("elimination ring is the kept variable followed by gradient values") {
    const MPoly p = elimination_poly(parse_poly("x^3+x*y^2"), "y");
    CHECK(p.variables() == std::vector<std::string>{"y", "s1", "s2"});
}
