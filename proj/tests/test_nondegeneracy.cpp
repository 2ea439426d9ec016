#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <doctest.h>

#include "wspin/nondegeneracy.hpp"
#include "wspin/polynomial.hpp"

using namespace wspin;

TEST_CASE("the standard families are certified nondegenerate") {
    for (const char* text : {"x^3", "x^10", "x^3+x*y^2", "x^8+x*y^2", "x^3+y^4",
                             "x^3+x*y^3", "x^3+y^5"}) {
        const NondegeneracyReport rep = check_nondegenerate(parse_poly(text));
        CHECK(rep.verdict == NondegVerdict::proved);
        CHECK(rep.weights_unique);
        CHECK_FALSE(rep.witness.has_value());
    }
}

TEST_CASE("a mixed-term nondegenerate case passes") {
    const NondegeneracyReport rep = check_nondegenerate(parse_poly("x^2*y+y^5"));
    CHECK(rep.verdict == NondegVerdict::proved);
}

TEST_CASE("the quartic with a critical axis is refuted with an exact witness") {
    const QHPolynomial w = parse_poly("x^2*y^2+x^4");
    const NondegeneracyReport rep = check_nondegenerate(w);
    CHECK(rep.verdict == NondegVerdict::refuted);
    CHECK(rep.witness_exact);
    REQUIRE(rep.witness.has_value());

    // The witness is a genuine nonzero critical point.
    double norm = 0.0, grad_norm = 0.0;
    for (const auto& z : *rep.witness) norm += std::abs(z);
    for (const auto& g : w.gradient(*rep.witness)) grad_norm += std::abs(g);
    CHECK(norm > 0.5);
    CHECK(grad_norm == 0.0);
    CHECK(rep.detail.find("subspace") != std::string::npos);
}

TEST_CASE("a degenerate case whose critical locus avoids the axes is refuted") {
    // The two partials of (x^2+y^2)^2 share the factor x^2+y^2, so the
    // critical locus contains the whole conic, not just coordinate axes.
    const NondegeneracyReport rep = check_nondegenerate(parse_poly("x^4+2*x^2*y^2+y^4"));
    CHECK(rep.verdict == NondegVerdict::refuted);
}

TEST_CASE("reports are deterministic for a fixed seed") {
    const QHPolynomial w = parse_poly("x^2*y^2+x^4");
    const NondegeneracyReport a = check_nondegenerate(w, 7);
    const NondegeneracyReport b = check_nondegenerate(w, 7);
    CHECK(a.verdict == b.verdict);
    CHECK(a.detail == b.detail);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(*a.witness == *b.witness);
}

TEST_CASE("verdicts are stable across seeds") {
    for (std::uint64_t seed : {1ull, 2ull, 99ull, 20240823ull}) {
        CHECK(check_nondegenerate(parse_poly("x^3+x*y^3"), seed).verdict ==
              NondegVerdict::proved);
        CHECK(check_nondegenerate(parse_poly("x^2*y^2+x^4"), seed).verdict ==
              NondegVerdict::refuted);
    }
}
