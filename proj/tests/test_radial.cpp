#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "wspin/error.hpp"
#include "wspin/radial.hpp"
#include "wspin/rational.hpp"

using namespace wspin;

namespace {

std::vector<double> sample_radii() {
    return {0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0};
}

}  // namespace

TEST_CASE("closed-form profiles at pinned points") {
    // (9 * 1 + 1)^{-1} and (32 + 1)^{-1/2}.
    CHECK(local_solution(3, 1.0, 1.0) == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(local_solution(4, 1.0, 1.0) ==
          doctest::Approx(0.17407765595569785).epsilon(1e-14));
    CHECK(local_solution(3, 4.0, 0.0) ==
          doctest::Approx(0.25).epsilon(1e-14));
    CHECK(global_solution(3, 1.0, 0.0) == 1.0);
    CHECK(global_solution(5, 0.7, 0.0) == 0.7);
    // At large radius the global profile levels off at a computable constant.
    CHECK(global_solution(3, 1.0, 1e30) ==
          doctest::Approx(0.059172477333308486).epsilon(1e-10));
}

TEST_CASE("half-beta value of the full-line integral") {
    CHECK(ramond_integral(3) ==
          doctest::Approx(2.64995812542817494).epsilon(1e-13));
    CHECK(ramond_integral(8) ==
          doctest::Approx(7.82768657562636206).epsilon(1e-13));
    for (int r = 3; r <= 8; ++r) {
        const double expected = 0.5 * std::beta(1.0 / r, 1.0 / r);
        CHECK(ramond_integral(r) == doctest::Approx(expected).epsilon(1e-8));
    }
}

TEST_CASE("energy equals pi times the residue") {
    for (const int r : {3, 4, 5, 7}) {
        for (const double u0 : {0.5, 1.0, 2.0}) {
            const double res = residue_value(r, u0);
            const double en = energy(r, u0);
            CHECK(res > 0.0);
            const double rel =
                std::abs(en - 3.141592653589793238462643383279502884 * res) /
                std::abs(en);
            INFO("r=" << r << " u0=" << u0 << " rel=" << rel);
            CHECK(rel < 1e-8);
        }
    }
    // Frozen reference values.
    CHECK(residue_value(3, 1.0) ==
          doctest::Approx(0.9997928145486051).epsilon(1e-12));
    CHECK(energy(3, 1.0) == doctest::Approx(3.1409417612977606).epsilon(1e-12));
    CHECK(residue_value(5, 2.0) ==
          doctest::Approx(31.999743220931155).epsilon(1e-12));
    CHECK(energy(5, 2.0) == doctest::Approx(100.53015821963709).epsilon(1e-12));
}

TEST_CASE("residue pair bundles the two quadratures") {
    const ResiduePair pair = residue_pair(4, 1.5);
    CHECK(pair.residue == residue_value(4, 1.5));
    CHECK(pair.energy == energy(4, 1.5));
}

TEST_CASE("monotone degeneration toward the singular profile") {
    // The residue grows strictly with the origin value.
    double prev = 0.0;
    for (const double u0 : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
        const double res = residue_value(3, u0);
        CHECK(res > prev);
        prev = res;
    }
    // Pointwise, profiles with larger origin value dominate, and all of them
    // sit below the singular envelope.
    for (const double rho : sample_radii()) {
        double last = 0.0;
        for (const double u0 : {0.5, 1.0, 4.0, 100.0}) {
            const double v = global_solution(3, u0, rho);
            CHECK(v > last);
            last = v;
        }
        CHECK(last < singular_solution(3, rho));
    }
    // With a huge origin value the distinction all but disappears.
    for (const double rho : sample_radii()) {
        const double g = global_solution(3, 1e6, rho);
        const double s = singular_solution(3, rho);
        CHECK(std::abs(g - s) / s < 1e-3);
    }
}

TEST_CASE("sampled profiles satisfy the differential equation") {
    for (const int r : {3, 4, 5}) {
        for (const RadialFamily family :
             {RadialFamily::local, RadialFamily::global, RadialFamily::singular}) {
            const RadialProfile profile =
                radial_profile(r, family, 1.0, 0.1, 10.0, 64);
            const double dev = ode_residual(profile);
            INFO("r=" << r << " family=" << to_string(family) << " dev=" << dev);
            CHECK(dev < 1e-6);
        }
    }
}

TEST_CASE("profile sampling: grid, values, and attached invariants") {
    const RadialProfile p = radial_profile(3, RadialFamily::global, 1.0, 0.1,
                                           10.0, 21);
    REQUIRE(p.rho.size() == 21);
    REQUIRE(p.u_tilde.size() == 21);
    CHECK(p.rho.front() == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(p.rho.back() == doctest::Approx(10.0).epsilon(1e-12));
    // Uniform logarithmic spacing.
    const double step = std::log(p.rho[1] / p.rho[0]);
    for (std::size_t i = 0; i + 1 < p.rho.size(); ++i)
        CHECK(std::log(p.rho[i + 1] / p.rho[i]) ==
              doctest::Approx(step).epsilon(1e-9));
    for (std::size_t i = 0; i < p.rho.size(); ++i)
        CHECK(p.u_tilde[i] ==
              doctest::Approx(global_solution(3, 1.0, p.rho[i])).epsilon(1e-12));
    CHECK(p.residue == doctest::Approx(residue_value(3, 1.0)).epsilon(1e-12));
    CHECK(p.energy == doctest::Approx(energy(3, 1.0)).epsilon(1e-12));

    const RadialProfile loc = radial_profile(3, RadialFamily::local, 2.0, 0.1,
                                             10.0, 12);
    CHECK(std::isnan(loc.residue));
    CHECK(std::isnan(loc.energy));
    for (std::size_t i = 0; i < loc.rho.size(); ++i)
        CHECK(loc.u_tilde[i] ==
              doctest::Approx(local_solution(3, 2.0, loc.rho[i])).epsilon(1e-12));

    const RadialProfile sing = radial_profile(4, RadialFamily::singular, 0.0,
                                              0.5, 2.0, 8);
    CHECK(std::isnan(sing.residue));
    for (std::size_t i = 0; i < sing.rho.size(); ++i)
        CHECK(sing.u_tilde[i] ==
              doctest::Approx(singular_solution(4, sing.rho[i])).epsilon(1e-12));
}

TEST_CASE("profile CSV round-trips its numbers") {
    const RadialProfile p = radial_profile(3, RadialFamily::global, 1.0, 0.1,
                                           10.0, 9);
    const std::string csv = profile_csv(p);
    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "rho,u_tilde,u_norm");
    std::size_t row = 0;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string a, b, c;
        REQUIRE(std::getline(fields, a, ','));
        REQUIRE(std::getline(fields, b, ','));
        REQUIRE(std::getline(fields, c, ','));
        REQUIRE(row < p.rho.size());
        // Shortest round-trip formatting: parsing recovers the exact double.
        CHECK(std::stod(a) == p.rho[row]);
        CHECK(std::stod(b) == p.u_tilde[row]);
        CHECK(std::stod(c) ==
              doctest::Approx(p.u_tilde[row] * std::pow(p.rho[row], -1.0 / 3.0))
                  .epsilon(1e-14));
        ++row;
    }
    CHECK(row == p.rho.size());
}

TEST_CASE("blow-up rate of the singular profile") {
    for (const int r : {3, 4, 5}) {
        const double slope = blowup_exponent(r, 1e-4, 1e-2);
        const double expected = -1.0 / (r - 2);
        INFO("r=" << r << " slope=" << slope);
        CHECK(std::abs(slope - expected) <= 0.02 * std::abs(expected));
    }
}

TEST_CASE("zoom invariance of the local family") {
    for (const int r : {3, 4, 5}) {
        for (const double c : {0.5, 2.0}) {
            for (const double eps : {0.25, 4.0}) {
                const double rescale = std::pow(eps, 2.0 / (r * (r - 2.0)));
                const double cprime = c * std::pow(eps, -2.0 / r);
                for (const double rho : sample_radii()) {
                    CHECK(rescale * local_solution(r, c, eps * rho) ==
                          doctest::Approx(local_solution(r, cprime, rho))
                              .epsilon(1e-12));
                }
                // The rescaled parameter also reproduces the sampled profile.
                const RadialProfile zoomed = radial_profile(
                    r, RadialFamily::local, cprime, 0.1, 10.0, 32);
                CHECK(ode_residual(zoomed) < 1e-6);
            }
        }
    }
}

TEST_CASE("annulus oscillation ratios") {
    const HarnackReport sing = harnack_ratio(3, std::nullopt, 0.5, 1e-6);
    CHECK(sing.limit == doctest::Approx(1.5874010519681994).epsilon(1e-14));
    CHECK(sing.ratio == doctest::Approx(sing.limit).epsilon(1e-3));
    CHECK(sing.bounded);
    CHECK(sing.sup_ratio >= 1.0);
    CHECK(sing.sup_ratio <= 1.01 * sing.limit * (1.0 + 1e-12));

    const HarnackReport sing4 = harnack_ratio(4, std::nullopt, 0.5, 1e-6);
    CHECK(sing4.limit ==
          doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-14));
    CHECK(sing4.bounded);

    const HarnackReport glob = harnack_ratio(3, 1.0, 0.5, 1e-6);
    CHECK(glob.limit == 1.0);
    CHECK(glob.ratio == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(glob.bounded);
    CHECK(glob.theta == 0.5);
    CHECK(glob.epsilon == 1e-6);
}

TEST_CASE("gradient integrability threshold") {
    CHECK(lp1_sup_radial(3) == Rational(3));
    CHECK(lp1_sup_radial(4) == Rational(8, 3));
    CHECK(lp1_sup_radial(5) == Rational(5, 2));
    for (int r = 3; r < 60; ++r) {
        CHECK(lp1_sup_radial(r) == Rational(2 * r, r - 1));
        CHECK(lp1_sup_radial(r + 1) < lp1_sup_radial(r));
        CHECK(lp1_sup_radial(r) > 2);
    }
    // Strictly below the threshold is in; the threshold itself is out.
    CHECK(lp1_membership(3, Rational(2)));
    CHECK(lp1_membership(3, Rational(5, 2)));
    CHECK_FALSE(lp1_membership(3, Rational(3)));
    CHECK_FALSE(lp1_membership(3, Rational(7, 2)));
    CHECK(lp1_membership(5, Rational(9, 4)));
    CHECK_FALSE(lp1_membership(5, Rational(5, 2)));
    CHECK_THROWS_AS(lp1_membership(3, Rational(1)), InvalidParameter);
    CHECK_THROWS_AS(lp1_membership(3, Rational(1, 2)), InvalidParameter);
}

TEST_CASE("parameter validation across the module") {
    CHECK_THROWS_AS(local_solution(2, 1.0, 1.0), InvalidParameter);
    CHECK_THROWS_AS(local_solution(3, 0.0, 1.0), InvalidParameter);
    CHECK_THROWS_AS(local_solution(3, -1.0, 1.0), InvalidParameter);
    CHECK_THROWS_AS(local_solution(3, 1.0, -0.5), InvalidParameter);
    CHECK_THROWS_AS(global_solution(3, 0.0, 1.0), InvalidParameter);
    CHECK_THROWS_AS(global_solution(3, -2.0, 1.0), InvalidParameter);
    CHECK_THROWS_AS(singular_solution(3, 0.0), InvalidParameter);
    CHECK_THROWS_AS(singular_solution(2, 1.0), InvalidParameter);
    CHECK_THROWS_AS(ramond_integral(2), InvalidParameter);
    CHECK_THROWS_AS(residue_value(3, 0.0), InvalidParameter);
    CHECK_THROWS_AS(energy(3, -1.0), InvalidParameter);
    CHECK_THROWS_AS(radial_profile(3, RadialFamily::global, 1.0, 0.0, 1.0, 10),
                    InvalidParameter);
    CHECK_THROWS_AS(radial_profile(3, RadialFamily::global, 1.0, 2.0, 1.0, 10),
                    InvalidParameter);
    CHECK_THROWS_AS(radial_profile(3, RadialFamily::global, 1.0, 0.1, 1.0, 1),
                    InvalidParameter);
    CHECK_THROWS_AS(blowup_exponent(3, 0.0, 0.5), InvalidParameter);
    CHECK_THROWS_AS(blowup_exponent(3, 0.5, 0.4), InvalidParameter);
    CHECK_THROWS_AS(blowup_exponent(3, 0.5, 1.5), InvalidParameter);
    CHECK_THROWS_AS(blowup_exponent(3, 0.5, 0.52), InvalidParameter);
    CHECK_THROWS_AS(harnack_ratio(3, std::nullopt, -0.1, 0.5), InvalidParameter);
    CHECK_THROWS_AS(harnack_ratio(3, std::nullopt, 1.0, 0.5), InvalidParameter);
    CHECK_THROWS_AS(harnack_ratio(3, std::nullopt, 0.5, 0.0), InvalidParameter);
    CHECK_THROWS_AS(harnack_ratio(3, std::nullopt, 0.5, 1.0), InvalidParameter);
    CHECK_THROWS_AS(harnack_ratio(3, -1.0, 0.5, 0.5), InvalidParameter);

    // A short profile cannot support the seven-point stencil.
    const RadialProfile tiny =
        radial_profile(3, RadialFamily::global, 1.0, 0.1, 1.0, 5);
    CHECK_THROWS_AS(ode_residual(tiny), InvalidParameter);
    // Nor can a non-logarithmic grid.
    RadialProfile skewed = radial_profile(3, RadialFamily::global, 1.0, 0.1,
                                          1.0, 8);
    skewed.rho[3] *= 1.01;
    CHECK_THROWS_AS(ode_residual(skewed), InvalidParameter);
    RadialProfile ragged = tiny;
    ragged.u_tilde.pop_back();
    CHECK_THROWS_AS(fit_log_slope(ragged), InvalidParameter);
}
