#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "wspin/rational.hpp"

namespace wspin {

// Closed-form radial profiles of the single-variable model of order r >= 3.
// All of them are functions of rho > 0 solving
//   du/drho = -2 r u^{r-1} rho^{2/r-1} (1 + rho^2)^{-2/r}
// (the "local" family omits the (1 + rho^2)^{-2/r} factor).

// (r^2 (r-2) rho^{2/r} + c)^{-1/(r-2)} with c > 0, rho >= 0.
double local_solution(int r, double c, double rho);

// Profile with value u0 > 0 at the origin:
//   (2 r (r-2) I(rho) + u0^{-(r-2)})^{-1/(r-2)},
// where I(rho) = int_0^rho s^{2/r-1} (1 + s^2)^{-2/r} ds.
double global_solution(int r, double u0, double rho);

// The u0 -> infinity limit (2 r (r-2) I(rho))^{-1/(r-2)}; blows up at 0.
double singular_solution(int r, double rho);

// I(infinity) = (1/2) B(1/r, 1/r), evaluated by quadrature.
double ramond_integral(int r);

// u0^r - u~(infinity)^r: the defect between the origin value and the decay
// of the profile at infinity. Positive and strictly increasing in u0.
double residue_value(int r, double u0);

// Dirichlet-type energy 2 pi r^2 int_0^inf u~^{2(r-1)} I'(rho) drho of the
// global profile, by quadrature on the two halves [0,1] and [1,inf) of a
// smoothing substitution. Analytically energy = pi * residue; the quadrature
// recomputes it independently so the identity is an end-to-end check.
double energy(int r, double u0);

struct ResiduePair {
    double residue;
    double energy;
};
ResiduePair residue_pair(int r, double u0);

enum class RadialFamily { local, global, singular };
const char* to_string(RadialFamily family);

// Sampled profile on a uniform logarithmic grid. param is c for the local
// family, u0 for the global one, and ignored for the singular one. residue
// and energy are filled for the global family only (NaN otherwise).
struct RadialProfile {
    int r = 0;
    RadialFamily family = RadialFamily::global;
    double param = 0.0;
    std::vector<double> rho;
    std::vector<double> u_tilde;
    double residue = std::numeric_limits<double>::quiet_NaN();
    double energy = std::numeric_limits<double>::quiet_NaN();
    double quad_tol = 1e-10;
};
RadialProfile radial_profile(int r, RadialFamily family, double param,
                             double rho_min, double rho_max, int count);

// CSV with header rho,u_tilde,u_norm where u_norm = u_tilde * rho^{-1/r} is
// the unrescaled solution magnitude.
std::string profile_csv(const RadialProfile& profile);

// Max deviation |(1/rho) du~/dlog(rho) - rhs| over the interior of the grid,
// with the derivative taken by a 7-point sixth-order stencil. Requires a
// uniform logarithmic grid of at least 7 points.
double ode_residual(const RadialProfile& profile);

// Least-squares slope of log(u_norm) against log(rho) over the grid.
double fit_log_slope(const RadialProfile& profile);

// The same fit for the singular family on a window 0 < lo < hi <= 1 of
// radii; approaches -1/(r-2) as the window moves toward 0.
double blowup_exponent(int r, double window_lo, double window_hi);

// Exact integrability threshold of the gradient of the blow-up profile:
// finite L^p energy on a disc exactly for 1 < p < 2r/(r-1).
Rational lp1_sup_radial(int r);
bool lp1_membership(int r, const Rational& p);

// Ratio u(eps (1-theta)) / u(eps) between the inner and outer radius of an
// annulus, for the global family (u0 supplied) or the singular one (u0
// absent). ratio is evaluated at the given eps; sup_ratio samples
// eps = 2^{-k} and `bounded` checks the samples stay below a constant
// independent of eps, namely 1% above the singular-family limit
// (1-theta)^{-2/(r(r-2))}. The global-family limit as eps -> 0 is 1.
struct HarnackReport {
    double theta = 0.0;
    double epsilon = 0.5;
    double ratio = 1.0;
    double limit = 1.0;
    double sup_ratio = 1.0;
    bool bounded = true;
};
HarnackReport harnack_ratio(int r, std::optional<double> u0, double theta,
                            double epsilon);

}  // namespace wspin
