#include "wspin/radial.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>

#include "wspin/error.hpp"
#include "wspin/quadrature.hpp"

namespace wspin {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kQuadTol = 1e-10;  // default quadrature target for profiles

void require_order(int r) {
    if (r < 3) throw InvalidParameter("order r must be at least 3");
}

// G(x) = int_0^x (1 + s^r)^{-2/r} ds for x in [0, 1].
double g01(int r, double x) {
    if (x == 0.0) return 0.0;
    const double ex = -2.0 / r;
    return integrate([r, ex](double s) { return std::pow(1.0 + std::pow(s, r), ex); },
                     0.0, x);
}

// G on [0, inf), using G(1/x) = G(inf) - G(x) to stay on the unit interval.
double g_full(int r, double x) {
    if (x <= 1.0) return g01(r, x);
    return 2.0 * g01(r, 1.0) - g01(r, 1.0 / x);
}

// I(rho) = int_0^rho s^{2/r-1} (1 + s^2)^{-2/r} ds = (r/2) G(rho^{2/r}).
// The substitution s = sigma^{r/2} removes the endpoint singularity.
double big_i(int r, double rho) {
    return 0.5 * r * g_full(r, std::pow(rho, 2.0 / r));
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

double local_solution(int r, double c, double rho) {
    require_order(r);
    if (!(c > 0.0)) throw InvalidParameter("local profile constant must be positive");
    if (!(rho >= 0.0)) throw InvalidParameter("radius must be nonnegative");
    const double base =
        static_cast<double>(r) * r * (r - 2) * std::pow(rho, 2.0 / r) + c;
    return std::pow(base, -1.0 / (r - 2.0));
}

double global_solution(int r, double u0, double rho) {
    require_order(r);
    if (!(u0 > 0.0)) throw InvalidParameter("origin value u0 must be positive");
    if (!(rho >= 0.0)) throw InvalidParameter("radius must be nonnegative");
    if (rho == 0.0) return u0;
    const double base =
        2.0 * r * (r - 2) * big_i(r, rho) + std::pow(u0, -(r - 2.0));
    return std::pow(base, -1.0 / (r - 2.0));
}

double singular_solution(int r, double rho) {
    require_order(r);
    if (!(rho > 0.0)) throw InvalidParameter("radius must be positive");
    return std::pow(2.0 * r * (r - 2) * big_i(r, rho), -1.0 / (r - 2.0));
}

double ramond_integral(int r) {
    require_order(r);
    return r * g01(r, 1.0);
}

double residue_value(int r, double u0) {
    require_order(r);
    if (!(u0 > 0.0)) throw InvalidParameter("origin value u0 must be positive");
    const double tail_base =
        2.0 * r * (r - 2) * ramond_integral(r) + std::pow(u0, -(r - 2.0));
    return std::pow(u0, static_cast<double>(r)) -
           std::pow(tail_base, -static_cast<double>(r) / (r - 2.0));
}

double energy(int r, double u0) {
    require_order(r);
    if (!(u0 > 0.0)) throw InvalidParameter("origin value u0 must be positive");

    // Substituting rho = s^{r/2} on [0,1] and rho = s^{-r/2} on [1,inf)
    // flattens both the endpoint power and the tail; each half becomes a
    // bounded integral over the unit interval.
    const double a = static_cast<double>(r) * r * (r - 2);
    const double inv = std::pow(u0, -(r - 2.0));
    const double ginf = 2.0 * g01(r, 1.0);
    const double ex = 2.0 * (r - 1.0) / (r - 2.0);

    const auto weight = [r](double s) {
        return std::pow(1.0 + std::pow(s, r), -2.0 / r);
    };
    const auto inner = [&](double s) {
        return std::pow(a * g01(r, s) + inv, -ex) * weight(s);
    };
    const auto outer = [&](double s) {
        return std::pow(a * (ginf - g01(r, s)) + inv, -ex) * weight(s);
    };

    const double i1 = integrate(inner, 0.0, 1.0, kQuadTol, kQuadTol);
    const double i2 = integrate(outer, 0.0, 1.0, kQuadTol, kQuadTol);
    const double rrr = static_cast<double>(r) * r * r;
    return kPi * rrr * (i1 + i2);
}

ResiduePair residue_pair(int r, double u0) {
    return ResiduePair{residue_value(r, u0), energy(r, u0)};
}

const char* to_string(RadialFamily family) {
    switch (family) {
        case RadialFamily::local: return "local";
        case RadialFamily::global: return "global";
        case RadialFamily::singular: return "singular";
    }
    return "global";
}

RadialProfile radial_profile(int r, RadialFamily family, double param,
                             double rho_min, double rho_max, int count) {
    require_order(r);
    if (!(rho_min > 0.0) || !(rho_max > rho_min))
        throw InvalidParameter("need 0 < rho_min < rho_max");
    if (count < 2) throw InvalidParameter("need at least two grid points");

    RadialProfile profile;
    profile.r = r;
    profile.family = family;
    profile.param = param;
    profile.quad_tol = kQuadTol;
    profile.rho.resize(static_cast<std::size_t>(count));
    profile.u_tilde.resize(static_cast<std::size_t>(count));

    const double step = std::log(rho_max / rho_min) / (count - 1);
    for (int i = 0; i < count; ++i) {
        const double rho = rho_min * std::exp(step * i);
        profile.rho[static_cast<std::size_t>(i)] = rho;
        double value = 0.0;
        switch (family) {
            case RadialFamily::local: value = local_solution(r, param, rho); break;
            case RadialFamily::global: value = global_solution(r, param, rho); break;
            case RadialFamily::singular: value = singular_solution(r, rho); break;
        }
        profile.u_tilde[static_cast<std::size_t>(i)] = value;
    }
    if (family == RadialFamily::global) {
        const ResiduePair pair = residue_pair(r, param);
        profile.residue = pair.residue;
        profile.energy = pair.energy;
    }
    return profile;
}

std::string profile_csv(const RadialProfile& profile) {
    require_order(profile.r);
    if (profile.rho.size() != profile.u_tilde.size())
        throw InvalidParameter("profile columns have different lengths");
    std::string out = "rho,u_tilde,u_norm\n";
    for (std::size_t i = 0; i < profile.rho.size(); ++i) {
        const double rho = profile.rho[i];
        const double u = profile.u_tilde[i];
        out += format_double(rho);
        out += ',';
        out += format_double(u);
        out += ',';
        out += format_double(u * std::pow(rho, -1.0 / profile.r));
        out += '\n';
    }
    return out;
}

double ode_residual(const RadialProfile& profile) {
    require_order(profile.r);
    const std::size_t n = profile.rho.size();
    if (n != profile.u_tilde.size())
        throw InvalidParameter("profile columns have different lengths");
    if (n < 7) throw InvalidParameter("need at least seven grid points");

    const double h = std::log(profile.rho[1] / profile.rho[0]);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double hi = std::log(profile.rho[i + 1] / profile.rho[i]);
        if (std::abs(hi - h) > 1e-9 * std::abs(h))
            throw InvalidParameter("profile grid is not uniformly logarithmic");
    }

    // Sixth-order central first-derivative stencil in log(rho).
    static constexpr double kStencil[7] = {-1.0 / 60, 3.0 / 20, -3.0 / 4, 0.0,
                                           3.0 / 4,   -3.0 / 20, 1.0 / 60};
    const int r = profile.r;
    double worst = 0.0;
    for (std::size_t i = 3; i + 3 < n; ++i) {
        double d = 0.0;
        for (int k = -3; k <= 3; ++k)
            d += kStencil[k + 3] *
                 profile.u_tilde[static_cast<std::size_t>(static_cast<long>(i) + k)];
        d /= h;
        const double rho = profile.rho[i];
        const double u = profile.u_tilde[i];
        double rhs = -2.0 * r * std::pow(u, r - 1.0) * std::pow(rho, 2.0 / r - 1.0);
        if (profile.family != RadialFamily::local)
            rhs *= std::pow(1.0 + rho * rho, -2.0 / r);
        worst = std::max(worst, std::abs(d / rho - rhs));
    }
    return worst;
}

double fit_log_slope(const RadialProfile& profile) {
    require_order(profile.r);
    const std::size_t n = profile.rho.size();
    if (n != profile.u_tilde.size() || n < 2)
        throw InvalidParameter("profile needs at least two points");

    double sx = 0.0, sy = 0.0;
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = std::log(profile.rho[i]);
        ys[i] = std::log(profile.u_tilde[i]) - xs[i] / profile.r;
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / static_cast<double>(n);
    const double my = sy / static_cast<double>(n);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    if (den == 0.0) throw InvalidParameter("profile grid is degenerate");
    return num / den;
}

double blowup_exponent(int r, double window_lo, double window_hi) {
    require_order(r);
    if (!(window_lo > 0.0) || !(window_hi > window_lo) || !(window_hi <= 1.0))
        throw InvalidParameter("fit window must satisfy 0 < lo < hi <= 1");
    if (std::log(window_hi / window_lo) < 0.1)
        throw InvalidParameter("fit window too narrow for a slope fit");
    const RadialProfile profile =
        radial_profile(r, RadialFamily::singular, 0.0, window_lo, window_hi, 64);
    return fit_log_slope(profile);
}

Rational lp1_sup_radial(int r) {
    require_order(r);
    return Rational(2 * r, r - 1);
}

bool lp1_membership(int r, const Rational& p) {
    require_order(r);
    if (p <= 1) throw InvalidParameter("exponent p must exceed 1");
    return p < lp1_sup_radial(r);
}

HarnackReport harnack_ratio(int r, std::optional<double> u0, double theta,
                            double epsilon) {
    require_order(r);
    if (!(theta >= 0.0) || !(theta < 1.0))
        throw InvalidParameter("theta must lie in [0, 1)");
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw InvalidParameter("epsilon must lie in (0, 1)");
    if (u0 && !(*u0 > 0.0))
        throw InvalidParameter("origin value u0 must be positive");

    const auto value = [&](double rho) {
        return u0 ? global_solution(r, *u0, rho) : singular_solution(r, rho);
    };
    const auto ratio_at = [&](double eps) {
        return theta == 0.0 ? 1.0 : value(eps * (1.0 - theta)) / value(eps);
    };

    HarnackReport report;
    report.theta = theta;
    report.epsilon = epsilon;
    report.ratio = ratio_at(epsilon);
    const double singular_limit =
        std::pow(1.0 - theta, -2.0 / (static_cast<double>(r) * (r - 2)));
    report.limit = u0 ? 1.0 : singular_limit;

    report.sup_ratio = report.ratio;
    for (int k = 1; k <= 30; ++k)
        report.sup_ratio = std::max(report.sup_ratio, ratio_at(std::ldexp(1.0, -k)));
    // Anything below (a sliver above) the singular-family limit is bounded
    // independently of epsilon; the global family always sits below it.
    report.bounded = report.sup_ratio <= singular_limit * 1.01;
    return report;
}

}  // namespace wspin
