#include "wspin/root_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "wspin/error.hpp"
#include "wspin/resultant.hpp"
#include "wspin/weights.hpp"

namespace wspin {

double gershgorin_bound(const RootBoundInput& input) {
    const std::size_t n = input.alpha.size();
    if (input.rho.size() != n)
        throw InvalidParameter("scaling vector size must match coefficient count");
    for (double r : input.rho)
        if (!(r > 0.0) || !std::isfinite(r))
            throw InvalidParameter("scaling entries must be positive and finite");
    if (n == 0) return 0.0;

    // Row sums of the companion matrix of x^n + sum alpha_l x^{l-1} after
    // conjugation by diag(rho): the subdiagonal 1's become rho_l/rho_{l-1}
    // and the last column carries rho_l |alpha_l| / rho_n.
    const double rho_n = input.rho[n - 1];
    double bound = input.rho[0] * std::abs(input.alpha[0]) / rho_n;
    for (std::size_t l = 2; l <= n; ++l) {
        const double row = input.rho[l - 1] / input.rho[l - 2] +
                           input.rho[l - 1] * std::abs(input.alpha[l - 1]) / rho_n;
        bound = std::max(bound, row);
    }
    return bound;
}

GradientBound gradient_bound(const QHPolynomial& w,
                             const std::vector<std::complex<double>>& s) {
    const std::size_t t = w.variable_count();
    if (s.size() != t)
        throw InvalidParameter("one gradient value per variable is required");
    const WeightProfile profile = growth_exponents(w);

    double scale = 1.0;  // S = sum_j |s_j| + 1
    for (const auto& v : s) scale += std::abs(v);

    GradientBound out;
    out.D.resize(t);
    out.C.resize(t);
    out.elimination.reserve(t);

    for (std::size_t i = 0; i < t; ++i) {
        MPoly elim = elimination_poly(w, w.variables()[i]);
        const double delta_i = to_double(profile.delta[i]);

        // elim lives in the ring (x_i, s1..st); substitute the gradient
        // values to get a one-variable polynomial in x_i.
        const int deg = elim.degree_in(0);
        std::vector<std::complex<double>> point(elim.variables().size(), 0.0);
        for (std::size_t j = 0; j < t; ++j) point[1 + j] = s[j];

        std::vector<std::complex<double>> coeff(static_cast<std::size_t>(deg) + 1);
        const auto by_power = elim.coefficients_in(0);
        for (int k = 0; k <= deg; ++k)
            coeff[static_cast<std::size_t>(k)] =
                by_power[static_cast<std::size_t>(k)].evaluate_complex(point);

        // The leading coefficient is a nonzero constant, so dividing it out
        // is always legitimate.
        const std::complex<double> lead = coeff[static_cast<std::size_t>(deg)];
        RootBoundInput rb;
        rb.alpha.resize(static_cast<std::size_t>(deg));
        rb.rho.resize(static_cast<std::size_t>(deg));
        for (int l = 1; l <= deg; ++l) {
            rb.alpha[static_cast<std::size_t>(l - 1)] =
                coeff[static_cast<std::size_t>(l - 1)] / lead;
            rb.rho[static_cast<std::size_t>(l - 1)] =
                std::pow(scale, static_cast<double>(l) * delta_i);
        }

        out.D[i] = gershgorin_bound(rb);
        out.C[i] = out.D[i] / std::pow(scale, delta_i);
        out.elimination.push_back(std::move(elim));
    }
    return out;
}

const char* to_string(EmpiricalBound::Verdict v) {
    switch (v) {
        case EmpiricalBound::Verdict::stabilized: return "stabilized";
        case EmpiricalBound::Verdict::unbounded: return "unbounded";
        case EmpiricalBound::Verdict::undetermined: return "undetermined";
    }
    return "undetermined";
}

EmpiricalBound empirical_bound(const QHPolynomial& w, int sample_count,
                               std::uint64_t seed) {
    if (sample_count <= 0)
        throw InvalidParameter("sample count must be positive");
    const std::size_t t = w.variable_count();
    const WeightProfile profile = growth_exponents(w);

    constexpr int kStages = 12;
    EmpiricalBound out;
    out.delta = profile.delta;
    out.radii.resize(kStages);
    out.sup_by_radius.assign(t, std::vector<double>(kStages, 0.0));
    out.sup_ratio.assign(t, 0.0);

    std::vector<double> delta_d(t);
    for (std::size_t i = 0; i < t; ++i) delta_d[i] = to_double(profile.delta[i]);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    constexpr double kTwoPi = 6.283185307179586476925286766559;

    std::vector<std::complex<double>> u(t);
    for (int stage = 0; stage < kStages; ++stage) {
        const double radius = std::ldexp(1.0, stage);  // 1, 2, 4, ...
        out.radii[static_cast<std::size_t>(stage)] = radius;

        for (int sample = 0; sample < sample_count; ++sample) {
            for (std::size_t i = 0; i < t; ++i) {
                // Uniform over the disc of the given radius.
                const double r = radius * std::sqrt(unit(rng));
                const double phi = kTwoPi * unit(rng);
                u[i] = std::polar(r, phi);
            }
            // The supremum ranges over all of C^t, but failures of the
            // scale-free bound concentrate on coordinate subspaces, where
            // entire gradient monomials vanish identically.  Uniform draws
            // approach a subspace only at rate radius/sqrt(samples), so a
            // quarter of the draws pin a random proper subset of coordinates
            // to exactly zero to probe those strata directly.
            if (t >= 2 && sample % 4 == 3) {
                const std::uint64_t subsets = (std::uint64_t{1} << t) - 2;
                const std::uint64_t mask = 1 + rng() % subsets;
                for (std::size_t i = 0; i < t; ++i)
                    if (mask >> i & 1) u[i] = 0.0;
            }
            const auto grad = w.gradient(u);
            double denom = 1.0;
            for (const auto& g : grad) denom += std::abs(g);
            for (std::size_t i = 0; i < t; ++i) {
                const double ratio = std::abs(u[i]) / std::pow(denom, delta_d[i]);
                out.sup_ratio[i] = std::max(out.sup_ratio[i], ratio);
            }
        }
        for (std::size_t i = 0; i < t; ++i)
            out.sup_by_radius[i][static_cast<std::size_t>(stage)] = out.sup_ratio[i];
    }

    // Verdict from the growth of the running supremum over the final three
    // radius doublings: essentially flat means the scale-free bound holds on
    // the sampled region, steady multiplicative growth means it cannot.
    out.verdict.resize(t);
    for (std::size_t i = 0; i < t; ++i) {
        const double early = out.sup_by_radius[i][kStages - 4];
        const double late = out.sup_by_radius[i][kStages - 1];
        if (early <= 0.0) {
            out.verdict[i] = EmpiricalBound::Verdict::undetermined;
            continue;
        }
        const double growth = late / early - 1.0;
        if (growth < 0.05)
            out.verdict[i] = EmpiricalBound::Verdict::stabilized;
        else if (growth > 0.30)
            out.verdict[i] = EmpiricalBound::Verdict::unbounded;
        else
            out.verdict[i] = EmpiricalBound::Verdict::undetermined;
    }
    return out;
}

}  // namespace wspin
