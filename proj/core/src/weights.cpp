#include "wspin/weights.hpp"

#include <algorithm>

#include "wspin/error.hpp"
#include "wspin/linalg.hpp"

namespace wspin {

WeightProfile infer_weights(const QHPolynomial& w) {
    const std::size_t t = w.variable_count();
    const auto bmat = w.exponent_matrix();

    RationalMatrix a(bmat.size(), std::vector<Rational>(t));
    std::vector<Rational> rhs(bmat.size(), Rational(1));
    for (std::size_t i = 0; i < bmat.size(); ++i)
        for (std::size_t j = 0; j < t; ++j) a[i][j] = Rational(bmat[i][j]);

    bool unique = false;
    auto sol = rational_solve(a, rhs, unique);
    if (!sol) throw NoWeightSystem("no rational weight system solves B q = 1");
    if (!unique)
        throw NonUniqueWeights("exponent matrix has rank < t; weights are not unique");

    WeightProfile profile;
    profile.q = *sol;
    for (const auto& qi : profile.q)
        if (!(qi > 0 && qi < 1))
            throw WeightOutOfRange("weight " + to_string(qi) + " outside (0,1)");

    Integer d = 1;
    for (const auto& qi : profile.q) {
        const Integer den = denominator(qi);
        d = d / gcd(d, den) * den;  // lcm
    }
    profile.d = d;
    for (const auto& qi : profile.q)
        profile.k.push_back(numerator(qi) * (d / denominator(qi)));

    profile.delta_min = *std::min_element(profile.q.begin(), profile.q.end());
    return profile;
}

WeightProfile growth_exponents(const QHPolynomial& w) {
    WeightProfile profile = infer_weights(w);
    Rational min_coweight = 1 - profile.q[0];
    for (const auto& qi : profile.q) min_coweight = std::min(min_coweight, Rational(1 - qi));

    for (const auto& qi : profile.q) {
        profile.delta.push_back(qi / min_coweight);
        if (qi < Rational(1, 2))
            profile.kappa.emplace_back(qi / (1 - 2 * qi));
        else
            profile.kappa.emplace_back(std::nullopt);
    }
    profile.delta0 = *std::max_element(profile.delta.begin(), profile.delta.end());
    return profile;
}

CompactnessReport compactness_ranges(const QHPolynomial& w) {
    const WeightProfile profile = infer_weights(w);
    CompactnessReport report;
    report.lp1_sup = Rational(2) / (1 - profile.delta_min);
    report.inner_applicable = true;
    report.strong_applicable = true;
    for (const auto& qi : profile.q) {
        report.lp_sup.push_back(Rational(2) * (1 - 2 * qi) / qi);
        if (qi > Rational(1, 2)) report.inner_applicable = false;
        if (qi >= Rational(1, 2)) report.strong_applicable = false;
    }
    return report;
}

MPoly euler_defect(const QHPolynomial& w) {
    const WeightProfile profile = infer_weights(w);
    const MPoly poly = MPoly::from_qh(w, w.variables());
    MPoly acc(w.variables());
    for (std::size_t i = 0; i < w.variable_count(); ++i) {
        const MPoly xi = MPoly::variable(w.variables(), i);
        acc += (xi * poly.derivative(i)) * profile.q[i];
    }
    return acc - poly;
}

std::complex<double> euler_check(const QHPolynomial& w,
                                 std::span<const std::complex<double>> point) {
    const WeightProfile profile = infer_weights(w);
    const auto grad = w.gradient(point);
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < grad.size(); ++i)
        acc += to_double(profile.q[i]) * point[i] * grad[i];
    return acc - w.evaluate(point);
}

}  // namespace wspin
