#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "wspin/mpoly.hpp"
#include "wspin/polynomial.hpp"
#include "wspin/rational.hpp"

namespace wspin {

// Weight and growth data of a quasi-homogeneous polynomial. All entries are
// exact rationals; q_i = k_i/d with gcd(k_1,...,k_t,d) = 1.
struct WeightProfile {
    std::vector<Rational> q;      // per-variable weights, each in (0,1)
    Integer d;                    // common denominator
    std::vector<Integer> k;       // integer numerators, q_i = k_i/d
    Rational delta_min;           // min_i q_i

    // Filled by growth_exponents:
    std::vector<Rational> delta;                  // q_i / min_j (1 - q_j)
    Rational delta0;                              // max_i delta_i
    std::vector<std::optional<Rational>> kappa;   // q_i/(1-2 q_i); empty when q_i >= 1/2
};

// Solves B q = 1 exactly. Throws NoWeightSystem (inconsistent),
// NonUniqueWeights (rank B < t) or WeightOutOfRange (some q_i outside (0,1)).
WeightProfile infer_weights(const QHPolynomial& w);

// infer_weights plus the growth/decay exponent fields.
WeightProfile growth_exponents(const QHPolynomial& w);

// Sobolev/compactness exponent ranges determined by the weights.
struct CompactnessReport {
    // Uniform first-derivative range: [2, lp1_sup), lp1_sup = 2/(1 - delta_min).
    Rational lp1_sup;
    // Per-variable plain-L^p sup 2(1 - 2 q_i)/q_i (open endpoint); the range
    // (2, sup) is empty when q_i >= 1/2.
    std::vector<Rational> lp_sup;
    bool inner_applicable;    // all q_i <= 1/2
    bool strong_applicable;   // all q_i <  1/2 (every per-variable range nonempty)
};
CompactnessReport compactness_ranges(const QHPolynomial& w);

// Sum_i q_i x_i dW/dx_i - W as an exact polynomial; identically zero whenever
// the weight system is valid. Kept as a genuine computation so it doubles as
// a self-check of the symbolic layer.
MPoly euler_defect(const QHPolynomial& w);

// The same residual evaluated in floating point at a given point.
std::complex<double> euler_check(const QHPolynomial& w,
                                 std::span<const std::complex<double>> point);

}  // namespace wspin
