#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "wspin/mpoly.hpp"
#include "wspin/polynomial.hpp"
#include "wspin/rational.hpp"

namespace wspin {

// Monic polynomial x^N + sum_{l=1}^N alpha[l-1] x^{l-1} together with a
// positive scaling vector rho used to conjugate its companion matrix.
struct RootBoundInput {
    std::vector<std::complex<double>> alpha;
    std::vector<double> rho;
};

// Radius of a disc containing every root:
//   D = max( rho_1 |alpha_1| / rho_N,
//            max_{2<=l<=N} rho_l/rho_{l-1} + rho_l |alpha_l| / rho_N ),
// the row bound of the diagonally rescaled companion matrix. N = 0 gives 0.
double gershgorin_bound(const RootBoundInput& input);

// Certified per-variable localization of gradient solutions dW/dx = s:
// builds the elimination polynomial for each variable, specializes s, and
// applies gershgorin_bound with rho_l = (sum_j |s_j| + 1)^{l delta_i}.
// Every solution u of the system then satisfies |u_i| <= D_i, and
// C_i = D_i / (sum_j |s_j| + 1)^{delta_i} is the scale-free constant.
struct GradientBound {
    std::vector<double> D;
    std::vector<double> C;
    std::vector<MPoly> elimination;  // per variable, in (x_i, s1..st)
};
GradientBound gradient_bound(const QHPolynomial& w,
                             const std::vector<std::complex<double>>& s);

// Monte-Carlo probe of the growth estimate |u_i| <= C (sum_j |dW/dx_j(u)|+1)^{delta_i}:
// samples complex polydiscs of doubling radius and tracks the running
// supremum of ratio_i = |u_i| / (sum_j |dW_j(u)| + 1)^{delta_i}.
struct EmpiricalBound {
    enum class Verdict { stabilized, unbounded, undetermined };

    std::vector<double> radii;                      // polydisc radii, doubling
    std::vector<std::vector<double>> sup_by_radius; // [variable][stage], cumulative
    std::vector<double> sup_ratio;                  // final suprema
    std::vector<Verdict> verdict;                   // per variable
    std::vector<Rational> delta;                    // exponents used
};
EmpiricalBound empirical_bound(const QHPolynomial& w, int sample_count,
                               std::uint64_t seed);

const char* to_string(EmpiricalBound::Verdict v);

}  // namespace wspin
