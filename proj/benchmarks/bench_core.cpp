#include <complex>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "wspin/polynomial.hpp"
#include "wspin/radial.hpp"
#include "wspin/resultant.hpp"
#include "wspin/root_bounds.hpp"
#include "wspin/symmetry.hpp"
#include "wspin/weights.hpp"

namespace {

void BM_ParseAndWeights(benchmark::State& state) {
    const std::string text = "x^3+x*y^3";
    for (auto _ : state) {
        const wspin::WeightProfile profile =
            wspin::growth_exponents(wspin::parse_poly(text));
        benchmark::DoNotOptimize(profile.delta0);
    }
}
BENCHMARK(BM_ParseAndWeights);

void BM_SymmetryGroup(benchmark::State& state) {
    // x^n + x*y^2 has a group of order 2n; n controls the enumeration size.
    const auto n = state.range(0);
    const wspin::QHPolynomial w =
        wspin::parse_poly("x^" + std::to_string(n) + "+x*y^2");
    for (auto _ : state) {
        const auto group = wspin::symmetry_group(w);
        benchmark::DoNotOptimize(group.size());
    }
}
BENCHMARK(BM_SymmetryGroup)->Arg(4)->Arg(16)->Arg(64);

void BM_EliminationPoly(benchmark::State& state) {
    const wspin::QHPolynomial w = wspin::parse_poly("x^3+x*y^3");
    for (auto _ : state) {
        const wspin::MPoly p = wspin::elimination_poly(w, "x");
        benchmark::DoNotOptimize(p.degree_in(0));
    }
}
BENCHMARK(BM_EliminationPoly);

void BM_SylvesterResultant(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const std::vector<std::string> ring = {"x", "y"};
    // Res_y of two dense bivariate polynomials of y-degree n.
    wspin::MPoly f(ring), g(ring);
    for (int i = 0; i <= n; ++i) {
        f += wspin::MPoly(ring, {{{1, i}, wspin::Rational(i + 1)}});
        g += wspin::MPoly(ring, {{{i % 2, i}, wspin::Rational(2 * i + 1)}});
    }
    for (auto _ : state) {
        const wspin::MPoly res = wspin::sylvester_resultant(f, g, "y");
        benchmark::DoNotOptimize(res.is_zero());
    }
}
BENCHMARK(BM_SylvesterResultant)->Arg(2)->Arg(4)->Arg(6);

void BM_GershgorinBound(benchmark::State& state) {
    wspin::RootBoundInput input;
    for (int i = 0; i < 8; ++i) {
        input.alpha.push_back({0.5 * i, -0.25 * i});
        input.rho.push_back(1.5);
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(wspin::gershgorin_bound(input));
}
BENCHMARK(BM_GershgorinBound);

void BM_GradientBound(benchmark::State& state) {
    const wspin::QHPolynomial w = wspin::parse_poly("x^3+x*y^2");
    const std::vector<std::complex<double>> s = {{1.0, 0.0}, {0.0, 2.0}};
    for (auto _ : state) {
        const wspin::GradientBound bound = wspin::gradient_bound(w, s);
        benchmark::DoNotOptimize(bound.D[0]);
    }
}
BENCHMARK(BM_GradientBound);

void BM_EmpiricalProbe(benchmark::State& state) {
    const wspin::QHPolynomial w = wspin::parse_poly("x^3+y^4");
    const int samples = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const wspin::EmpiricalBound bound = wspin::empirical_bound(w, samples, 7);
        benchmark::DoNotOptimize(bound.sup_ratio[0]);
    }
}
BENCHMARK(BM_EmpiricalProbe)->Arg(50)->Arg(200);

void BM_ResidueEnergy(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const wspin::ResiduePair pair = wspin::residue_pair(r, 1.0);
        benchmark::DoNotOptimize(pair.energy);
    }
}
BENCHMARK(BM_ResidueEnergy)->Arg(3)->Arg(7);

void BM_RadialProfileSampling(benchmark::State& state) {
    const int count = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const wspin::RadialProfile profile = wspin::radial_profile(
            3, wspin::RadialFamily::singular, 0.0, 1e-4, 1e4, count);
        benchmark::DoNotOptimize(profile.u_tilde.back());
    }
}
BENCHMARK(BM_RadialProfileSampling)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
