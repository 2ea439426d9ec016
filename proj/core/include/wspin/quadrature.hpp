#pragma once

#include <functional>

namespace wspin {

// Adaptive Gauss-Kronrod integration over a finite interval with both an
// absolute and a relative error target. Throws QuadratureFailure when the
// reported error estimate satisfies neither target.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, double rel_tol = 1e-12);

}  // namespace wspin
