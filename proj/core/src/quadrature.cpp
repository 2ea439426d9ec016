#include "wspin/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <cstddef>
#include <queue>
#include <utility>
#include <vector>

#include "wspin/error.hpp"

namespace wspin {

namespace {

// One 15-point Gauss-Kronrod panel. Only the non-recursive part of the boost
// integrator is used: its built-in subdivision compares an error estimate
// from the reference interval [-1,1] against tolerances in the original
// scale, which spins forever when tight tolerances meet short intervals.
// The returned error estimate is rescaled here to the actual panel width.
struct Panel {
    double a, b, value, err;
    bool alive;
};

Panel make_panel(const std::function<double(double)>& f, double a, double b) {
    using Quad = boost::math::quadrature::gauss_kronrod<double, 15>;
    double raw_err = 0.0;
    const double value = Quad::integrate(f, a, b, 0, 0.0, &raw_err);
    return Panel{a, b, value, raw_err * (b - a) / 2.0, true};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, double rel_tol) {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw InvalidParameter("integration tolerances must be positive");
    if (!(a < b)) throw InvalidParameter("integration interval is empty");

    constexpr std::size_t kMaxPanels = 20000;
    const double min_width = (b - a) * 1e-15;

    std::vector<Panel> panels{make_panel(f, a, b)};
    std::priority_queue<std::pair<double, std::size_t>> worst;
    worst.push({panels[0].err, 0});
    double total = panels[0].value;
    double total_err = panels[0].err;

    while (total_err > abs_tol && total_err > rel_tol * std::abs(total) &&
           panels.size() < kMaxPanels && !worst.empty()) {
        const auto [err, idx] = worst.top();
        worst.pop();
        if (!panels[idx].alive) continue;
        const Panel parent = panels[idx];
        if (parent.b - parent.a <= min_width) break;  // cannot refine further

        panels[idx].alive = false;
        const double mid = parent.a + (parent.b - parent.a) / 2.0;
        const Panel left = make_panel(f, parent.a, mid);
        const Panel right = make_panel(f, mid, parent.b);
        total += left.value + right.value - parent.value;
        total_err += left.err + right.err - parent.err;
        worst.push({left.err, panels.size()});
        panels.push_back(left);
        worst.push({right.err, panels.size()});
        panels.push_back(right);
    }

    // Re-sum from scratch so incremental drift cannot leak into the result.
    total = 0.0;
    total_err = 0.0;
    for (const Panel& p : panels)
        if (p.alive) {
            total += p.value;
            total_err += p.err;
        }

    if (!std::isfinite(total))
        throw QuadratureFailure("integral evaluated to a non-finite value");
    if (total_err > abs_tol && total_err > rel_tol * std::abs(total))
        throw QuadratureFailure("integration error estimate " +
                                std::to_string(total_err) + " exceeds tolerance");
    return total;
}

}  // namespace wspin
