#include "wspin/resultant.hpp"

#include <algorithm>

#include "wspin/error.hpp"
#include "wspin/weights.hpp"

namespace wspin {

MPoly bareiss_determinant(std::vector<std::vector<MPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) throw InvalidParameter("determinant of empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw InvalidParameter("determinant of non-square matrix");
    const auto ring = m[0][0].variables();
    if (n == 1) return m[0][0];

    int sign = 1;
    MPoly prev = MPoly::constant(ring, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MPoly(ring);  // singular: zero column tail
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = MPoly::exact_divide(num, prev);
            }
            m[i][k] = MPoly(ring);
        }
        prev = m[k][k];
    }
    MPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

MPoly sylvester_resultant(const MPoly& f, const MPoly& g, const std::string& var) {
    if (f.variables() != g.variables())
        throw InvalidParameter("resultant arguments live in different rings");
    const auto ring = f.variables();
    const std::size_t v = f.variable_index(var);
    if (f.is_zero() || g.is_zero())
        throw InvalidParameter("resultant of the zero polynomial");

    const int m = f.degree_in(v);
    const int n = g.degree_in(v);
    if (m == 0 && n == 0)
        throw DomainError("resultant: both arguments constant in '" + var + "'");
    if (m == 0) return f.pow(n);
    if (n == 0) return g.pow(m);

    const auto fc = f.coefficients_in(v);  // fc[k] multiplies var^k
    const auto gc = g.coefficients_in(v);
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<MPoly>> syl(size, std::vector<MPoly>(size, MPoly(ring)));
    // n rows of f coefficients in descending order, then m rows of g.
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k)
            syl[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] =
                fc[static_cast<std::size_t>(m - k)];
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k)
            syl[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + k)] =
                gc[static_cast<std::size_t>(n - k)];

    MPoly det = bareiss_determinant(std::move(syl));
    if (det.degree_in(v) > 0)
        throw DomainError("internal: resultant still involves '" + var + "'");
    return det;
}

MPoly elimination_poly(const QHPolynomial& w, const std::string& xi) {
    const std::size_t t = w.variable_count();
    if (t > 2)
        throw UnsupportedArity("elimination is implemented for t <= 2 variables");
    const std::size_t i = w.variable_index(xi);
    infer_weights(w);  // quasi-homogeneity underpins the structure results

    // Ring: original variables followed by the gradient symbols s1..st.
    std::vector<std::string> ring = w.variables();
    std::vector<std::string> svars;
    for (std::size_t j = 0; j < t; ++j) {
        std::string name = "s" + std::to_string(j + 1);
        if (std::find(ring.begin(), ring.end(), name) != ring.end())
            throw InvalidParameter("variable name '" + name +
                                   "' collides with a gradient symbol");
        svars.push_back(name);
    }
    ring.insert(ring.end(), svars.begin(), svars.end());

    const MPoly wp = MPoly::from_qh(w, ring);
    std::vector<MPoly> shifted;  // f_j = dW/dx_j - s_j
    for (std::size_t j = 0; j < t; ++j)
        shifted.push_back(wp.derivative(j) - MPoly::variable(ring, t + j));

    MPoly p(ring);
    if (t == 1) {
        p = shifted[0];
    } else {
        const std::size_t other = 1 - i;
        p = sylvester_resultant(shifted[0], shifted[1], w.variables()[other]);
        if (p.is_zero())
            throw DomainError("gradient polynomials share a factor; W is degenerate");
    }

    // Keep only (x_i, s1..st).
    std::vector<std::string> out_ring{w.variables()[i]};
    out_ring.insert(out_ring.end(), svars.begin(), svars.end());
    p = p.project(out_ring);

    // The leading x_i-coefficient is constant for quasi-homogeneous W; make
    // it positive so output is deterministic.
    const int deg = p.degree_in(0);
    if (deg < 0) throw DomainError("elimination produced a constant");
    const MPoly lead = p.coefficient_of(0, deg);
    if (!lead.is_constant())
        throw DomainError("internal: leading coefficient is not constant");
    if (lead.terms().begin()->second < 0) p = -p;
    return p;
}

}  // namespace wspin
