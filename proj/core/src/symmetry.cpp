#include "wspin/symmetry.hpp"

#include <algorithm>

#include "wspin/error.hpp"
#include "wspin/linalg.hpp"
#include "wspin/weights.hpp"

namespace wspin {

PhaseVector phase_add(const PhaseVector& x, const PhaseVector& y) {
    if (x.a.size() != y.a.size()) throw InvalidParameter("phase vector size mismatch");
    PhaseVector out;
    out.a.reserve(x.a.size());
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        Rational s = x.a[i] + y.a[i];
        s -= floor_rational(s);  // reduce into [0,1)
        out.a.push_back(std::move(s));
    }
    return out;
}

bool in_symmetry_group(const QHPolynomial& w, const PhaseVector& a) {
    if (a.a.size() != w.variable_count()) return false;
    for (const auto& ai : a.a)
        if (!(ai >= 0 && ai < 1)) return false;
    for (const auto& row : w.exponent_matrix()) {
        Rational dot = 0;
        for (std::size_t j = 0; j < row.size(); ++j) dot += Rational(row[j]) * a.a[j];
        if (!is_integer(dot)) return false;
    }
    return true;
}

std::vector<PhaseVector> symmetry_group(const QHPolynomial& w) {
    infer_weights(w);  // validates existence/uniqueness; H is finite exactly then
    const std::size_t t = w.variable_count();
    const auto bmat = w.exponent_matrix();

    RationalMatrix full(bmat.size(), std::vector<Rational>(t));
    for (std::size_t i = 0; i < bmat.size(); ++i)
        for (std::size_t j = 0; j < t; ++j) full[i][j] = Rational(bmat[i][j]);

    const auto rows = independent_rows(full);
    if (rows.size() != t)
        throw NonUniqueWeights("exponent matrix has rank < t");

    RationalMatrix bprime(t, std::vector<Rational>(t));
    for (std::size_t i = 0; i < t; ++i) bprime[i] = full[rows[i]];
    const RationalMatrix binv = rational_inverse(bprime);

    // For a in [0,1)^t the image coordinates (B' a)_i lie in [0, sum_j b'_ij).
    std::vector<long> box(t);
    for (std::size_t i = 0; i < t; ++i) {
        Rational sum = 0;
        for (std::size_t j = 0; j < t; ++j) sum += bprime[i][j];
        box[i] = numerator(sum).convert_to<long>();
        if (box[i] <= 0) throw InvalidParameter("exponent row with nonpositive sum");
    }

    std::vector<PhaseVector> group;
    std::vector<long> m(t, 0);
    for (;;) {
        PhaseVector cand;
        cand.a.assign(t, Rational(0));
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j)
                cand.a[i] += binv[i][j] * Rational(m[j]);

        bool inside = std::all_of(cand.a.begin(), cand.a.end(),
                                  [](const Rational& x) { return x >= 0 && x < 1; });
        if (inside && in_symmetry_group(w, cand)) group.push_back(std::move(cand));

        std::size_t carry = 0;
        while (carry < t) {
            if (++m[carry] < box[carry]) break;
            m[carry] = 0;
            ++carry;
        }
        if (carry == t) break;
    }
    std::sort(group.begin(), group.end());
    return group;
}

}  // namespace wspin
