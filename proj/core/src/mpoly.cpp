#include "wspin/mpoly.hpp"

#include <algorithm>
#include <optional>

#include "wspin/error.hpp"

namespace wspin {

namespace {

std::complex<double> complex_pow(std::complex<double> base, int e) {
    std::complex<double> acc(1.0, 0.0);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace

MPoly::MPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MPoly::MPoly(std::vector<std::string> variables, TermMap terms)
    : vars_(std::move(variables)), terms_(std::move(terms)) {
    for (const auto& [e, c] : terms_)
        if (e.size() != vars_.size())
            throw InvalidParameter("term arity does not match ring");
    prune();
}

MPoly MPoly::constant(std::vector<std::string> variables, const Rational& c) {
    MPoly p(std::move(variables));
    if (c != 0) p.terms_[std::vector<int>(p.vars_.size(), 0)] = c;
    return p;
}

MPoly MPoly::variable(std::vector<std::string> variables, std::size_t index) {
    MPoly p(std::move(variables));
    if (index >= p.vars_.size()) throw InvalidParameter("variable index out of range");
    std::vector<int> e(p.vars_.size(), 0);
    e[index] = 1;
    p.terms_[std::move(e)] = 1;
    return p;
}

MPoly MPoly::from_qh(const QHPolynomial& p, std::vector<std::string> ring) {
    MPoly out(std::move(ring));
    std::vector<std::size_t> where;
    for (const auto& v : p.variables()) where.push_back(out.variable_index(v));
    for (const auto& m : p.monomials()) {
        std::vector<int> e(out.vars_.size(), 0);
        for (std::size_t i = 0; i < where.size(); ++i) e[where[i]] = m.exponents[i];
        out.terms_[std::move(e)] += m.coeff;
    }
    out.prune();
    return out;
}

bool MPoly::is_constant() const noexcept {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

std::size_t MPoly::variable_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw InvalidParameter("unknown variable '" + std::string(name) + "'");
}

void MPoly::check_same_ring(const MPoly& o) const {
    if (vars_ != o.vars_) throw InvalidParameter("mixed polynomial rings");
}

void MPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

MPoly MPoly::operator-() const {
    MPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) it->second += c;
    }
    prune();
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, Rational(-c));
        if (!inserted) it->second -= c;
    }
    prune();
    return *this;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly out = *this;
    out += o;
    return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly out = *this;
    out -= o;
    return out;
}

MPoly MPoly::operator*(const MPoly& o) const {
    check_same_ring(o);
    MPoly out(vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.terms_[std::move(e)] += ca * cb;
        }
    }
    out.prune();
    return out;
}

MPoly MPoly::operator*(const Rational& c) const {
    MPoly out(vars_);
    if (c == 0) return out;
    for (const auto& [e, coeff] : terms_) out.terms_[e] = coeff * c;
    return out;
}

MPoly MPoly::pow(int e) const {
    if (e < 0) throw InvalidParameter("negative polynomial power");
    MPoly acc = MPoly::constant(vars_, 1);
    MPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

MPoly MPoly::derivative(std::size_t var) const {
    if (var >= vars_.size()) throw InvalidParameter("variable index out of range");
    MPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        std::vector<int> d = e;
        d[var] -= 1;
        out.terms_[std::move(d)] += c * e[var];
    }
    out.prune();
    return out;
}

int MPoly::degree_in(std::size_t var) const {
    if (var >= vars_.size()) throw InvalidParameter("variable index out of range");
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[var]);
    return deg;
}

long MPoly::total_degree() const {
    long deg = -1;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (int x : e) d += x;
        deg = std::max(deg, d);
    }
    return deg;
}

std::vector<MPoly> MPoly::coefficients_in(std::size_t var) const {
    const int deg = degree_in(var);
    std::vector<MPoly> coeffs(static_cast<std::size_t>(std::max(deg, -1) + 1), MPoly(vars_));
    for (const auto& [e, c] : terms_) {
        std::vector<int> stripped = e;
        const int k = stripped[var];
        stripped[var] = 0;
        coeffs[static_cast<std::size_t>(k)].terms_[std::move(stripped)] += c;
    }
    for (auto& p : coeffs) p.prune();
    return coeffs;
}

MPoly MPoly::coefficient_of(std::size_t var, int k) const {
    MPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != k) continue;
        std::vector<int> stripped = e;
        stripped[var] = 0;
        out.terms_[std::move(stripped)] += c;
    }
    out.prune();
    return out;
}

MPoly MPoly::at_zero(std::size_t var) const {
    return coefficient_of(var, 0);
}

MPoly MPoly::project(std::vector<std::string> ring) const {
    MPoly out(std::move(ring));
    std::vector<long> where(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        for (std::size_t j = 0; j < out.vars_.size(); ++j)
            if (vars_[i] == out.vars_[j]) where[i] = static_cast<long>(j);
    }
    for (const auto& [e, c] : terms_) {
        std::vector<int> ne(out.vars_.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] < 0)
                throw InvalidParameter("projection drops occurring variable '" + vars_[i] + "'");
            ne[static_cast<std::size_t>(where[i])] = e[i];
        }
        out.terms_[std::move(ne)] += c;
    }
    out.prune();
    return out;
}

Rational MPoly::evaluate_rational(std::span<const Rational> point) const {
    if (point.size() != vars_.size()) throw InvalidParameter("evaluation arity mismatch");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < point.size(); ++i)
            term *= pow_rational(point[i], e[i]);
        total += term;
    }
    return total;
}

std::complex<double> MPoly::evaluate_complex(std::span<const std::complex<double>> point) const {
    if (point.size() != vars_.size()) throw InvalidParameter("evaluation arity mismatch");
    std::complex<double> total(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        std::complex<double> term(to_double(c), 0.0);
        for (std::size_t i = 0; i < point.size(); ++i) term *= complex_pow(point[i], e[i]);
        total += term;
    }
    return total;
}

MPoly MPoly::exact_divide(const MPoly& num, const MPoly& den) {
    num.check_same_ring(den);
    if (den.is_zero()) throw InvalidParameter("division by zero polynomial");
    MPoly rem = num;
    MPoly quot(num.vars_);
    // Leading term under the canonical order (map is sorted ascending).
    const auto& [de, dc] = *den.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        std::vector<int> qe(re.size());
        for (std::size_t i = 0; i < re.size(); ++i) {
            qe[i] = re[i] - de[i];
            if (qe[i] < 0) throw InvalidParameter("inexact polynomial division");
        }
        MPoly t(num.vars_);
        t.terms_[std::move(qe)] = rc / dc;
        quot += t;
        rem -= t * den;
    }
    return quot;
}

namespace {

// Renders a term list as text.  When `last_var` is set, that variable's factor
// is placed at the end of each term so collected coefficients read naturally,
// e.g. "4*s1*x^2" rather than "4*x^2*s1".
std::string format_terms(const std::vector<std::string>& vars,
                         const std::vector<std::pair<std::vector<int>, Rational>>& terms,
                         std::optional<std::size_t> last_var = std::nullopt) {
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string factors;
        auto append_factor = [&](std::size_t i) {
            if (e[i] == 0) return;
            if (!factors.empty()) factors += "*";
            factors += vars[i];
            if (e[i] != 1) factors += "^" + std::to_string(e[i]);
        };
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (last_var && i == *last_var) continue;
            append_factor(i);
        }
        if (last_var) append_factor(*last_var);
        if (factors.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += factors;
        else
            out += to_string(mag) + "*" + factors;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string MPoly::to_string() const {
    std::vector<std::pair<std::vector<int>, Rational>> terms(terms_.begin(), terms_.end());
    return format_terms(vars_, terms);
}

std::string MPoly::to_string_by_var(std::size_t main_var) const {
    if (main_var >= vars_.size()) throw InvalidParameter("variable index out of range");
    std::vector<std::pair<std::vector<int>, Rational>> terms(terms_.begin(), terms_.end());
    std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        return a.first[main_var] > b.first[main_var];
    });
    return format_terms(vars_, terms, main_var);
}

}  // namespace wspin
