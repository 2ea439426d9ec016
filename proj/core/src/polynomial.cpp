#include "wspin/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "wspin/error.hpp"

namespace wspin {

namespace {

constexpr int kMaxExponent = 1000000;

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

bool canonical_term_less(const std::vector<int>& a, const std::vector<int>& b) {
    long da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a > b;  // equal degree: larger exponent vector first
}

QHPolynomial::QHPolynomial(std::vector<std::string> variables, std::vector<Monomial> monomials)
    : vars_(std::move(variables)) {
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty()) throw InvalidParameter("empty variable name");
        if (!seen.insert(v).second)
            throw InvalidParameter("duplicate variable name '" + v + "'");
    }
    std::map<std::vector<int>, Rational> merged;
    for (auto& m : monomials) {
        if (m.exponents.size() != vars_.size())
            throw InvalidParameter("monomial arity does not match variable list");
        for (int e : m.exponents) {
            if (e < 0) throw InvalidParameter("negative exponent in monomial");
            if (e > kMaxExponent) throw InvalidParameter("exponent too large");
        }
        merged[std::move(m.exponents)] += m.coeff;
    }
    for (auto& [exps, coeff] : merged) {
        if (coeff == 0) continue;
        monos_.push_back(Monomial{coeff, exps});
    }
    if (monos_.empty()) throw ZeroPolynomial();
    std::sort(monos_.begin(), monos_.end(), [](const Monomial& a, const Monomial& b) {
        return canonical_term_less(a.exponents, b.exponents);
    });
}

std::vector<std::vector<Integer>> QHPolynomial::exponent_matrix() const {
    std::vector<std::vector<Integer>> b;
    b.reserve(monos_.size());
    for (const auto& m : monos_) {
        std::vector<Integer> row;
        row.reserve(m.exponents.size());
        for (int e : m.exponents) row.emplace_back(e);
        b.push_back(std::move(row));
    }
    return b;
}

std::complex<double> QHPolynomial::evaluate(std::span<const std::complex<double>> point) const {
    if (point.size() != vars_.size())
        throw InvalidParameter("evaluation point arity mismatch");
    std::complex<double> total(0.0, 0.0);
    for (const auto& m : monos_) {
        std::complex<double> term(to_double(m.coeff), 0.0);
        for (std::size_t i = 0; i < point.size(); ++i)
            term *= complex_pow(point[i], m.exponents[i]);
        total += term;
    }
    return total;
}

std::vector<std::complex<double>> QHPolynomial::gradient(
    std::span<const std::complex<double>> point) const {
    if (point.size() != vars_.size())
        throw InvalidParameter("evaluation point arity mismatch");
    std::vector<std::complex<double>> grad(vars_.size(), std::complex<double>(0.0, 0.0));
    for (const auto& m : monos_) {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const int e = m.exponents[i];
            if (e == 0) continue;
            std::complex<double> term(to_double(m.coeff) * e, 0.0);
            for (std::size_t j = 0; j < vars_.size(); ++j) {
                const int ej = m.exponents[j] - (j == i ? 1 : 0);
                term *= complex_pow(point[j], ej);
            }
            grad[i] += term;
        }
    }
    return grad;
}

std::size_t QHPolynomial::variable_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw InvalidParameter("unknown variable '" + std::string(name) + "'");
}

namespace {

// --- lexer -----------------------------------------------------------------

enum class TokKind { Int, Ident, Plus, Minus, Star, Caret, Slash, End };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= src_.size()) {
            tok_ = {TokKind::End, "", i_};
            return;
        }
        const char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
            tok_ = {TokKind::Int, std::string(src_.substr(start, i_ - start)), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
                ++i_;
            tok_ = {TokKind::Ident, std::string(src_.substr(start, i_ - start)), start};
            return;
        }
        TokKind k;
        switch (c) {
            case '+': k = TokKind::Plus; break;
            case '-': k = TokKind::Minus; break;
            case '*': k = TokKind::Star; break;
            case '^': k = TokKind::Caret; break;
            case '/': k = TokKind::Slash; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i_);
        }
        tok_ = {k, std::string(1, c), i_};
        ++i_;
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Token tok_{TokKind::End, "", 0};
};

struct RawTerm {
    Rational coeff;
    std::map<std::string, int> powers;  // by variable name
};

class Parser {
public:
    Parser(std::string_view src, const std::vector<std::string>* fixed_vars)
        : lex_(src), fixed_vars_(fixed_vars) {}

    QHPolynomial run() {
        std::vector<RawTerm> terms;
        bool negative = consume_sign(true);
        terms.push_back(parse_term(negative));
        while (lex_.peek().kind != TokKind::End) {
            negative = consume_sign(false);
            terms.push_back(parse_term(negative));
        }

        std::vector<std::string> vars;
        if (fixed_vars_) {
            vars = *fixed_vars_;
        } else {
            vars = appearance_;
        }
        std::vector<Monomial> monos;
        for (auto& t : terms) {
            Monomial m;
            m.coeff = t.coeff;
            m.exponents.assign(vars.size(), 0);
            for (auto& [name, e] : t.powers) {
                auto it = std::find(vars.begin(), vars.end(), name);
                // unknown names were rejected during parsing already
                m.exponents[static_cast<std::size_t>(it - vars.begin())] = e;
            }
            monos.push_back(std::move(m));
        }
        return QHPolynomial(std::move(vars), std::move(monos));
    }

private:
    bool consume_sign(bool optional) {
        const Token& t = lex_.peek();
        if (t.kind == TokKind::Plus || t.kind == TokKind::Minus) {
            return lex_.take().kind == TokKind::Minus;
        }
        if (!optional) throw ParseError("expected '+' or '-'", t.pos);
        return false;
    }

    RawTerm parse_term(bool negative) {
        RawTerm term;
        term.coeff = 1;
        const Token& first = lex_.peek();
        bool had_factor = false;
        if (first.kind == TokKind::Int) {
            term.coeff = parse_coeff();
        } else if (first.kind == TokKind::Ident) {
            parse_factor(term);
            had_factor = true;
        } else {
            throw ParseError("expected coefficient or variable", first.pos);
        }
        while (lex_.peek().kind == TokKind::Star) {
            lex_.take();
            const Token& t = lex_.peek();
            if (t.kind != TokKind::Ident)
                throw ParseError("expected variable after '*'", t.pos);
            parse_factor(term);
            had_factor = true;
        }
        // Reject implicit multiplication explicitly for a clear message.
        const Token& next = lex_.peek();
        if (next.kind == TokKind::Ident || next.kind == TokKind::Int) {
            throw ParseError(had_factor || next.kind == TokKind::Ident
                                 ? "missing '*' between factors"
                                 : "unexpected number",
                             next.pos);
        }
        if (negative) term.coeff = -term.coeff;
        return term;
    }

    Rational parse_coeff() {
        Token num = lex_.take();
        Integer n(num.text);
        if (lex_.peek().kind == TokKind::Slash) {
            lex_.take();
            const Token& dt = lex_.peek();
            if (dt.kind != TokKind::Int)
                throw ParseError("expected denominator after '/'", dt.pos);
            Token den = lex_.take();
            Integer d(den.text);
            if (d == 0) throw ParseError("zero denominator", den.pos);
            return Rational(n, d);
        }
        return Rational(n);
    }

    void parse_factor(RawTerm& term) {
        Token ident = lex_.take();
        if (fixed_vars_) {
            if (std::find(fixed_vars_->begin(), fixed_vars_->end(), ident.text) ==
                fixed_vars_->end())
                throw ParseError("unknown variable '" + ident.text + "'", ident.pos);
        } else if (std::find(appearance_.begin(), appearance_.end(), ident.text) ==
                   appearance_.end()) {
            appearance_.push_back(ident.text);
        }
        int e = 1;
        if (lex_.peek().kind == TokKind::Caret) {
            lex_.take();
            const Token& et = lex_.peek();
            if (et.kind == TokKind::Minus)
                throw ParseError("negative exponent", et.pos);
            if (et.kind != TokKind::Int)
                throw ParseError("expected exponent", et.pos);
            Token num = lex_.take();
            if (num.text.size() > 7) throw ParseError("exponent too large", num.pos);
            e = std::stoi(num.text);
            if (e > kMaxExponent) throw ParseError("exponent too large", num.pos);
        }
        term.powers[ident.text] += e;
    }

    Lexer lex_;
    const std::vector<std::string>* fixed_vars_;
    std::vector<std::string> appearance_;
};

}  // namespace

QHPolynomial parse_poly(std::string_view text) {
    Parser p(text, nullptr);
    return p.run();
}

QHPolynomial parse_poly(std::string_view text, std::vector<std::string> variables) {
    Parser p(text, &variables);
    return p.run();
}

std::string format_poly(const QHPolynomial& p) {
    std::string out;
    bool first = true;
    for (const auto& m : p.monomials()) {
        const bool neg = m.coeff < 0;
        const Rational mag = neg ? Rational(-m.coeff) : m.coeff;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string factors;
        for (std::size_t i = 0; i < p.variables().size(); ++i) {
            const int e = m.exponents[i];
            if (e == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += p.variables()[i];
            if (e != 1) factors += "^" + std::to_string(e);
        }
        if (factors.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += factors;
        } else {
            out += to_string(mag) + "*" + factors;
        }
    }
    return out;
}

}  // namespace wspin
