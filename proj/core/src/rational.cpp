#include "wspin/rational.hpp"

#include <cctype>

#include "wspin/error.hpp"

namespace wspin {

std::string to_string(const Rational& q) {
    const Integer num = numerator(q);
    const Integer den = denominator(q);
    std::string out = num.str();
    if (den != 1) {
        out += "/";
        out += den.str();
    }
    return out;
}

Rational parse_rational(std::string_view text, std::size_t offset) {
    std::size_t i = 0;
    auto fail = [&](const std::string& what) -> Rational {
        throw ParseError(what, offset + i);
    };

    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = (text[i] == '-');
        ++i;
    }
    auto digits = [&]() -> std::string {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail("expected digits in rational literal");
        return std::string(text.substr(start, i - start));
    };

    Integer num(digits());
    Integer den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t den_pos = i;
        den = Integer(digits());
        if (den == 0) throw ParseError("zero denominator", offset + den_pos);
    }
    if (i != text.size()) fail("trailing characters in rational literal");
    Rational q(num, den);
    return negative ? Rational(-q) : q;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

bool is_integer(const Rational& q) { return denominator(q) == 1; }

Integer floor_rational(const Rational& q) {
    Integer n = numerator(q);
    Integer d = denominator(q);
    Integer quo = n / d;  // truncates toward zero
    if (n < 0 && quo * d != n) --quo;
    return quo;
}

Rational pow_rational(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (q == 0 && e < 0) throw InvalidParameter("0 cannot be raised to a negative power");
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational base = q, acc = 1;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return invert ? Rational(1) / acc : acc;
}

}  // namespace wspin
