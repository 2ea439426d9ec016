#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace wspin {

// All weight/phase/degree bookkeeping is exact; floating point only enters in
// the numeric modules (root bounds, radial solutions).
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: lowest terms, sign on the numerator, "p/q", with the
// "/1" suppressed ("-1", "3/2", "0").
std::string to_string(const Rational& q);

// Accepts optional sign, "p" or "p/q"; throws ParseError on anything else
// (including a zero denominator). `offset` shifts reported error positions
// when the literal is embedded in a larger input.
Rational parse_rational(std::string_view text, std::size_t offset = 0);

double to_double(const Rational& q);

bool is_integer(const Rational& q);

// Largest integer <= q.
Integer floor_rational(const Rational& q);

// q^e for integer e (e may be negative; q must be nonzero then).
Rational pow_rational(const Rational& q, long e);

}  // namespace wspin
