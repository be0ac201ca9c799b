#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace p6 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "p/q" and "-p/q"; throws ParseError otherwise.
Rational parse_rational(std::string_view text);

// "p" when the denominator is one, "p/q" otherwise.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

}  // namespace p6
