#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace diskgeo {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Lowest-terms "p/q" with q > 0; integers render as "p/1".
std::string to_string(const Rational& value);

/// Accepts "p/q" or a bare integer "p".
Rational parse_rational(std::string_view text);

/// Display-only decimal rendering with 12 significant digits.
std::string to_decimal(const Rational& value);

inline Rational make_rational(long long num, long long den = 1) {
    return Rational(num, den);
}

}  // namespace diskgeo
