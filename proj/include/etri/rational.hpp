#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace etri {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "3", "-6.5", "13/2" into an exact rational. Throws StructuralError on garbage.
Rational parse_rational(std::string_view text);

/// Exact decimal string when the denominator divides a power of ten, else "p/q".
/// parse_rational(format_rational(r)) == r for all r.
std::string format_rational(const Rational& value);

}  // namespace etri
