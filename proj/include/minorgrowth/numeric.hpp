#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace minorgrowth {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt pow2(int n);

/// Decimal rendering used by every report (counts are never emitted as floats).
std::string to_decimal(const BigInt& value);
BigInt parse_decimal(const std::string& text);

std::string to_string(const Rational& value);
double to_double(const Rational& value);

}  // namespace minorgrowth
