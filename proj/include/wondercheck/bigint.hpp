#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wondercheck {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exact non-negative counts (dimensions, section counts, binomials).
using BigCount = BigInt;

/// Exact binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Natural logarithm of a positive big integer, accurate to double precision
/// even when the value is far outside the range of `double`.
double log_big(const BigInt& value);

/// log(num) - log(den) for a positive rational.
double log_big(const BigRational& value);

inline std::string to_decimal(const BigInt& value) { return value.str(); }

/// Parses an optionally signed decimal string; throws Error(ParseError).
BigInt parse_big(const std::string& text);

}  // namespace wondercheck
