#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dpchroma {

/// Exact arbitrary-precision signed integer. Every count and polynomial
/// coefficient in this library is a BigInt; fixed-width arithmetic only
/// appears on internal fast paths guarded by explicit range checks.
using BigInt = boost::multiprecision::cpp_int;

BigInt big_pow(const BigInt& base, unsigned exp);

/// Exact binomial coefficient; zero when k < 0 or k > n.
BigInt binomial(int n, int k);

BigInt factorial(int n);

std::string to_decimal(const BigInt& v);
BigInt parse_decimal(const std::string& text);

} // namespace dpchroma
