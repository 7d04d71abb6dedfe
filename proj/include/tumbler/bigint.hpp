// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tumbler {

using BigInt = boost::multiprecision::cpp_int;

/// Base-2 logarithm of a positive integer. Uses the top 53 bits plus the
/// bit length, so the absolute error is far below 1e-9.
double log2_big(const BigInt& x);

/// Parses an unsigned hexadecimal string (no prefix, case-insensitive).
BigInt parse_hex(const std::string& digits);

/// Uppercase hexadecimal, no prefix; "0" for zero.
std::string to_hex(const BigInt& value);

} // namespace tumbler
