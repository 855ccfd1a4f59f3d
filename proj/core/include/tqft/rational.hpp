#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tqft {

using Scalar = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q". Throws InputError on garbage or a zero denominator.
Scalar parse_scalar(std::string_view text);

// Reduced fraction "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& q);
std::string to_string(const Integer& z);

Integer factorial(int n);
// (2k-1)!! with the convention (-1)!! = 1.
Integer double_factorial(int n);
Scalar pow(const Scalar& base, int exponent);

}  // namespace tqft
