#pragma once

// Exact scalars. Every coefficient in the library is either an arbitrary
// precision integer or an arbitrary precision rational kept in lowest terms.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mfil {

using Integer = mpz_class;
using Scalar = mpq_class;

/// Builds num/den in canonical form. Throws std::invalid_argument on den == 0.
Scalar make_scalar(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (decimal). Throws std::invalid_argument.
Scalar parse_scalar(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Scalar& value);
std::string to_string(const Integer& value);

}  // namespace mfil
