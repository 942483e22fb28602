#pragma once

#include "mfil/scalar.hpp"

#include <cstdint>

namespace mfil {

/// C(a, b) for 0 <= b <= a, and 0 for every other pair of integers
/// (negative a included). All closed-form coefficients rely on this
/// convention to absorb their summation ranges.
Integer binomial(long a, long b);

Integer factorial(long n);

/// Number of unordered partitions of k into exactly q positive parts.
/// Requires q >= 1; returns 0 for k < q.
std::int64_t partitions_exact(int q, long k);

}  // namespace mfil
