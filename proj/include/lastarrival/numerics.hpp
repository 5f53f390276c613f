#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "lastarrival/extended.hpp"

namespace lastarrival::numerics {

/// C(n, k), exact big-integer value correctly rounded to the given precision.
/// Throws DomainError for k > n. n is capped at 10^6.
ExtendedScalar binomial(long n, long k, long precision_bits = ExtendedScalar::kDefaultPrecision);

/// n-th Catalan number, exact. Valid for n <= 30 (fits 64 bits comfortably).
std::uint64_t catalan(int n);

/// Both solutions of x * exp(-x) = theta for 0 < theta <= 1/e, as (x1, x2)
/// with x1 <= 1 <= x2. Bisection to half-precision tolerance, then a guarded
/// Newton polish. Throws NoSolutionError for theta > 1/e.
std::pair<ExtendedScalar, ExtendedScalar> solve_x_exp(const ExtendedScalar& theta);

/// Root of f on [lo, hi] given f(lo) >= 0 >= f(hi) (or the reverse), by the
/// Illinois variant of regula falsi with a bisection fallback. Stops when the
/// bracket is narrower than `width`.
ExtendedScalar find_root_bracketed(const std::function<ExtendedScalar(const ExtendedScalar&)>& f,
                                   ExtendedScalar lo, ExtendedScalar hi,
                                   const ExtendedScalar& width);

}  // namespace lastarrival::numerics
