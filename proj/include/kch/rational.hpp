#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kch {

/// Exact arbitrary-precision rational, backed by GMP.
using Rat = mpq_class;
using Int = mpz_class;

/// c^n for integer n (n < 0 inverts; c must be nonzero then).
Rat rat_pow(const Rat& c, long n);

/// Canonical decimal rendering, "p" or "p/q" with q > 1.
std::string rat_str(const Rat& c);

Int factorial(unsigned n);

}  // namespace kch
