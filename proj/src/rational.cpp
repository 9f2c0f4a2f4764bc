#include "kch/rational.hpp"

#include <stdexcept>

namespace kch {

Rat rat_pow(const Rat& c, long n) {
  if (n == 0) return Rat(1);
  Rat base = c;
  if (n < 0) {
    if (c == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
    base = Rat(c.get_den(), c.get_num());
    base.canonicalize();
    n = -n;
  }
  Rat acc(1);
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::string rat_str(const Rat& c) {
  return c.get_str();
}

Int factorial(unsigned n) {
  Int f(1);
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace kch
