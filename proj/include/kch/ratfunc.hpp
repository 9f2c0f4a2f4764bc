#pragma once

#include "kch/laurent.hpp"

namespace kch {

/// Reduced rational function num/den over a common VarSet.
/// Canonical form: den has ordinary exponents (minimum 0 per variable), is
/// Z-primitive with positive canonical leading coefficient, and gcd(num', den)
/// is a unit; num may keep Laurent exponents. Canonical forms are unique, so
/// operator== on the fields decides equality.
class RatFunc {
 public:
  RatFunc() = default;  // zero over the empty VarSet
  explicit RatFunc(VarSet vs);
  RatFunc(LaurentPoly num, LaurentPoly den);  // normalizes
  explicit RatFunc(LaurentPoly num);

  static RatFunc constant(VarSet vs, const Rat& c);
  static RatFunc variable(const VarSet& vs, std::string_view name, int exp = 1);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  const VarSet& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// The numerator, when the denominator is 1; throws otherwise.
  const LaurentPoly& as_poly() const;

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc pow(long n) const;

  bool operator==(const RatFunc& o) const;

  /// Substitute an invertible monomial (or constant) for a variable,
  /// in numerator and denominator. Throws if the denominator vanishes.
  RatFunc substitute(std::string_view var, const LaurentPoly& image) const;

  std::string str() const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace kch
