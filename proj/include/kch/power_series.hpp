#pragma once

#include <string>
#include <vector>

#include "kch/rational.hpp"

namespace kch {

/// Truncated formal power series in the coupling variable, with exact
/// rational coefficients c_0..c_N (N = truncation order).
class PowerSeries {
 public:
  explicit PowerSeries(size_t order) : c_(order + 1, Rat(0)) {}
  explicit PowerSeries(std::vector<Rat> coeffs);  // order = coeffs.size()-1

  size_t order() const { return c_.size() - 1; }
  const Rat& coeff(size_t k) const { return c_.at(k); }
  const std::vector<Rat>& coeffs() const { return c_; }

  static PowerSeries constant(size_t order, const Rat& c);
  static PowerSeries variable(size_t order, const Rat& scale = Rat(1));

  PowerSeries operator-() const;
  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;
  PowerSeries scaled(const Rat& c) const;

  /// exp of a series with zero constant term (the caller factors e^c out).
  PowerSeries exp() const;

  bool operator==(const PowerSeries& o) const = default;

  std::string str() const;  // variable rendered as `gs`

 private:
  void check_order(const PowerSeries& o) const;
  std::vector<Rat> c_;
};

}  // namespace kch
