#include "kch/power_series.hpp"

#include <sstream>
#include <stdexcept>

namespace kch {

PowerSeries::PowerSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("PowerSeries: empty coefficient list");
}

PowerSeries PowerSeries::constant(size_t order, const Rat& c) {
  PowerSeries p(order);
  p.c_[0] = c;
  return p;
}

PowerSeries PowerSeries::variable(size_t order, const Rat& scale) {
  PowerSeries p(order);
  if (order >= 1) p.c_[1] = scale;
  return p;
}

void PowerSeries::check_order(const PowerSeries& o) const {
  if (c_.size() != o.c_.size())
    throw std::invalid_argument("PowerSeries: truncation order mismatch");
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  check_order(o);
  PowerSeries r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  check_order(o);
  PowerSeries r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  check_order(o);
  PowerSeries r(order());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; i + j < c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

PowerSeries PowerSeries::scaled(const Rat& c) const {
  PowerSeries r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

PowerSeries PowerSeries::exp() const {
  if (c_[0] != 0)
    throw std::domain_error("PowerSeries::exp: nonzero constant term");
  PowerSeries acc = constant(order(), 1);
  PowerSeries term = constant(order(), 1);
  for (size_t k = 1; k <= order(); ++k) {
    term = (term * *this).scaled(Rat(1, static_cast<unsigned long>(k)));
    acc = acc + term;
  }
  return acc;
}

std::string PowerSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    bool neg = c_[k] < 0;
    Rat a = neg ? Rat(-c_[k]) : c_[k];
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (k == 0) {
      os << rat_str(a);
    } else {
      std::string mono = k == 1 ? "gs" : "gs^" + std::to_string(k);
      if (a == 1)
        os << mono;
      else
        os << rat_str(a) << "*" << mono;
    }
  }
  if (first) return "0";
  return os.str();
}

}  // namespace kch
