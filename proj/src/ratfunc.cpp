#include "kch/ratfunc.hpp"

#include <stdexcept>

namespace kch {

RatFunc::RatFunc(VarSet vs)
    : num_(LaurentPoly(vs)), den_(LaurentPoly::constant(std::move(vs), 1)) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!(num_.vars() == den_.vars()))
    throw std::invalid_argument("RatFunc: mismatched VarSet");
  normalize();
}

RatFunc::RatFunc(LaurentPoly num)
    : num_(std::move(num)), den_(LaurentPoly::constant(num_.vars(), 1)) {}

RatFunc RatFunc::constant(VarSet vs, const Rat& c) {
  return RatFunc(LaurentPoly::constant(std::move(vs), c));
}

RatFunc RatFunc::variable(const VarSet& vs, std::string_view name, int exp) {
  return RatFunc(LaurentPoly::variable(vs, name, exp));
}

const LaurentPoly& RatFunc::as_poly() const {
  if (!den_.is_one()) throw std::domain_error("RatFunc::as_poly: denominator is not 1");
  return num_;
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw std::domain_error("RatFunc: division by zero");
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(num_.vars(), 1);
    return;
  }
  // shift out monomial units so both parts have ordinary exponents
  ExpVec mn = num_.min_exponents();
  ExpVec md = den_.min_exponents();
  ExpVec neg_mn(mn.size()), neg_md(md.size()), net(mn.size());
  for (size_t i = 0; i < mn.size(); ++i) {
    neg_mn[i] = -mn[i];
    neg_md[i] = -md[i];
    net[i] = mn[i] - md[i];
  }
  LaurentPoly n0 = num_.shifted(neg_mn);
  LaurentPoly d0 = den_.shifted(neg_md);
  if (!d0.is_constant() && !n0.is_constant()) {
    LaurentPoly g = lp_gcd(n0, d0);
    if (!g.is_one()) {
      n0 = lp_divexact(n0, g);
      d0 = lp_divexact(d0, g);
    }
  }
  Rat c = d0.content();
  if (d0.leading_coeff_canonical() < 0) c = -c;
  num_ = n0.shifted(net).scaled(Rat(1) / c);
  den_ = d0.scaled(Rat(1) / c);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(long n) const {
  if (n < 0) {
    if (is_zero()) throw std::domain_error("RatFunc::pow: negative power of zero");
    return RatFunc(den_, num_).pow(-n);
  }
  RatFunc acc = RatFunc::constant(vars(), 1);
  RatFunc base = *this;
  while (n > 0) {
    if (n & 1) acc *= base;
    if (n >>= 1) base *= base;
  }
  return acc;
}

bool RatFunc::operator==(const RatFunc& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

RatFunc RatFunc::substitute(std::string_view var, const LaurentPoly& image) const {
  return RatFunc(num_.substitute(var, image), den_.substitute(var, image));
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace kch
