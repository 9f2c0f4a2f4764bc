#include "kch/qtorus.hpp"

#include <sstream>
#include <stdexcept>

#include "kch/dga.hpp"

namespace kch {

const VarSet& qt_vars() {
  static const VarSet vs({"s", "Q"});
  return vs;
}

namespace {

RatFunc s_power(long k) {  // q^{k/2} as a monomial in s
  return RatFunc(LaurentPoly::monomial(qt_vars(), {static_cast<int32_t>(k), 0}, Rat(1)));
}

RatFunc q_power(long k) { return s_power(2 * k); }

}  // namespace

QTElement QTElement::one() { return monomial(0, 0); }

QTElement QTElement::monomial(int m, int n, RatFunc c) {
  QTElement e;
  if (!c.is_zero()) e.terms_.emplace(Key{m, n}, std::move(c));
  return e;
}

QTElement QTElement::monomial(int m, int n) {
  return monomial(m, n, RatFunc::constant(qt_vars(), 1));
}

RatFunc QTElement::coeff(int m, int n) const {
  auto it = terms_.find({m, n});
  return it == terms_.end() ? RatFunc(qt_vars()) : it->second;
}

int QTElement::min_x_degree() const {
  if (terms_.empty()) throw std::logic_error("QTElement: zero operator has no support");
  int m = terms_.begin()->first.first;
  for (const auto& [k, c] : terms_) m = std::min(m, k.first);
  return m;
}

int QTElement::max_x_degree() const {
  if (terms_.empty()) throw std::logic_error("QTElement: zero operator has no support");
  int m = terms_.begin()->first.first;
  for (const auto& [k, c] : terms_) m = std::max(m, k.first);
  return m;
}

void QTElement::insert_term(const Key& k, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QTElement QTElement::operator-() const {
  QTElement r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

QTElement QTElement::operator+(const QTElement& o) const {
  QTElement r = *this;
  for (const auto& [k, c] : o.terms_) r.insert_term(k, c);
  return r;
}

QTElement QTElement::operator-(const QTElement& o) const { return *this + (-o); }

QTElement QTElement::scaled(const RatFunc& c) const {
  QTElement r;
  if (c.is_zero()) return r;
  for (const auto& [k, t] : terms_) r.terms_.emplace(k, t * c);
  return r;
}

QTElement qt_mul(const QTElement& A, const QTElement& B) {
  QTElement r;
  for (const auto& [ka, ca] : A.terms_) {
    for (const auto& [kb, cb] : B.terms_) {
      // Ep^{n1} Ex^{m2} = q^{n1 m2} Ex^{m2} Ep^{n1}
      long twist = static_cast<long>(ka.second) * kb.first;
      r.insert_term({ka.first + kb.first, ka.second + kb.second},
                    ca * cb * q_power(twist));
    }
  }
  return r;
}

QTElement QTElement::pow(long n) const {
  if (n < 0) {
    if (terms_.size() != 1)
      throw std::domain_error("QTElement::pow: negative power of a non-monomial");
    const auto& [k, c] = *terms_.begin();
    // (Ex^m Ep^n)^{-1} = q^{mn} Ex^{-m} Ep^{-n} / c
    QTElement inv = monomial(-k.first, -k.second,
                             q_power(static_cast<long>(k.first) * k.second) / c);
    return inv.pow(-n);
  }
  QTElement acc = one();
  QTElement base = *this;
  while (n > 0) {
    if (n & 1) acc = qt_mul(acc, base);
    if (n >>= 1) base = qt_mul(base, base);
  }
  return acc;
}

LaurentPoly qt_classical(const QTElement& A) {
  const VarSet& target = dga_vars();
  LaurentPoly out(target);
  LaurentPoly one_s = LaurentPoly::constant(qt_vars(), 1);
  for (const auto& [k, c] : A.terms()) {
    LaurentPoly num1 = c.num().substitute("s", one_s);
    LaurentPoly den1 = c.den().substitute("s", one_s);
    if (den1.is_zero())
      throw std::domain_error("qt_classical: coefficient has a pole at s = 1");
    RatFunc at1(num1, den1);
    if (!at1.den().is_unit_monomial() && !at1.den().is_one())
      throw std::domain_error("qt_classical: coefficient is not Laurent at s = 1");
    LaurentPoly val = at1.den().is_one()
                          ? at1.num()
                          : lp_divexact(at1.num(), at1.den());
    // val lives over (s, Q) with s-exponent 0; move it to (Q, ex, ep)
    for (const auto& [e, cc] : val.terms()) {
      if (e[0] != 0) throw std::logic_error("qt_classical: residual s exponent");
      ExpVec t = {e[1], k.first, k.second};
      out += LaurentPoly::monomial(target, std::move(t), cc);
    }
  }
  return out;
}

QTElement qt_frame(const QTElement& A, int r) {
  QTElement out;
  for (const auto& [k, c] : A.terms()) {
    long m = k.first;
    out.insert_term({k.first, k.second + 2 * r * k.first},
                    c * q_power(static_cast<long>(r) * m * m));
  }
  return out;
}

std::string QTElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string mono;
    if (k.first != 0) {
      mono += "Ex";
      if (k.first != 1) mono += "^" + std::to_string(k.first);
    }
    if (k.second != 0) {
      if (!mono.empty()) mono += "*";
      mono += "Ep";
      if (k.second != 1) mono += "^" + std::to_string(k.second);
    }
    bool neg = false;
    std::string coeff;
    if (c.is_polynomial() && c.num().term_count() == 1) {
      neg = c.num().leading_coeff_canonical() < 0;
      LaurentPoly a = neg ? -c.num() : c.num();
      coeff = a.str();
      if (!mono.empty()) {
        if (a.is_one())
          coeff.clear();
        else
          coeff += "*";
      }
    } else {
      coeff = c.is_polynomial() ? "(" + c.num().str() + ")" : c.str();
      if (!mono.empty()) coeff += "*";
    }
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    os << coeff << mono;
  }
  return os.str();
}

namespace {

QTElement sc(const RatFunc& c) { return QTElement::monomial(0, 0, c); }
QTElement sc_q(long half_powers) { return sc(s_power(half_powers)); }
QTElement Ep(int n) { return QTElement::monomial(0, n); }
QTElement Ex(int m) { return QTElement::monomial(m, 0); }
RatFunc Qc(int pow = 1) { return RatFunc::variable(qt_vars(), "Q", pow); }

QTElement make_aug_hat_unknot() {
  // 1 - Ex - Ep - Q*Ex*Ep
  return QTElement::one() - Ex(1) - Ep(1) -
         qt_mul(QTElement::monomial(1, 0, Qc()), Ep(1));
}

QTElement make_aug_hat_trefoil() {
  // block multiplying 1:
  //   e^{g} Q^3 Ep^3 (Q - e^{-3g} Ep^2)(Q - e^{-g} Ep)
  QTElement b1 = qt_mul(
      qt_mul(qt_mul(sc(q_power(1) * Qc(3)), Ep(3)),
             sc(Qc()) - Ep(2).scaled(q_power(-3))),
      sc(Qc()) - Ep(1).scaled(q_power(-1)));
  // block multiplying Ex:
  //   e^{-5g/2} (Q - e^{-2g} Ep^2) *
  //     ( (e^{2g} Ep^2 + e^{3g} Ep^2 - e^{3g} Ep + e^{4g}) Q^2
  //       - (e^{g} Ep^3 + e^{3g} Ep^2 + e^{g} Ep^2) Q + Ep^4 ) * Ex
  QTElement inner =
      (Ep(2).scaled(q_power(2)) + Ep(2).scaled(q_power(3)) -
       Ep(1).scaled(q_power(3)) + sc(q_power(4)))
          .scaled(Qc(2)) -
      (Ep(3).scaled(q_power(1)) + Ep(2).scaled(q_power(3)) +
       Ep(2).scaled(q_power(1)))
          .scaled(Qc(1)) +
      Ep(4);
  QTElement b2 = qt_mul(
      qt_mul(qt_mul(sc_q(-5), sc(Qc()) - Ep(2).scaled(q_power(-2))), inner),
      Ex(1));
  // block multiplying Ex^2:  (Q - e^{-g} Ep^2)(Ep - e^{g}) Ex^2
  QTElement b3 = qt_mul(
      qt_mul(sc(Qc()) - Ep(2).scaled(q_power(-1)), Ep(1) - sc(q_power(1))),
      Ex(2));
  return b1 + b2 + b3;
}

}  // namespace

QTElement qt_fixture(std::string_view name) {
  if (name == "aug_hat_unknot") return make_aug_hat_unknot();
  if (name == "aug_hat_trefoil") return make_aug_hat_trefoil();
  throw std::invalid_argument("qt_fixture: unknown name '" + std::string(name) + "'");
}

}  // namespace kch
