#include "kch/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace kch {

bool TermLess::operator()(const ExpVec& a, const ExpVec& b) const {
  // compare from the last variable down to the first
  size_t n = std::max(a.size(), b.size());
  for (size_t k = n; k-- > 0;) {
    int32_t av = k < a.size() ? a[k] : 0;
    int32_t bv = k < b.size() ? b[k] : 0;
    if (av != bv) return av < bv;
  }
  return false;
}

LaurentPoly LaurentPoly::constant(VarSet vs, const Rat& c) {
  LaurentPoly p(std::move(vs));
  if (c != 0) p.terms_.emplace(ExpVec(p.vars_.size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(VarSet vs, ExpVec e, const Rat& c) {
  LaurentPoly p(std::move(vs));
  if (e.size() != p.vars_.size())
    throw std::invalid_argument("LaurentPoly::monomial: exponent vector length mismatch");
  if (c != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

LaurentPoly LaurentPoly::variable(const VarSet& vs, std::string_view name, int exp) {
  auto idx = vs.index(name);
  if (!idx) throw std::invalid_argument("LaurentPoly::variable: unknown variable '" + std::string(name) + "'");
  ExpVec e(vs.size(), 0);
  e[*idx] = exp;
  return monomial(vs, std::move(e), Rat(1));
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
}

bool LaurentPoly::is_one() const {
  return is_constant() && !terms_.empty() && terms_.begin()->second == 1;
}

Rat LaurentPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("LaurentPoly::constant_value: not constant");
  return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

Rat LaurentPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::insert_term(const ExpVec& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_same_vars(const LaurentPoly& o) const {
  if (!(vars_ == o.vars_))
    throw std::invalid_argument("LaurentPoly: mismatched VarSet");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_same_vars(o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.insert_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  check_same_vars(o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.insert_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_same_vars(o);
  LaurentPoly r(vars_);
  ExpVec e(vars_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.insert_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
  LaurentPoly r(vars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

LaurentPoly LaurentPoly::pow(long n) const {
  if (n < 0) {
    if (terms_.size() != 1)
      throw std::domain_error("LaurentPoly::pow: negative power of a non-unit");
    const auto& [e, c] = *terms_.begin();
    ExpVec ie(e.size());
    for (size_t i = 0; i < e.size(); ++i) ie[i] = static_cast<int32_t>(e[i] * n);
    return monomial(vars_, std::move(ie), rat_pow(c, n));
  }
  LaurentPoly acc = constant(vars_, 1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1) acc *= base;
    if (n >>= 1) base *= base;
  }
  return acc;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return vars_ == o.vars_ && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::substitute(std::string_view var, const LaurentPoly& image) const {
  auto idx = vars_.index(var);
  if (!idx) throw std::invalid_argument("substitute: unknown variable '" + std::string(var) + "'");
  if (!(image.vars_ == vars_))
    throw std::invalid_argument("substitute: image over a different VarSet");
  if (image.terms_.size() != 1)
    throw std::domain_error("substitute: image must be an invertible monomial");
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    ExpVec rest = e;
    int32_t k = rest[*idx];
    rest[*idx] = 0;
    LaurentPoly t = monomial(vars_, std::move(rest), c);
    if (k != 0) t *= image.pow(k);
    r += t;
  }
  return r;
}

std::complex<double> LaurentPoly::eval(
    const std::map<std::string, std::complex<double>>& point) const {
  std::vector<std::complex<double>> vals(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_.name(i));
    if (it == point.end())
      throw std::invalid_argument("eval: unassigned variable '" + vars_.name(i) + "'");
    vals[i] = it->second;
  }
  auto ipow = [](std::complex<double> b, int32_t n) {
    bool inv = n < 0;
    uint32_t k = inv ? static_cast<uint32_t>(-static_cast<int64_t>(n)) : static_cast<uint32_t>(n);
    std::complex<double> acc(1.0);
    while (k) {
      if (k & 1) acc *= b;
      b *= b;
      k >>= 1;
    }
    return inv ? 1.0 / acc : acc;
  };
  std::complex<double> sum(0.0);
  for (const auto& [e, c] : terms_) {
    std::complex<double> t(c.get_d());
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && vals[i] == std::complex<double>(0.0))
        throw std::domain_error("eval: zero assigned to inverted variable '" + vars_.name(i) + "'");
      t *= ipow(vals[i], e[i]);
    }
    sum += t;
  }
  return sum;
}

LaurentPoly LaurentPoly::derivative(std::string_view var) const {
  auto idx = vars_.index(var);
  if (!idx) throw std::invalid_argument("derivative: unknown variable");
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[*idx] == 0) continue;
    ExpVec d = e;
    d[*idx] -= 1;
    r.insert_term(d, c * e[*idx]);
  }
  return r;
}

ExpVec LaurentPoly::min_exponents() const {
  ExpVec m(vars_.size(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < m.size(); ++i)
      m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

ExpVec LaurentPoly::max_exponents() const {
  ExpVec m(vars_.size(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < m.size(); ++i)
      m[i] = first ? e[i] : std::max(m[i], e[i]);
    first = false;
  }
  return m;
}

LaurentPoly LaurentPoly::shifted(const ExpVec& shift) const {
  if (shift.size() != vars_.size())
    throw std::invalid_argument("shifted: exponent vector length mismatch");
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    ExpVec s = e;
    for (size_t i = 0; i < s.size(); ++i) s[i] += shift[i];
    r.terms_.emplace(std::move(s), c);
  }
  return r;
}

Rat LaurentPoly::content() const {
  if (terms_.empty()) return Rat(1);
  Int num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : terms_) {
    Int num = c.get_num();
    mpz_abs(num.get_mpz_t(), num.get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

Rat LaurentPoly::leading_coeff_canonical() const {
  return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_.name(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << rat_str(a);
    } else if (a == 1) {
      os << mono;
    } else {
      os << rat_str(a) << "*" << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// gcd machinery (ordinary exponents only)

namespace {

void require_ordinary(const LaurentPoly& f, const char* who) {
  for (int32_t m : f.min_exponents())
    if (m < 0) throw std::domain_error(std::string(who) + ": negative exponents");
}

int32_t degree_in(const LaurentPoly& f, size_t v);

// f as a univariate polynomial in variable `v`, coefficients over the same
// VarSet with exponent 0 in v.
std::vector<LaurentPoly> coeffs_in(const LaurentPoly& f, size_t v) {
  int32_t deg = f.is_zero() ? -1 : f.max_exponents()[v];
  std::vector<LaurentPoly> out(static_cast<size_t>(deg + 1), LaurentPoly(f.vars()));
  for (const auto& [e, c] : f.terms()) {
    ExpVec rest = e;
    int32_t k = rest[v];
    rest[v] = 0;
    out[static_cast<size_t>(k)] += LaurentPoly::monomial(f.vars(), rest, c);
  }
  return out;
}

int32_t degree_in(const LaurentPoly& f, size_t v) {
  return f.is_zero() ? -1 : f.max_exponents()[v];
}

// normalize: Z-primitive, positive canonical leading coefficient
LaurentPoly gcd_normalize(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  Rat c = f.content();
  if (f.leading_coeff_canonical() < 0) c = -c;
  return f.scaled(Rat(1) / c);
}

LaurentPoly gcd_rec(LaurentPoly f, LaurentPoly g);

// monic Euclid for polynomials univariate in variable v with constant
// coefficients; much faster than the pseudo-remainder path
LaurentPoly euclid_univar(const LaurentPoly& f, const LaurentPoly& g, size_t v) {
  auto to_vec = [&](const LaurentPoly& p) {
    std::vector<Rat> c(static_cast<size_t>(degree_in(p, v)) + 1, Rat(0));
    for (const auto& [e, k] : p.terms()) c[static_cast<size_t>(e[v])] = k;
    return c;
  };
  auto strip = [](std::vector<Rat>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
  };
  std::vector<Rat> a = to_vec(f), b = to_vec(g);
  strip(a);
  strip(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // a mod b with b made monic on the fly
    Rat lc = b.back();
    while (a.size() >= b.size()) {
      Rat q = a.back() / lc;
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
      strip(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
    strip(b);
  }
  LaurentPoly out(f.vars());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    ExpVec e(f.vars().size(), 0);
    e[v] = static_cast<int32_t>(i);
    out += LaurentPoly::monomial(f.vars(), std::move(e), a[i]);
  }
  return gcd_normalize(out);
}

// gcd of the univariate coefficient list (recursive content)
LaurentPoly list_gcd(const std::vector<LaurentPoly>& cs, const VarSet& vars) {
  LaurentPoly acc(vars);
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    acc = acc.is_zero() ? gcd_normalize(c) : gcd_rec(acc, c);
    if (acc.is_constant()) break;
  }
  if (acc.is_zero()) return LaurentPoly::constant(vars, 1);
  return acc;
}

// pseudo-remainder of f by g in variable v (deg_v f >= deg_v g > 0 allowed)
LaurentPoly prem(const LaurentPoly& f, const LaurentPoly& g, size_t v) {
  auto gc = coeffs_in(g, v);
  int32_t dg = static_cast<int32_t>(gc.size()) - 1;
  LaurentPoly lcg = gc.back();
  LaurentPoly r = f;
  int32_t dr = degree_in(r, v);
  while (!r.is_zero() && dr >= dg) {
    auto rc = coeffs_in(r, v);
    LaurentPoly lcr = rc.back();
    ExpVec shift(f.vars().size(), 0);
    shift[v] = dr - dg;
    r = r * lcg - g.shifted(shift) * lcr;
    int32_t ndr = degree_in(r, v);
    if (ndr >= dr && !r.is_zero())
      throw std::logic_error("prem: degree did not drop");
    dr = ndr;
  }
  return r;
}

LaurentPoly gcd_rec(LaurentPoly f, LaurentPoly g) {
  const VarSet& vars = f.vars();
  if (f.is_zero()) return gcd_normalize(g);
  if (g.is_zero()) return gcd_normalize(f);
  if (f.is_constant() || g.is_constant()) return LaurentPoly::constant(vars, 1);

  // count active variables and their degrees
  std::vector<int32_t> df(vars.size()), dg(vars.size());
  size_t active = 0, last_active = 0;
  for (size_t i = 0; i < vars.size(); ++i) {
    df[i] = std::max<int32_t>(degree_in(f, i), 0);
    dg[i] = std::max<int32_t>(degree_in(g, i), 0);
    if (df[i] > 0 || dg[i] > 0) {
      ++active;
      last_active = i;
    }
  }
  if (active == 0) return LaurentPoly::constant(vars, 1);
  if (active == 1) return euclid_univar(f, g, last_active);

  // recurse on the variable with the smallest degree bound; the
  // pseudo-remainder sequence then takes the fewest steps
  size_t v = last_active;
  int32_t best = std::numeric_limits<int32_t>::max();
  for (size_t i = 0; i < vars.size(); ++i) {
    if (df[i] == 0 && dg[i] == 0) continue;
    int32_t bound = std::max(df[i], dg[i]);
    if (bound < best) {
      best = bound;
      v = i;
    }
  }

  auto fc = coeffs_in(f, v);
  auto gc = coeffs_in(g, v);
  LaurentPoly cont_f = list_gcd(fc, vars);
  LaurentPoly cont_g = list_gcd(gc, vars);
  LaurentPoly cont = gcd_rec(cont_f, cont_g);
  LaurentPoly fp = gcd_normalize(lp_divexact(f, cont_f));
  LaurentPoly gp = gcd_normalize(lp_divexact(g, cont_g));

  if (degree_in(fp, v) < degree_in(gp, v)) std::swap(fp, gp);
  while (!gp.is_zero()) {
    if (gp.is_constant()) return gcd_normalize(cont);  // coprime in v
    LaurentPoly r = prem(fp, gp, v);
    fp = gp;
    if (r.is_zero()) {
      gp = r;
      break;
    }
    // strip content of the remainder to keep coefficients small
    auto rcs = coeffs_in(r, v);
    LaurentPoly rc = list_gcd(rcs, vars);
    gp = gcd_normalize(lp_divexact(r, rc));
  }
  return gcd_normalize(cont * fp);
}

}  // namespace

LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (!(a.vars() == b.vars())) throw std::invalid_argument("lp_gcd: mismatched VarSet");
  require_ordinary(a, "lp_gcd");
  require_ordinary(b, "lp_gcd");
  return gcd_rec(a, b);
}

LaurentPoly lp_divexact(const LaurentPoly& a, const LaurentPoly& b) {
  if (!(a.vars() == b.vars())) throw std::invalid_argument("lp_divexact: mismatched VarSet");
  if (b.is_zero()) throw std::domain_error("lp_divexact: division by zero");
  if (b.is_unit_monomial()) {
    const auto& [e, c] = *b.terms().begin();
    ExpVec inv(e.size());
    for (size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
    return a.shifted(inv).scaled(Rat(1) / c);
  }
  require_ordinary(a, "lp_divexact");
  require_ordinary(b, "lp_divexact");
  // long division by the canonical-largest term of b; exact or throws
  LaurentPoly r = a;
  LaurentPoly q(a.vars());
  const auto& ltb = *b.terms().rbegin();
  while (!r.is_zero()) {
    const auto& ltr = *r.terms().rbegin();
    ExpVec d(ltr.first.size());
    for (size_t i = 0; i < d.size(); ++i) {
      d[i] = ltr.first[i] - ltb.first[i];
      if (d[i] < 0) throw std::domain_error("lp_divexact: not divisible");
    }
    LaurentPoly m = LaurentPoly::monomial(a.vars(), d, ltr.second / ltb.second);
    q += m;
    r -= m * b;
  }
  return q;
}

std::optional<LaurentPoly> lp_unit_quotient(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero() || f.term_count() != g.term_count()) return std::nullopt;
  const auto& [ef, cf] = *f.terms().begin();
  const auto& [eg, cg] = *g.terms().begin();
  ExpVec d(ef.size());
  for (size_t i = 0; i < d.size(); ++i) d[i] = ef[i] - eg[i];
  LaurentPoly u = LaurentPoly::monomial(f.vars(), d, cf / cg);
  if (u * g == f) return u;
  return std::nullopt;
}

}  // namespace kch
