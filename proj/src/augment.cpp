#include "kch/augment.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kch {

namespace {

const std::vector<std::string>& param_names() { return dga_vars().names(); }

}  // namespace

static CPoly affinize_system_poly(const PolyIdeal& I, const PolySystem& sys,
                                  const LaurentPoly& f);

PolySystem augmentation_system(const DGAlgebra& A, std::vector<std::string> selection) {
  if (selection.empty())
    throw std::invalid_argument("augmentation_system: empty selection");
  std::set<std::string> unknowns;
  for (const auto& gname : selection) {
    if (A.degree_of(gname) != 1)
      throw std::invalid_argument("augmentation_system: generator '" + gname +
                                  "' does not have degree 1");
    for (const auto& [w, c] : A.differential(gname).terms())
      for (const auto& l : w.letters)
        if (A.degree_of(l) == 0) unknowns.insert(l);
  }
  PolySystem sys;
  sys.unknowns.assign(unknowns.begin(), unknowns.end());
  std::vector<std::string> names = param_names();  // (Q, ex, ep) first
  for (const auto& u : sys.unknowns) names.push_back(u);
  sys.vars = VarSet(names);

  const size_t np = param_names().size();
  for (const auto& gname : selection) {
    LaurentPoly img(sys.vars);
    for (const auto& [w, c] : A.differential(gname).terms()) {
      bool killed = false;
      ExpVec e(sys.vars.size(), 0);
      for (const auto& l : w.letters) {
        if (A.degree_of(l) > 0) {
          killed = true;  // positive-degree chords map to 0
          break;
        }
        e[*sys.vars.index(l)] += 1;
      }
      if (killed) continue;
      // lift the coefficient into the extended variable set
      for (const auto& [ce, cc] : c.terms()) {
        ExpVec full = e;
        for (size_t i = 0; i < np; ++i) full[i] += ce[i];
        img += LaurentPoly::monomial(sys.vars, full, cc);
      }
    }
    sys.equations.emplace_back(gname, std::move(img));
  }
  return sys;
}

PolySystem augmentation_system(const DGAlgebra& A) {
  std::vector<std::string> sel;
  for (const auto& g : A.generators())
    if (g.degree == 1) sel.push_back(g.name);
  return augmentation_system(A, std::move(sel));
}

PolyIdeal make_ideal(const PolySystem& sys, const std::vector<std::string>& saturate) {
  PolyIdeal I;
  I.unknowns = sys.unknowns;
  I.n_sat = saturate.size();
  I.n_unknowns = sys.unknowns.size();
  for (size_t i = 0; i < saturate.size(); ++i)
    I.var_names.push_back("sat" + std::to_string(i));
  for (const auto& u : sys.unknowns) I.var_names.push_back(u);
  for (const auto& p : param_names()) I.var_names.push_back(p + "_inv");
  for (const auto& p : param_names()) I.var_names.push_back(p);
  I.order = std::make_shared<MonoOrder>(
      std::vector<size_t>{I.n_sat, I.n_unknowns, I.n_tags, I.n_params});

  for (const auto& [g, eq] : sys.equations) {
    if (eq.is_zero()) continue;
    I.gens.push_back(affinize_system_poly(I, sys, eq));
  }
  // unit relations v * v_inv = 1
  size_t tag0 = I.n_sat + I.n_unknowns;
  size_t par0 = tag0 + I.n_tags;
  for (size_t i = 0; i < I.n_params; ++i) {
    Mono m = Mono::unit(I.var_names.size());
    m.e[tag0 + i] = 1;
    m.e[par0 + i] = 1;
    I.gens.push_back(CPoly::monomial(I.order, m, Rat(1)) -
                     CPoly::constant(I.order, Rat(1)));
  }
  // saturation relations sat_i * v_i = 1
  for (size_t i = 0; i < saturate.size(); ++i) {
    auto idx = VarSet(I.var_names).index(saturate[i]);
    if (!idx || *idx < I.n_sat)
      throw std::invalid_argument("make_ideal: unknown saturation variable '" + saturate[i] + "'");
    Mono m = Mono::unit(I.var_names.size());
    m.e[i] = 1;
    m.e[*idx] += 1;
    I.gens.push_back(CPoly::monomial(I.order, m, Rat(1)) -
                     CPoly::constant(I.order, Rat(1)));
  }
  return I;
}

// affinize a system equation (over params ++ unknowns, Laurent in params)
static CPoly affinize_system_poly(const PolyIdeal& I, const PolySystem& sys,
                                  const LaurentPoly& f) {
  size_t tag0 = I.n_sat + I.n_unknowns;
  size_t par0 = tag0 + I.n_tags;
  CPoly out(I.order);
  for (const auto& [e, c] : f.terms()) {
    Mono m = Mono::unit(I.var_names.size());
    for (size_t u = 0; u < sys.unknowns.size(); ++u) {
      int32_t k = e[I.n_params + u];
      if (k < 0)
        throw std::domain_error("affinize: negative exponent on chord unknown");
      m.e[I.n_sat + u] = k;
    }
    for (size_t p = 0; p < I.n_params; ++p) {
      int32_t k = e[p];
      if (k >= 0)
        m.e[par0 + p] = k;
      else
        m.e[tag0 + p] = -k;
    }
    out = out + CPoly::monomial(I.order, std::move(m), c);
  }
  return out;
}

CPoly affinize(const PolyIdeal& I, const LaurentPoly& f) {
  if (!(f.vars() == dga_vars()))
    throw std::invalid_argument("affinize: polynomial must be over (ex, ep, Q)");
  size_t tag0 = I.n_sat + I.n_unknowns;
  size_t par0 = tag0 + I.n_tags;
  CPoly out(I.order);
  for (const auto& [e, c] : f.terms()) {
    Mono m = Mono::unit(I.var_names.size());
    for (size_t p = 0; p < I.n_params; ++p) {
      if (e[p] >= 0)
        m.e[par0 + p] = e[p];
      else
        m.e[tag0 + p] = -e[p];
    }
    out = out + CPoly::monomial(I.order, std::move(m), c);
  }
  return out;
}

LaurentPoly laurentize(const PolyIdeal& I, const CPoly& p) {
  size_t tag0 = I.n_sat + I.n_unknowns;
  size_t par0 = tag0 + I.n_tags;
  LaurentPoly out(dga_vars());
  for (const auto& [m, c] : p.terms()) {
    for (size_t v = 0; v < tag0; ++v)
      if (m.e[v] != 0)
        throw std::domain_error("laurentize: element is not parameter-only");
    ExpVec e(3, 0);
    for (size_t q = 0; q < I.n_params; ++q)
      e[q] = m.e[par0 + q] - m.e[tag0 + q];
    out += LaurentPoly::monomial(dga_vars(), std::move(e), c);
  }
  return out;
}

GroebnerResult groebner(const PolyIdeal& I) {
  GroebnerResult r;
  r.ideal = I;
  r.basis = buchberger(I.gens);
  size_t elim_hi = I.n_sat + I.n_unknowns;          // saturation tags + unknowns
  size_t param_lo = elim_hi + I.n_tags;
  for (const auto& g : r.basis) {
    bool chord_free = true;
    for (size_t v = 0; v < elim_hi && chord_free; ++v)
      if (g.uses_var(v)) chord_free = false;
    if (!chord_free) continue;
    r.chord_free.push_back(g);
    bool params_only = true;
    for (size_t v = elim_hi; v < param_lo && params_only; ++v)
      if (g.uses_var(v)) params_only = false;
    if (params_only) r.param_only.push_back(g);
  }
  return r;
}

AugPolynomial normalize_aug(const LaurentPoly& f) {
  AugPolynomial out;
  if (f.is_zero()) {
    out.poly = f;
    out.unit_shift = ExpVec(f.vars().size(), 0);
    out.scale = Rat(1);
    return out;
  }
  ExpVec mins = f.min_exponents();
  ExpVec shift(mins.size());
  for (size_t i = 0; i < mins.size(); ++i) shift[i] = -mins[i];
  LaurentPoly g = f.shifted(shift);
  Rat c = g.content();
  if (g.leading_coeff_canonical() < 0) c = -c;
  out.poly = g.scaled(Rat(1) / c);
  out.unit_shift = shift;
  out.scale = Rat(1) / c;
  return out;
}

std::string AugPolynomial::certificate() const {
  std::ostringstream os;
  os << "scale " << rat_str(scale) << ", unit";
  bool any = false;
  for (size_t i = 0; i < unit_shift.size(); ++i) {
    if (unit_shift[i] == 0) continue;
    os << " " << poly.vars().name(i) << "^" << unit_shift[i];
    any = true;
  }
  if (!any) os << " 1";
  return os.str();
}

EliminationResult eliminate_augmentation(const DGAlgebra& A,
                                         std::vector<std::string> selection,
                                         const std::vector<std::string>& saturate) {
  EliminationResult res;
  res.system = selection.empty() ? augmentation_system(A)
                                 : augmentation_system(A, std::move(selection));
  PolyIdeal I = make_ideal(res.system, saturate);
  res.gb = groebner(I);
  for (const auto& p : res.gb.param_only) {
    LaurentPoly f = laurentize(I, p);
    if (f.is_zero()) continue;
    AugPolynomial a = normalize_aug(f);
    bool dup = false;
    for (const auto& seen : res.polynomials)
      if (seen.poly == a.poly) dup = true;
    if (!dup) res.polynomials.push_back(std::move(a));
  }
  return res;
}

LaurentPoly lp_extend(const LaurentPoly& f, const VarSet& target) {
  LaurentPoly out(target);
  for (const auto& [e, c] : f.terms()) {
    ExpVec t(target.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto idx = target.index(f.vars().name(i));
      if (!idx)
        throw std::invalid_argument("lp_extend: variable '" + f.vars().name(i) +
                                    "' missing from target");
      t[*idx] = e[i];
    }
    out += LaurentPoly::monomial(target, std::move(t), c);
  }
  return out;
}

LaurentPoly trefoil_aug_reference() {
  const VarSet& vs = dga_vars();
  auto v = [&](std::string_view n, int e = 1) { return LaurentPoly::variable(vs, n, e); };
  auto k = [&](long c) { return LaurentPoly::constant(vs, Rat(c)); };
  LaurentPoly ex = v("ex"), ep = v("ep"), Q = v("Q");
  return ex.pow(2) * (ep.pow(4) - ep.pow(3)) +
         ex * (ep.pow(4) - ep.pow(3) * Q + k(2) * ep.pow(2) * (Q * Q - Q) -
               ep * Q * Q + Q * Q) -
         (ep * Q.pow(3) - Q.pow(4));
}

LaurentPoly unknot_aug_reference() {
  const VarSet& vs = dga_vars();
  auto v = [&](std::string_view n) { return LaurentPoly::variable(vs, n); };
  return LaurentPoly::constant(vs, 1) - v("ex") - v("ep") + v("Q") * v("ex") * v("ep");
}

CombinationReport verify_trefoil_combination() {
  DGAlgebra T = builtin_fixture("trefoil");
  PolySystem sys = augmentation_system(T, {"b12", "c21", "c22"});
  const VarSet& vs = sys.vars;  // (a12, a21, ex, ep, Q)
  auto eq = [&](std::string_view g) -> const LaurentPoly& {
    for (const auto& [name, e] : sys.equations)
      if (name == g) return e;
    throw std::logic_error("verify_trefoil_combination: missing equation");
  };
  auto v = [&](std::string_view n, int e = 1) { return LaurentPoly::variable(vs, n, e); };
  LaurentPoly ex = v("ex"), ep = v("ep"), Q = v("Q"), a12 = v("a12");
  const LaurentPoly& g21 = eq("c21");
  const LaurentPoly& g22 = eq("c22");
  const LaurentPoly& g12 = eq("b12");

  LaurentPoly front = ex * ep.pow(2) + Q * Q;        // e^x e^{2p} + Q^2
  LaurentPoly side = ex * (ep.pow(2) - Q);           // e^x (e^{2p} - Q)
  LaurentPoly bracket = ep * g21 - Q * g22;          // e^p dc21 - Q dc22

  CombinationReport rep;
  rep.combination = front * a12 * bracket
                    - front * (Q * g21 + ex * ep * g22)
                    + side * bracket
                    + side * front * g12;
  rep.expansion = lp_extend(trefoil_aug_reference(), vs);
  rep.difference = rep.combination - rep.expansion;
  rep.pass = rep.difference.is_zero();
  return rep;
}

}  // namespace kch
