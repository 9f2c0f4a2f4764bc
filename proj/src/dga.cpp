#include "kch/dga.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kch {

const VarSet& dga_vars() {
  static const VarSet vs({"Q", "ex", "ep"});
  return vs;
}

bool NCWordLess::operator()(const NCWord& a, const NCWord& b) const {
  if (a.letters.size() != b.letters.size())
    return a.letters.size() < b.letters.size();
  return a.letters < b.letters;
}

NCElement NCElement::scalar(const LaurentPoly& c) {
  NCElement e(c.vars());
  if (!c.is_zero()) e.terms_.emplace(NCWord{}, c);
  return e;
}

NCElement NCElement::word(VarSet coeff_vars, NCWord w, const LaurentPoly& c) {
  NCElement e(std::move(coeff_vars));
  if (!(c.vars() == e.vars_))
    throw std::invalid_argument("NCElement::word: coefficient VarSet mismatch");
  if (!c.is_zero()) e.terms_.emplace(std::move(w), c);
  return e;
}

NCElement NCElement::generator(VarSet coeff_vars, std::string_view name) {
  LaurentPoly one = LaurentPoly::constant(coeff_vars, 1);
  return word(std::move(coeff_vars), NCWord{{std::string(name)}}, one);
}

void NCElement::insert_term(const NCWord& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCElement NCElement::operator-() const {
  NCElement r(vars_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NCElement NCElement::operator+(const NCElement& o) const {
  if (vars_.size() && o.vars_.size() && !(vars_ == o.vars_))
    throw std::invalid_argument("NCElement: mismatched coefficient VarSet");
  NCElement r = vars_.size() ? *this : NCElement(o.vars_);
  for (const auto& [w, c] : o.terms_) r.insert_term(w, c);
  return r;
}

NCElement NCElement::operator-(const NCElement& o) const { return *this + (-o); }

NCElement NCElement::scaled(const LaurentPoly& c) const {
  NCElement r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
  return r;
}

bool NCElement::operator==(const NCElement& o) const {
  return terms_ == o.terms_;
}

NCElement nc_mul_impl(const NCElement& u, const NCElement& v) {
  NCElement r(u.vars_.size() ? u.vars_ : v.vars_);
  for (const auto& [wu, cu] : u.terms_) {
    for (const auto& [wv, cv] : v.terms_) {
      NCWord w = wu;
      w.letters.insert(w.letters.end(), wv.letters.begin(), wv.letters.end());
      r.insert_term(w, cu * cv);
    }
  }
  return r;
}

std::string NCElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    // compress consecutive repeats into powers
    std::string mono;
    for (size_t i = 0; i < w.letters.size();) {
      size_t j = i;
      while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
      if (!mono.empty()) mono += "*";
      mono += w.letters[i];
      if (j - i > 1) mono += "^" + std::to_string(j - i);
      i = j;
    }
    bool neg = false;
    std::string coeff;
    if (c.term_count() == 1) {
      neg = c.leading_coeff_canonical() < 0;
      LaurentPoly a = neg ? -c : c;
      coeff = a.str();
      if (!mono.empty()) {
        if (a.is_one())
          coeff.clear();
        else
          coeff += "*";
      }
    } else {
      coeff = "(" + c.str() + ")";
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

DGAlgebra::DGAlgebra(std::string name, std::vector<ChordGen> gens,
                     std::map<std::string, NCElement> differentials)
    : name_(std::move(name)), gens_(std::move(gens)), zero_(dga_vars()) {
  for (const auto& g : gens_) {
    if (g.degree < 0)
      throw std::invalid_argument("DGAlgebra: negative degree generator '" + g.name + "'");
    if (!degree_.emplace(g.name, g.degree).second)
      throw std::invalid_argument("DGAlgebra: duplicate generator '" + g.name + "'");
  }
  for (auto& [gname, img] : differentials) {
    if (!degree_.count(gname))
      throw std::invalid_argument("DGAlgebra: differential for unknown generator '" + gname + "'");
    for (const auto& [w, c] : img.terms())
      for (const auto& l : w.letters)
        if (!degree_.count(l))
          throw std::invalid_argument("DGAlgebra: differential references unknown generator '" + l + "'");
    diff_.emplace(gname, std::move(img));
  }
}

bool DGAlgebra::has_generator(std::string_view name) const {
  return degree_.find(name) != degree_.end();
}

int DGAlgebra::degree_of(std::string_view gen) const {
  auto it = degree_.find(gen);
  if (it == degree_.end())
    throw std::invalid_argument("DGAlgebra: unknown generator '" + std::string(gen) + "'");
  return it->second;
}

const NCElement& DGAlgebra::differential(std::string_view gen) const {
  degree_of(gen);  // existence check
  auto it = diff_.find(gen);
  return it == diff_.end() ? zero_ : it->second;
}

int DGAlgebra::word_degree(const NCWord& w) const {
  int d = 0;
  for (const auto& l : w.letters) d += degree_of(l);
  return d;
}

bool DGAlgebra::operator==(const DGAlgebra& o) const {
  if (gens_.size() != o.gens_.size()) return false;
  // generator sets (with degrees) and differentials must agree; order and
  // the header name are presentation details
  for (const auto& g : gens_) {
    if (!o.has_generator(g.name) || o.degree_of(g.name) != g.degree) return false;
    if (!(differential(g.name) == o.differential(g.name))) return false;
  }
  return true;
}

NCElement nc_mul(const DGAlgebra& A, const NCElement& u, const NCElement& v) {
  for (const auto* e : {&u, &v})
    for (const auto& [w, c] : e->terms())
      for (const auto& l : w.letters)
        if (!A.has_generator(l))
          throw std::invalid_argument("nc_mul: word references unknown generator '" + l + "'");
  return nc_mul_impl(u, v);
}

NCElement apply_d(const DGAlgebra& A, const NCElement& u) {
  NCElement out(u.coeff_vars().size() ? u.coeff_vars() : dga_vars());
  for (const auto& [w, c] : u.terms()) {
    // d(l1...lm) = sum_i (-1)^{deg(l1...l_{i-1})} l1..l_{i-1} d(l_i) l_{i+1}..lm
    int sign_deg = 0;
    for (size_t i = 0; i < w.letters.size(); ++i) {
      const NCElement& dgi = A.differential(w.letters[i]);
      if (!dgi.is_zero()) {
        NCWord prefix{{w.letters.begin(), w.letters.begin() + i}};
        NCWord suffix{{w.letters.begin() + i + 1, w.letters.end()}};
        NCElement term = nc_mul_impl(
            nc_mul_impl(NCElement::word(out.coeff_vars(), prefix,
                                        LaurentPoly::constant(out.coeff_vars(), 1)),
                        dgi),
            NCElement::word(out.coeff_vars(), suffix,
                            LaurentPoly::constant(out.coeff_vars(), 1)));
        LaurentPoly f = (sign_deg % 2 == 0) ? c : -c;
        out += term.scaled(f);
      }
      sign_deg += A.degree_of(w.letters[i]);
    }
  }
  return out;
}

D2Report check_d_squared(const DGAlgebra& A) {
  D2Report rep;
  for (const auto& g : A.generators()) {
    NCElement r = apply_d(A, A.differential(g.name));
    if (!r.is_zero()) rep.failures.push_back({g.name, std::move(r)});
  }
  return rep;
}

GradingReport check_grading(const DGAlgebra& A) {
  GradingReport rep;
  for (const auto& g : A.generators()) {
    const NCElement& img = A.differential(g.name);
    for (const auto& [w, c] : img.terms()) {
      int actual = A.word_degree(w);
      if (actual != g.degree - 1)
        rep.violations.push_back({g.name, w, g.degree - 1, actual});
    }
  }
  return rep;
}

namespace {

LaurentPoly lv(std::string_view n, int e = 1) { return LaurentPoly::variable(dga_vars(), n, e); }
LaurentPoly lc(long c) { return LaurentPoly::constant(dga_vars(), Rat(c)); }
NCElement w1(std::string_view a, const LaurentPoly& c) {
  return NCElement::word(dga_vars(), NCWord{{std::string(a)}}, c);
}
NCElement w2(std::string_view a, std::string_view b, const LaurentPoly& c) {
  return NCElement::word(dga_vars(), NCWord{{std::string(a), std::string(b)}}, c);
}
NCElement w3(std::string_view a, std::string_view b, std::string_view d, const LaurentPoly& c) {
  return NCElement::word(dga_vars(), NCWord{{std::string(a), std::string(b), std::string(d)}}, c);
}

DGAlgebra make_unknot() {
  std::map<std::string, NCElement> d;
  d["c"] = NCElement::scalar(lc(1) - lv("ex") - lv("ep") - lv("Q") * lv("ex") * lv("ep"));
  d["e"] = NCElement(dga_vars());
  return DGAlgebra("unknot", {{"c", 1}, {"e", 2}}, std::move(d));
}

DGAlgebra make_trefoil() {
  std::map<std::string, NCElement> d;
  d["c11"] = NCElement::scalar(lv("ex") * lv("ep") - lv("ex"))
             + w1("a12", lv("ep") - lc(2) * lv("Q"))
             + w3("a12", "a12", "a21", -lv("Q"));
  d["c12"] = NCElement::scalar(lv("Q") - lv("ep"))
             + w1("a12", lv("ep"))
             + w2("a12", "a21", lv("Q"));
  d["c21"] = NCElement::scalar(lv("Q") - lv("ep"))
             + w1("a21", -(lv("ex") * lv("ep")))
             + w2("a12", "a21", lv("Q"));
  d["c22"] = NCElement::scalar(lv("ep") - lc(1))
             + w1("a21", -lv("Q"))
             + w2("a12", "a21", lv("ep"));
  d["b12"] = w1("a12", lv("ex", -1)) + w1("a21", lc(-1));
  d["b21"] = w1("a21", lc(1)) + w1("a12", -lv("ex"));
  return DGAlgebra("trefoil",
                   {{"a12", 0}, {"a21", 0}, {"b12", 1}, {"b21", 1},
                    {"c11", 1}, {"c12", 1}, {"c21", 1}, {"c22", 1}},
                   std::move(d));
}

}  // namespace

DGAlgebra builtin_fixture(std::string_view name) {
  if (name == "unknot") return make_unknot();
  if (name == "trefoil") return make_trefoil();
  throw std::invalid_argument("builtin_fixture: unknown name '" + std::string(name) + "'");
}

}  // namespace kch
