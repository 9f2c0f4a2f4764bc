#include "kch/cpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kch {

bool Mono::is_unit() const {
  return std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
}

int64_t Mono::total_degree() const {
  int64_t d = 0;
  for (int32_t x : e) d += x;
  return d;
}

Mono Mono::operator*(const Mono& o) const {
  Mono r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
  return r;
}

bool Mono::divides(const Mono& o) const {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Mono Mono::quotient(const Mono& o) const {
  Mono r = o;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] -= e[i];
  return r;
}

Mono Mono::lcm(const Mono& a, const Mono& b) {
  Mono r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

MonoOrder::MonoOrder(std::vector<size_t> block_sizes) {
  size_t begin = 0;
  for (size_t s : block_sizes) {
    if (s == 0) continue;
    blocks_.emplace_back(begin, begin + s);
    begin += s;
  }
  nvars_ = begin;
  if (nvars_ == 0) throw std::invalid_argument("MonoOrder: no variables");
}

bool MonoOrder::less(const Mono& a, const Mono& b) const {
  for (const auto& [lo, hi] : blocks_) {
    int64_t da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da < db;
    // revlex within the block: larger = smaller exponent at the last
    // differing variable, scanning from the block end
    for (size_t i = hi; i-- > lo;) {
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    }
  }
  return false;
}

CPoly CPoly::constant(std::shared_ptr<const MonoOrder> ord, const Rat& c) {
  CPoly p(std::move(ord));
  if (c != 0) p.terms_.push_back({Mono::unit(p.ord_->nvars()), c});
  return p;
}

CPoly CPoly::monomial(std::shared_ptr<const MonoOrder> ord, Mono m, const Rat& c) {
  CPoly p(std::move(ord));
  if (m.e.size() != p.ord_->nvars())
    throw std::invalid_argument("CPoly::monomial: exponent length mismatch");
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

const CPoly::Term& CPoly::leading() const {
  if (terms_.empty()) throw std::logic_error("CPoly::leading: zero polynomial");
  return terms_.front();
}

CPoly CPoly::merge(const CPoly& a, const CPoly& b, bool subtract) {
  CPoly r(a.ord_ ? a.ord_ : b.ord_);
  const auto& ord = *r.ord_;
  size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() ||
        (i < a.terms_.size() && ord.less(b.terms_[j].first, a.terms_[i].first))) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || ord.less(a.terms_[i].first, b.terms_[j].first)) {
      Rat c = subtract ? Rat(-b.terms_[j].second) : b.terms_[j].second;
      r.terms_.push_back({b.terms_[j].first, c});
      ++j;
    } else {
      Rat c = subtract ? Rat(a.terms_[i].second - b.terms_[j].second)
                       : Rat(a.terms_[i].second + b.terms_[j].second);
      if (c != 0) r.terms_.push_back({a.terms_[i].first, c});
      ++i;
      ++j;
    }
  }
  return r;
}

CPoly CPoly::operator-() const {
  CPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

CPoly CPoly::operator+(const CPoly& o) const { return merge(*this, o, false); }
CPoly CPoly::operator-(const CPoly& o) const { return merge(*this, o, true); }

CPoly CPoly::operator*(const CPoly& o) const {
  CPoly acc(ord_ ? ord_ : o.ord_);
  for (const auto& [m, c] : o.terms_) acc = acc + mul_term(m, c);
  return acc;
}

CPoly CPoly::scaled(const Rat& c) const {
  CPoly r(ord_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [m, k] : r.terms_) k *= c;
  return r;
}

CPoly CPoly::mul_term(const Mono& m, const Rat& c) const {
  CPoly r(ord_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [mm, cc] : terms_) r.terms_.push_back({mm * m, cc * c});
  return r;
}

CPoly CPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(Rat(1) / terms_.front().second);
}

int64_t CPoly::total_degree() const {
  int64_t d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

bool CPoly::uses_var(size_t v) const {
  for (const auto& [m, c] : terms_)
    if (m.e[v] != 0) return true;
  return false;
}

bool CPoly::operator==(const CPoly& o) const { return terms_ == o.terms_; }

std::string CPoly::str(const VarSet& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string mono;
    for (size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars.name(i);
      if (m.e[i] != 1) mono += "^" + std::to_string(m.e[i]);
    }
    if (mono.empty())
      os << rat_str(a);
    else if (a == 1)
      os << mono;
    else
      os << rat_str(a) << "*" << mono;
  }
  return os.str();
}

CPoly normal_form(const CPoly& f, const std::vector<CPoly>& G) {
  CPoly r(f.order());
  CPoly h = f;
  while (!h.is_zero()) {
    bool reduced = false;
    for (const auto& g : G) {
      if (g.is_zero()) continue;
      if (g.leading().first.divides(h.leading().first)) {
        Mono q = g.leading().first.quotient(h.leading().first);
        h = h - g.mul_term(q, h.leading().second / g.leading().second);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      r = r + CPoly::monomial(f.order(), h.leading().first, h.leading().second);
      h = h - CPoly::monomial(f.order(), h.leading().first, h.leading().second);
    }
  }
  return r;
}

CPoly s_poly(const CPoly& f, const CPoly& g) {
  Mono l = Mono::lcm(f.leading().first, g.leading().first);
  CPoly a = f.mul_term(f.leading().first.quotient(l), Rat(1) / f.leading().second);
  CPoly b = g.mul_term(g.leading().first.quotient(l), Rat(1) / g.leading().second);
  return a - b;
}

namespace {

struct Pair {
  size_t i, j;
  Mono lcm;
  int64_t sugar;
};

int64_t reduction_sugar(const CPoly& f, const std::vector<CPoly>& G,
                        const std::vector<int64_t>& sug, int64_t start) {
  // track the sugar degree through a full reduction
  int64_t s = start;
  CPoly h = f;
  CPoly r(f.order());
  while (!h.is_zero()) {
    bool reduced = false;
    for (size_t k = 0; k < G.size(); ++k) {
      const auto& g = G[k];
      if (g.is_zero()) continue;
      if (g.leading().first.divides(h.leading().first)) {
        Mono q = g.leading().first.quotient(h.leading().first);
        s = std::max(s, sug[k] + q.total_degree());
        h = h - g.mul_term(q, h.leading().second / g.leading().second);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      r = r + CPoly::monomial(f.order(), h.leading().first, h.leading().second);
      h = h - CPoly::monomial(f.order(), h.leading().first, h.leading().second);
    }
  }
  return s;
}

}  // namespace

std::vector<CPoly> buchberger(std::vector<CPoly> gens) {
  std::vector<CPoly> G;
  std::vector<int64_t> sugar;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    sugar.push_back(g.total_degree());
    G.push_back(g.monic());
  }
  if (G.empty()) return G;
  const auto ord = G.front().order();

  auto make_pair = [&](size_t i, size_t j) {
    Mono l = Mono::lcm(G[i].leading().first, G[j].leading().first);
    int64_t s = std::max(
        sugar[i] + G[i].leading().first.quotient(l).total_degree(),
        sugar[j] + G[j].leading().first.quotient(l).total_degree());
    return Pair{i, j, std::move(l), s};
  };

  std::vector<Pair> pairs;
  for (size_t j = 1; j < G.size(); ++j)
    for (size_t i = 0; i < j; ++i) pairs.push_back(make_pair(i, j));

  while (!pairs.empty()) {
    // normal selection: minimal lcm in the order, then minimal sugar, then index
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k) {
      const Pair &a = pairs[k], &b = pairs[best];
      if (ord->less(a.lcm, b.lcm) ||
          (a.lcm == b.lcm &&
           (a.sugar < b.sugar ||
            (a.sugar == b.sugar && std::tie(a.j, a.i) < std::tie(b.j, b.i)))))
        best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    // product criterion
    if (p.lcm == G[p.i].leading().first * G[p.j].leading().first) continue;

    CPoly sp = s_poly(G[p.i], G[p.j]);
    int64_t s0 = std::max(
        sugar[p.i] + G[p.i].leading().first.quotient(p.lcm).total_degree(),
        sugar[p.j] + G[p.j].leading().first.quotient(p.lcm).total_degree());
    int64_t snew = reduction_sugar(sp, G, sugar, s0);
    CPoly h = normal_form(sp, G);
    if (h.is_zero()) continue;
    G.push_back(h.monic());
    sugar.push_back(snew);
    for (size_t i = 0; i + 1 < G.size(); ++i) pairs.push_back(make_pair(i, G.size() - 1));
  }

  // minimalize: drop elements whose leading monomial is divisible by another's
  std::vector<CPoly> mins;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (G[j].leading().first.divides(G[i].leading().first)) {
        // on equal leading monomials keep the earlier element
        redundant = !(G[i].leading().first == G[j].leading().first) || j < i;
      }
    }
    if (!redundant) mins.push_back(G[i]);
  }
  // inter-reduce to the canonical reduced basis
  std::vector<CPoly> red;
  for (size_t i = 0; i < mins.size(); ++i) {
    std::vector<CPoly> others;
    for (size_t j = 0; j < mins.size(); ++j)
      if (j != i) others.push_back(mins[j]);
    CPoly h = normal_form(mins[i], others);
    if (!h.is_zero()) red.push_back(h.monic());
  }
  std::sort(red.begin(), red.end(), [&](const CPoly& a, const CPoly& b) {
    return ord->less(a.leading().first, b.leading().first);
  });
  return red;
}

}  // namespace kch
