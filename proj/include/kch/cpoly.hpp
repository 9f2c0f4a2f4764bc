#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kch/rational.hpp"
#include "kch/varset.hpp"

namespace kch {

/// Monomial with ordinary (nonnegative) exponents.
struct Mono {
  std::vector<int32_t> e;

  static Mono unit(size_t n) { return Mono{std::vector<int32_t>(n, 0)}; }
  bool is_unit() const;
  int64_t total_degree() const;
  Mono operator*(const Mono& o) const;
  bool divides(const Mono& o) const;     // this | o
  Mono quotient(const Mono& o) const;    // o / this
  static Mono lcm(const Mono& a, const Mono& b);
  bool operator==(const Mono&) const = default;
};

/// Block monomial order: variables are split into consecutive blocks,
/// earlier blocks dominate, degrevlex inside each block. This is an
/// elimination order for every block prefix.
class MonoOrder {
 public:
  MonoOrder(std::vector<size_t> block_sizes);

  size_t nvars() const { return nvars_; }
  size_t nblocks() const { return blocks_.size(); }
  /// strict a < b
  bool less(const Mono& a, const Mono& b) const;

  bool operator==(const MonoOrder&) const = default;

 private:
  std::vector<std::pair<size_t, size_t>> blocks_;  // [begin, end) per block
  size_t nvars_ = 0;
};

/// Commutative polynomial over Q stored as terms sorted descending in a
/// shared monomial order (leading term first).
class CPoly {
 public:
  using Term = std::pair<Mono, Rat>;

  CPoly() = default;
  explicit CPoly(std::shared_ptr<const MonoOrder> ord) : ord_(std::move(ord)) {}

  static CPoly constant(std::shared_ptr<const MonoOrder> ord, const Rat& c);
  static CPoly monomial(std::shared_ptr<const MonoOrder> ord, Mono m, const Rat& c);

  const std::shared_ptr<const MonoOrder>& order() const { return ord_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading() const;

  CPoly operator-() const;
  CPoly operator+(const CPoly& o) const;
  CPoly operator-(const CPoly& o) const;
  CPoly operator*(const CPoly& o) const;
  CPoly scaled(const Rat& c) const;
  CPoly mul_term(const Mono& m, const Rat& c) const;
  CPoly monic() const;

  int64_t total_degree() const;  // max over terms; -1 for zero
  bool uses_var(size_t v) const;

  bool operator==(const CPoly& o) const;

  std::string str(const VarSet& vars) const;  // debug rendering, order as stored

 private:
  static CPoly merge(const CPoly& a, const CPoly& b, bool subtract);
  std::shared_ptr<const MonoOrder> ord_;
  std::vector<Term> terms_;  // descending
};

/// Remainder of multivariate division of f by the (ordered) list G.
CPoly normal_form(const CPoly& f, const std::vector<CPoly>& G);

/// S-polynomial of two nonzero polynomials.
CPoly s_poly(const CPoly& f, const CPoly& g);

/// Buchberger's algorithm with normal pair selection (smallest lcm in the
/// order, sugar degree as tie-break) and the product criterion. Returns the
/// reduced Groebner basis, monic, sorted ascending by leading monomial --
/// a canonical object for the given order.
std::vector<CPoly> buchberger(std::vector<CPoly> gens);

}  // namespace kch
