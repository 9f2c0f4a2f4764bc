#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "kch/rational.hpp"
#include "kch/varset.hpp"

namespace kch {

/// Exponent vector over a VarSet; entries may be negative (Laurent).
using ExpVec = std::vector<int32_t>;

/// Term order used for storage and rendering: exponent vectors are compared
/// reading from the last variable down to the first, ascending. With the
/// variable order (ex, ep, Q) this renders e.g. `1 - ex - ep - Q*ex*ep`.
struct TermLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
/// Immutable in spirit: all operations return new values; no zero
/// coefficients are ever stored and the term map is kept in canonical order.
class LaurentPoly {
 public:
  using TermMap = std::map<ExpVec, Rat, TermLess>;

  LaurentPoly() = default;  // zero over the empty VarSet
  explicit LaurentPoly(VarSet vs) : vars_(std::move(vs)) {}

  static LaurentPoly constant(VarSet vs, const Rat& c);
  static LaurentPoly monomial(VarSet vs, ExpVec e, const Rat& c);
  static LaurentPoly variable(const VarSet& vs, std::string_view name, int exp = 1);

  const VarSet& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Nonzero single-term polynomials are the units of the Laurent ring.
  bool is_unit_monomial() const { return terms_.size() == 1; }
  Rat constant_value() const;  // requires is_constant()

  Rat coeff(const ExpVec& e) const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly scaled(const Rat& c) const;

  /// f^n; n < 0 requires a unit monomial.
  LaurentPoly pow(long n) const;

  bool operator==(const LaurentPoly& o) const;

  /// Ring-homomorphic substitution of one variable by an invertible monomial
  /// (single term, nonzero coefficient) over the same VarSet.
  LaurentPoly substitute(std::string_view var, const LaurentPoly& image) const;

  /// Numeric evaluation. Terms are accumulated in canonical order, each
  /// evaluated with binary exponentiation, so results are reproducible.
  /// Throws if a variable is unassigned or 0 is assigned to a variable
  /// that occurs with negative exponent.
  std::complex<double> eval(const std::map<std::string, std::complex<double>>& point) const;

  /// Formal partial derivative with respect to one variable.
  LaurentPoly derivative(std::string_view var) const;

  /// Per-variable minimum exponent over all terms (zero polynomial -> all 0).
  ExpVec min_exponents() const;
  /// Per-variable maximum exponent over all terms.
  ExpVec max_exponents() const;
  /// Multiply by the monomial with the given exponent vector.
  LaurentPoly shifted(const ExpVec& shift) const;

  /// Positive rational c such that (1/c)*this has coprime integer
  /// coefficients. Zero polynomial -> 1.
  Rat content() const;

  /// Coefficient of the first term in canonical order (0 for the zero
  /// polynomial). Used to fix signs of normal forms.
  Rat leading_coeff_canonical() const;

  /// Canonical text rendering: terms in canonical order, explicit `*`,
  /// `^` for powers. This is the interchange format used everywhere.
  std::string str() const;

 private:
  void insert_term(const ExpVec& e, const Rat& c);  // accumulates, drops zeros
  void check_same_vars(const LaurentPoly& o) const;

  VarSet vars_;
  TermMap terms_;
};

/// GCD of two polynomials with all exponents >= 0, computed by a primitive
/// pseudo-remainder sequence recursing on the first active variable.
/// Result is Z-primitive with positive canonical leading coefficient.
LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact division; throws if the division leaves a remainder.
LaurentPoly lp_divexact(const LaurentPoly& a, const LaurentPoly& b);

/// If f == u*g for a unit monomial u, returns u.
std::optional<LaurentPoly> lp_unit_quotient(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace kch
