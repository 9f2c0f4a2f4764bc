#pragma once

#include <map>
#include <string>
#include <utility>

#include "kch/laurent.hpp"
#include "kch/ratfunc.hpp"

namespace kch {

/// Coefficient variables of the quantum torus: s = q^{1/2} and Q.
const VarSet& qt_vars();

/// Operator polynomial in the quantum torus: a finite sum of normally
/// ordered monomials Ex^m Ep^n with coefficients in Q(s, Q), subject to
/// Ep*Ex = q Ex*Ep with q = s^2. Terms are kept in the same canonical
/// order as ring polynomials: the p-exponent compares first.
struct QTKeyLess {
  bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  }
};

class QTElement {
 public:
  using Key = std::pair<int, int>;
  using TermMap = std::map<Key, RatFunc, QTKeyLess>;

  QTElement() = default;

  static QTElement zero() { return QTElement(); }
  static QTElement one();
  static QTElement monomial(int m, int n, RatFunc c);
  static QTElement monomial(int m, int n);  // coefficient 1

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  RatFunc coeff(int m, int n) const;

  /// m-degree support, needed by the recursion solver.
  int min_x_degree() const;
  int max_x_degree() const;

  QTElement operator-() const;
  QTElement operator+(const QTElement& o) const;
  QTElement operator-(const QTElement& o) const;
  QTElement& operator+=(const QTElement& o) { return *this = *this + o; }
  QTElement& operator-=(const QTElement& o) { return *this = *this - o; }
  QTElement scaled(const RatFunc& c) const;
  QTElement pow(long n) const;  // n < 0 requires a single invertible term

  bool operator==(const QTElement& o) const { return terms_ == o.terms_; }

  std::string str() const;  // canonical text, `Ex`/`Ep` symbols

 private:
  void insert_term(const Key& k, const RatFunc& c);
  friend QTElement qt_mul(const QTElement&, const QTElement&);
  friend QTElement qt_frame(const QTElement&, int);

  TermMap terms_;
};

/// Bilinear product with (Ex^a Ep^b)(Ex^c Ep^d) = q^{bc} Ex^{a+c} Ep^{b+d}.
QTElement qt_mul(const QTElement& A, const QTElement& B);

/// Classical limit: s -> 1, Ex -> ex, Ep -> ep. Throws on a pole at s = 1
/// or if a coefficient fails to become a Laurent polynomial there.
LaurentPoly qt_classical(const QTElement& A);

/// Framing conjugation: term (m, n) -> (m, n + 2rm) scaled by q^{r m^2}.
QTElement qt_frame(const QTElement& A, int r);

/// Quantized augmentation operator fixtures:
/// "aug_hat_unknot" and "aug_hat_trefoil".
QTElement qt_fixture(std::string_view name);

}  // namespace kch
