#pragma once

#include <map>
#include <string>
#include <vector>

#include "kch/laurent.hpp"

namespace kch {

/// Coefficient variables of the conormal dg-algebra: ex = e^x, ep = e^p, Q.
const VarSet& dga_vars();

struct ChordGen {
  std::string name;
  int degree = 0;
  bool operator==(const ChordGen&) const = default;
};

/// Word in the free noncommutative algebra; empty word is the unit.
/// Canonical word order is length-then-lex on generator names.
struct NCWord {
  std::vector<std::string> letters;
  bool operator==(const NCWord&) const = default;
};

struct NCWordLess {
  bool operator()(const NCWord& a, const NCWord& b) const;
};

/// Element of the free algebra: finite sum of words with nonzero
/// LaurentPoly coefficients; coefficients commute with the words.
class NCElement {
 public:
  using TermMap = std::map<NCWord, LaurentPoly, NCWordLess>;

  NCElement() = default;
  explicit NCElement(VarSet coeff_vars) : vars_(std::move(coeff_vars)) {}

  static NCElement scalar(const LaurentPoly& c);
  static NCElement word(VarSet coeff_vars, NCWord w, const LaurentPoly& c);
  static NCElement generator(VarSet coeff_vars, std::string_view name);

  const VarSet& coeff_vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  NCElement operator-() const;
  NCElement operator+(const NCElement& o) const;
  NCElement operator-(const NCElement& o) const;
  NCElement& operator+=(const NCElement& o) { return *this = *this + o; }
  NCElement& operator-=(const NCElement& o) { return *this = *this - o; }
  NCElement scaled(const LaurentPoly& c) const;

  bool operator==(const NCElement& o) const;

  /// Consecutive repeated generators render as powers: a12*a12*a21 -> a12^2*a21.
  std::string str() const;

 private:
  void insert_term(const NCWord& w, const LaurentPoly& c);
  friend NCElement nc_mul_impl(const NCElement&, const NCElement&);

  VarSet vars_;
  TermMap terms_;
};

/// Graded free noncommutative dg-algebra over LaurentPoly coefficients.
/// Degrees are >= 0; the differential defaults to 0 and is extended to
/// products by the graded Leibniz rule with the Koszul sign.
class DGAlgebra {
 public:
  DGAlgebra(std::string name, std::vector<ChordGen> gens,
            std::map<std::string, NCElement> differentials);

  const std::string& name() const { return name_; }
  const std::vector<ChordGen>& generators() const { return gens_; }
  bool has_generator(std::string_view name) const;
  int degree_of(std::string_view gen) const;
  const NCElement& differential(std::string_view gen) const;

  /// Sum of generator degrees; words must reference known generators.
  int word_degree(const NCWord& w) const;

  bool operator==(const DGAlgebra& o) const;

 private:
  std::string name_;
  std::vector<ChordGen> gens_;
  std::map<std::string, int, std::less<>> degree_;
  std::map<std::string, NCElement, std::less<>> diff_;
  NCElement zero_;
};

/// Bilinear concatenation product. Every letter must be a generator of A.
NCElement nc_mul(const DGAlgebra& A, const NCElement& u, const NCElement& v);

/// Extends the differential to an element by linearity and the graded
/// Leibniz rule d(vw) = d(v)w + (-1)^{deg v} v d(w).
NCElement apply_d(const DGAlgebra& A, const NCElement& u);

struct D2Report {
  struct Entry {
    std::string gen;
    NCElement residual;
  };
  std::vector<Entry> failures;
  bool pass() const { return failures.empty(); }
};

/// d(d(g)) for every generator; nonzero residuals are reported.
D2Report check_d_squared(const DGAlgebra& A);

struct GradingReport {
  struct Entry {
    std::string gen;
    NCWord word;
    int expected;
    int actual;
  };
  std::vector<Entry> violations;
  bool pass() const { return violations.empty(); }
};

/// Verifies each d(g) is homogeneous of degree deg(g) - 1.
GradingReport check_grading(const DGAlgebra& A);

/// The two transcribed conormal algebras: "unknot" (chords c, e) and
/// "trefoil" (chords a12, a21 in degree 0 and b12, b21, c11, c12, c21, c22
/// in degree 1).
DGAlgebra builtin_fixture(std::string_view name);

}  // namespace kch
