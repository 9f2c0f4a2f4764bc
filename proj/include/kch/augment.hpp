#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kch/cpoly.hpp"
#include "kch/dga.hpp"
#include "kch/laurent.hpp"

namespace kch {

/// Commutative polynomial system read off from selected degree-1
/// differentials: degree-0 chords become unknowns, chords of positive degree
/// map to 0, coefficients are unchanged.
struct PolySystem {
  std::vector<std::string> unknowns;  // degree-0 chords occurring, sorted
  VarSet vars;                        // unknowns ++ (ex, ep, Q)
  std::vector<std::pair<std::string, LaurentPoly>> equations;  // (generator, image)
};

PolySystem augmentation_system(const DGAlgebra& A, std::vector<std::string> selection);
PolySystem augmentation_system(const DGAlgebra& A);  // all degree-1 generators

/// Ordinary-polynomial encoding of the system over the variable list
/// [saturation tags | unknowns | inverse tags | parameters] with unit
/// relations v*v_inv = 1. The block order eliminates every prefix.
struct PolyIdeal {
  std::vector<std::string> var_names;  // full list, in block order
  size_t n_sat = 0;
  size_t n_unknowns = 0;
  size_t n_tags = 3;
  size_t n_params = 3;
  std::shared_ptr<const MonoOrder> order;
  std::vector<CPoly> gens;
  std::vector<std::string> unknowns;

  VarSet var_set() const { return VarSet(var_names); }
};

/// Builds the ideal; optional saturation variables (by name, from
/// unknowns or parameters) get Rabinowitsch tags in the leading block.
PolyIdeal make_ideal(const PolySystem& sys, const std::vector<std::string>& saturate = {});

/// Affinize a Laurent polynomial over dga_vars() into the ideal's ring
/// (negative parameter exponents go to the inverse tags).
CPoly affinize(const PolyIdeal& I, const LaurentPoly& f);

/// Map a chord-free, saturation-free basis element back to a Laurent
/// polynomial over dga_vars() (inverse tags become negative exponents).
LaurentPoly laurentize(const PolyIdeal& I, const CPoly& p);

struct GroebnerResult {
  PolyIdeal ideal;
  std::vector<CPoly> basis;       // reduced Groebner basis
  std::vector<CPoly> chord_free;  // elements free of saturation tags and unknowns
  std::vector<CPoly> param_only;  // elements free of everything but parameters
};

GroebnerResult groebner(const PolyIdeal& I);

/// Unit/sign normalization certificate: poly = original * Q^shift * scale
/// with the result Z-primitive, minimum exponent 0 per variable and positive
/// canonical leading coefficient. Normalization is idempotent.
struct AugPolynomial {
  LaurentPoly poly;
  ExpVec unit_shift;  // exponent vector of the monomial applied
  Rat scale;          // rational factor applied (carries the sign)
  std::string certificate() const;
};

AugPolynomial normalize_aug(const LaurentPoly& f);

/// Full pipeline: system -> ideal -> Groebner -> parameter-only elements,
/// Laurentized, normalized and deduplicated.
struct EliminationResult {
  PolySystem system;
  GroebnerResult gb;
  std::vector<AugPolynomial> polynomials;
};

EliminationResult eliminate_augmentation(const DGAlgebra& A,
                                         std::vector<std::string> selection,
                                         const std::vector<std::string>& saturate = {});

/// Transcribed reference augmentation polynomials for comparisons.
LaurentPoly trefoil_aug_reference();  // the expanded degree-2 display
LaurentPoly unknot_aug_reference();   // sign variant with +Q*ex*ep

struct CombinationReport {
  LaurentPoly combination;  // over (a12, a21, ex, ep, Q)
  LaurentPoly expansion;    // reference polynomial lifted to the same ring
  LaurentPoly difference;   // combination - expansion
  bool pass = false;        // difference == 0
};

/// Expands the displayed cofactor combination of dc21, dc22, db12 with the
/// chord images as commutative unknowns and compares against the reference
/// expansion. Any nonzero difference is carried verbatim in the report.
CombinationReport verify_trefoil_combination();

/// Extend a polynomial to a larger VarSet (variables matched by name).
LaurentPoly lp_extend(const LaurentPoly& f, const VarSet& target);

}  // namespace kch
