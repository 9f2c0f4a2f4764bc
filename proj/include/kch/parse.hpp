#pragma once

#include <stdexcept>
#include <string>

#include "kch/dga.hpp"
#include "kch/gencurve.hpp"
#include "kch/holonomic.hpp"
#include "kch/qtorus.hpp"

namespace kch {

/// Parse failure with 1-based position information.
struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                           std::to_string(col_)),
        line(line_),
        col(col_) {}
};

/// Algebra definition file. Grammar (one directive per line, `#` comments):
///   algebra <name>
///   generator <name> degree <int>
///   d <name> = <expr>
/// Expressions use `ex`, `ep`, `Q` (commuting, invertible), declared
/// generator names (noncommuting), integers, and + - * ^ ( ); `*` is
/// mandatory between factors and `^` binds tighter than `*` than `+`/`-`.
DGAlgebra parse_algebra_file(const std::string& text);

/// Operator file: a single expression in `Ex`, `Ep`, `s`, `Q` with the same
/// operator grammar; normal-ordered on read via Ep*Ex = s^2*Ex*Ep.
QTElement parse_operator_file(const std::string& text);

/// Polynomial over (ex, ep, Q); `/` is allowed as long as the result stays
/// a Laurent polynomial.
LaurentPoly parse_poly_file(const std::string& text);

/// Wavefunction file: one rational-function expression in `s`, `Q` per
/// nonempty line, listing H_0, H_1, ... in order.
Wavefunction parse_wavefunction_file(const std::string& text);

/// Curve catalog file:
///   curve <id> w=<rat> chi=<int> m=<int> k=<int> slk=<int>
///   link <id> <id> <int>
CurveCatalog parse_catalog_file(const std::string& text);

/// Canonical serialization; parse_algebra_file round-trips it.
std::string algebra_file_string(const DGAlgebra& A);

}  // namespace kch
