#pragma once

#include <stdexcept>
#include <vector>

#include "kch/qtorus.hpp"
#include "kch/ratfunc.hpp"

namespace kch {

/// Wavefunction Psi = sum_{m=0}^{M} H_m(s, Q) e^{m x}, one-sided support
/// with H_m = 0 outside [0, M]. A normalized wavefunction has H_0 = 1.
struct Wavefunction {
  std::vector<RatFunc> H;  // H[0..M]

  int top_mode() const { return static_cast<int>(H.size()) - 1; }
  const RatFunc& mode(int m) const;  // 0 outside the stored range
  bool normalized() const;
};

/// Coefficients of A(Psi) at modes 0..k_max: the term Ex^a Ep^b contributes
/// t_{a,b} * q^{b(k-a)} * H_{k-a} at mode k.
std::vector<RatFunc> act(const QTElement& A, const Wavefunction& psi, int k_max);

/// Modes fully determined by the stored coefficients: 0 .. M + a_min.
int checkable_modes(const QTElement& A, const Wavefunction& psi);

struct RecursionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Solves A(Psi) = 0 mode by mode for H_1..H_M with the seed H_0 = 1.
/// Modes whose top-unknown coefficient vanishes identically are treated
/// as consistency constraints; a nonzero residual there, or an unknown
/// left undetermined at the end, raises RecursionError.
Wavefunction solve_recursion(const QTElement& A, int M);

/// Framing transform on wavefunctions: H_m -> q^{r m^2} H_m.
Wavefunction frame_wavefunction(const Wavefunction& psi, int r);

}  // namespace kch
