#include "kch/holonomic.hpp"

#include <sstream>

namespace kch {

namespace {

RatFunc q_power(long k) {
  return RatFunc(LaurentPoly::monomial(qt_vars(), {static_cast<int32_t>(2 * k), 0}, Rat(1)));
}

RatFunc rf_zero() { return RatFunc(qt_vars()); }

}  // namespace

const RatFunc& Wavefunction::mode(int m) const {
  static const RatFunc zero = rf_zero();
  if (m < 0 || m >= static_cast<int>(H.size())) return zero;
  return H[static_cast<size_t>(m)];
}

bool Wavefunction::normalized() const {
  return !H.empty() && H.front().is_one();
}

std::vector<RatFunc> act(const QTElement& A, const Wavefunction& psi, int k_max) {
  if (k_max < 0) throw std::invalid_argument("act: negative mode bound");
  std::vector<RatFunc> out;
  out.reserve(static_cast<size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    RatFunc acc = rf_zero();
    for (const auto& [key, t] : A.terms()) {
      auto [a, b] = key;
      const RatFunc& h = psi.mode(k - a);
      if (h.is_zero()) continue;
      acc += t * q_power(static_cast<long>(b) * (k - a)) * h;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

int checkable_modes(const QTElement& A, const Wavefunction& psi) {
  return psi.top_mode() + A.min_x_degree();
}

Wavefunction solve_recursion(const QTElement& A, int M) {
  if (M < 0) throw std::invalid_argument("solve_recursion: negative mode bound");
  if (A.is_zero()) throw RecursionError("solve_recursion: zero operator");
  int a_min = A.min_x_degree();
  int a_max = A.max_x_degree();
  if (a_max <= a_min)
    throw RecursionError("solve_recursion: operator has a single x-degree, no recursion");

  Wavefunction psi;
  psi.H.assign(static_cast<size_t>(M) + 1, rf_zero());
  psi.H[0] = RatFunc::constant(qt_vars(), 1);
  std::vector<bool> known(static_cast<size_t>(M) + 1, false);
  known[0] = true;

  // mode k determines the top-index unknown H_{k - a_min}; modes below
  // a_max are boundary terms of the one-sided support and are not imposed
  for (int k = a_max; k <= M + a_min; ++k) {
    int j = k - a_min;  // top unknown index at this mode
    RatFunc top = rf_zero();
    RatFunc rest = rf_zero();
    for (const auto& [key, t] : A.terms()) {
      auto [a, b] = key;
      if (a == a_min) {
        top += t * q_power(static_cast<long>(b) * j);
      } else {
        int idx = k - a;
        if (idx < 0 || idx > M) continue;
        if (!known[static_cast<size_t>(idx)])
          throw RecursionError("solve_recursion: no solution, mode " +
                               std::to_string(k) +
                               " references undetermined coefficient H_" +
                               std::to_string(idx));
        rest += t * q_power(static_cast<long>(b) * idx) * psi.H[static_cast<size_t>(idx)];
      }
    }
    if (j >= 1 && j <= M && !known[static_cast<size_t>(j)]) {
      if (top.is_zero()) {
        if (!rest.is_zero())
          throw RecursionError(
              "solve_recursion: inconsistent mode " + std::to_string(k) +
              " (vanishing unknown coefficient, nonzero residual)");
        // H_j stays undetermined; if no later mode pins it this surfaces
        // as no-solution below
        continue;
      }
      psi.H[static_cast<size_t>(j)] = -rest / top;
      known[static_cast<size_t>(j)] = true;
    } else {
      // already determined (or the seed): pure consistency constraint
      RatFunc residual = rest;
      if (j >= 0 && j <= M && known[static_cast<size_t>(j)])
        residual += top * psi.H[static_cast<size_t>(j)];
      if (!residual.is_zero())
        throw RecursionError("solve_recursion: inconsistent mode " +
                             std::to_string(k) + " with seed H_0 = 1");
    }
  }
  for (int j = 1; j <= M; ++j)
    if (!known[static_cast<size_t>(j)])
      throw RecursionError("solve_recursion: no solution, H_" + std::to_string(j) +
                           " undetermined by the operator");
  return psi;
}

Wavefunction frame_wavefunction(const Wavefunction& psi, int r) {
  Wavefunction out;
  out.H.reserve(psi.H.size());
  for (size_t m = 0; m < psi.H.size(); ++m) {
    long mm = static_cast<long>(m);
    out.H.push_back(psi.H[m] * q_power(static_cast<long>(r) * mm * mm));
  }
  return out;
}

}  // namespace kch
