#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "kch/laurent.hpp"

namespace kch {

/// Numeric tolerances of the branch tracer. Defaults are the documented
/// contract; all are overridable.
struct TraceConfig {
  double seed_tol = 1e-8;        // max |Aug| at the seed
  double newton_tol = 1e-12;     // Newton convergence on |Aug|
  double residual_tol = 1e-10;   // accepted-sample residual bound
  double dmu_min = 1e-8;         // |dAug/dmu| below this is a branch point
  double min_step = 1e-10;       // smallest step before giving up
  double jump_threshold = 1.0;   // max |p_i - p_{i-1}| along the path
  int max_newton = 50;
};

struct BranchSample {
  double x;
  double lambda;                 // e^x
  std::complex<double> mu;
  std::complex<double> p;        // log mu, continuously unwound along the path
  double residual;               // |Aug(lambda, mu, Q)|
};

struct BranchPath {
  std::complex<double> Q;
  std::vector<BranchSample> samples;
};

struct SeedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when continuation cannot pass a point even at the minimum step;
/// carries the path traced so far.
struct BranchPointError : std::runtime_error {
  BranchPath partial;
  BranchPointError(const std::string& what, BranchPath path)
      : std::runtime_error(what), partial(std::move(path)) {}
};

/// Predictor-corrector continuation of the root mu(x) of Aug(e^x, mu, Q) = 0
/// from x_start to x_end in the given number of steps (plus adaptive halving
/// near small |dAug/dmu|). `aug` is a polynomial over (ex, ep, Q).
BranchPath trace_branch(const LaurentPoly& aug, std::complex<double> Q_value,
                        double x_start, std::complex<double> mu_seed,
                        double x_end, int steps, const TraceConfig& cfg = {});

struct PotentialTable {
  std::vector<double> x;
  std::vector<std::complex<double>> W;  // W(x_0) = 0 at the basepoint
  std::string rule = "simpson-cumulative";
  double error_estimate = 0.0;          // Richardson estimate on the endpoint
};

/// Cumulative integral of p dx along the path (piecewise-parabolic panels,
/// exact for quadratics; handles non-uniform grids).
PotentialTable disk_potential(const BranchPath& path);

struct GradientReport {
  double max_deviation = 0.0;
  size_t index = 0;  // sample index where the maximum occurs
  double x = 0.0;
};

/// Compares fourth-order central finite differences of W against the sampled
/// p on the interior of the grid. Grids must match; needs >= 5 samples.
GradientReport check_gradient(const BranchPath& path, const PotentialTable& table);

}  // namespace kch
