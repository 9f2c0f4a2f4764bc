#include "kch/diskpot.hpp"

#include <algorithm>
#include <cmath>

#include "kch/dga.hpp"

namespace kch {

namespace {

using Cplx = std::complex<double>;

struct AugEval {
  const LaurentPoly& f;
  LaurentPoly df;
  Cplx Q;

  AugEval(const LaurentPoly& aug, Cplx q) : f(aug), df(aug.derivative("ep")), Q(q) {}

  Cplx value(double lambda, Cplx mu) const {
    return f.eval({{"ex", Cplx(lambda)}, {"ep", mu}, {"Q", Q}});
  }
  Cplx dmu(double lambda, Cplx mu) const {
    return df.eval({{"ex", Cplx(lambda)}, {"ep", mu}, {"Q", Q}});
  }
};

// Newton in mu at fixed lambda; returns true on convergence.
bool newton(const AugEval& F, double lambda, Cplx& mu, const TraceConfig& cfg) {
  for (int it = 0; it < cfg.max_newton; ++it) {
    Cplx v = F.value(lambda, mu);
    if (std::abs(v) <= cfg.newton_tol) return true;
    Cplx d = F.dmu(lambda, mu);
    if (std::abs(d) < cfg.dmu_min) return false;
    Cplx delta = v / d;
    mu -= delta;
    if (std::abs(delta) <= cfg.newton_tol * std::max(1.0, std::abs(mu))) {
      return std::abs(F.value(lambda, mu)) <= cfg.residual_tol;
    }
  }
  return false;
}

}  // namespace

BranchPath trace_branch(const LaurentPoly& aug, Cplx Q_value, double x_start,
                        Cplx mu_seed, double x_end, int steps,
                        const TraceConfig& cfg) {
  if (!(aug.vars() == dga_vars()))
    throw std::invalid_argument("trace_branch: polynomial must be over (ex, ep, Q)");
  if (steps < 1) throw std::invalid_argument("trace_branch: steps must be >= 1");
  AugEval F(aug, Q_value);

  double lambda0 = std::exp(x_start);
  double seed_res = std::abs(F.value(lambda0, mu_seed));
  if (seed_res > cfg.seed_tol)
    throw SeedError("trace_branch: seed residual " + std::to_string(seed_res) +
                    " above tolerance");
  Cplx mu = mu_seed;
  newton(F, lambda0, mu, cfg);  // polish the seed to full precision

  BranchPath path;
  path.Q = Q_value;
  path.samples.push_back({x_start, lambda0, mu, std::log(mu),
                          std::abs(F.value(lambda0, mu))});

  const double h0 = (x_end - x_start) / steps;
  double x = x_start;
  int accepted = 0;
  while (accepted < steps) {
    double target = accepted + 1 == steps ? x_end
                                          : x_start + (accepted + 1) * h0;
    double full = target - x;
    double h = full;
    bool ok = false;
    Cplx mu_next;
    double x_next = 0;
    while (true) {
      x_next = h == full ? target : x + h;  // hit grid targets exactly
      double lam = std::exp(x);
      // linear predictor: dmu/dx = -lambda * df/dlambda / (df/dmu)
      Cplx dfdl = aug.derivative("ex").eval({{"ex", Cplx(lam)}, {"ep", mu}, {"Q", Q_value}});
      Cplx dfdm = F.dmu(lam, mu);
      mu_next = mu;
      if (std::abs(dfdm) >= cfg.dmu_min) mu_next = mu - h * lam * dfdl / dfdm;
      double lam_next = std::exp(x_next);
      Cplx candidate = mu_next;
      if (std::abs(F.dmu(lam_next, candidate)) >= cfg.dmu_min &&
          newton(F, lam_next, candidate, cfg)) {
        double res = std::abs(F.value(lam_next, candidate));
        Cplx p_next = path.samples.back().p + std::log(candidate / mu);
        if (res <= cfg.residual_tol &&
            std::abs(p_next - path.samples.back().p) <= cfg.jump_threshold) {
          mu_next = candidate;
          ok = true;
          break;
        }
      }
      h /= 2;  // halve near trouble; never step across a branch point
      if (std::abs(h) < cfg.min_step) break;
    }
    if (!ok)
      throw BranchPointError("trace_branch: branch point near x = " + std::to_string(x),
                             std::move(path));
    Cplx p_next = path.samples.back().p + std::log(mu_next / mu);
    x = x_next;
    mu = mu_next;
    path.samples.push_back({x, std::exp(x), mu, p_next,
                            std::abs(F.value(std::exp(x), mu))});
    if (x == target) ++accepted;
  }
  return path;
}

PotentialTable disk_potential(const BranchPath& path) {
  const auto& s = path.samples;
  if (s.size() < 3)
    throw std::invalid_argument("disk_potential: need at least 3 samples");
  for (size_t i = 1; i < s.size(); ++i)
    if (!(s[i].x > s[i - 1].x) && !(s[i].x < s[i - 1].x))
      throw std::invalid_argument("disk_potential: grid not strictly monotone");

  // integral of the parabola through (x0,f0),(x1,f1),(x2,f2) over [a, b];
  // evaluated in coordinates centered at x1 so nearby abscissas do not
  // cancel catastrophically
  auto parabola = [](double x0, Cplx f0, double x1, Cplx f1, double x2, Cplx f2,
                     double a, double b) -> Cplx {
    double c = x1;
    double u0 = x0 - c, u1 = 0.0, u2 = x2 - c, ua = a - c, ub = b - c;
    auto term = [&](double xi, Cplx fi, double xj, double xk) {
      auto P = [&](double t) {
        double t3 = t * t * t / 3.0, t2 = t * t / 2.0;
        return t3 - (xj + xk) * t2 + xj * xk * t;
      };
      return fi * (P(ub) - P(ua)) / ((xi - xj) * (xi - xk));
    };
    return term(u0, f0, u1, u2) + term(u1, f1, u0, u2) + term(u2, f2, u0, u1);
  };

  PotentialTable t;
  t.x.reserve(s.size());
  t.W.reserve(s.size());
  for (const auto& smp : s) t.x.push_back(smp.x);
  t.W.push_back(0.0);
  size_t n = s.size();
  for (size_t i = 1; i < n; ++i) {
    // even indices anchor on the full two-interval panel (composite
    // Simpson); odd indices add the half-panel integral of the local
    // parabola, which keeps the table at Simpson order throughout
    if (i % 2 == 0) {
      Cplx seg = parabola(s[i - 2].x, s[i - 2].p, s[i - 1].x, s[i - 1].p,
                          s[i].x, s[i].p, s[i - 2].x, s[i].x);
      t.W.push_back(t.W[i - 2] + seg);
    } else {
      size_t c = i + 1 < n ? i : i - 1;
      Cplx seg = parabola(s[c - 1].x, s[c - 1].p, s[c].x, s[c].p, s[c + 1].x,
                          s[c + 1].p, s[i - 1].x, s[i].x);
      t.W.push_back(t.W[i - 1] + seg);
    }
  }
  // Richardson error estimate against the half-resolution integral
  if (n >= 5) {
    Cplx coarse = 0.0;
    size_t last = 0;
    for (size_t i = 4; i < n; i += 4) {
      coarse += parabola(s[i - 4].x, s[i - 4].p, s[i - 2].x, s[i - 2].p, s[i].x,
                         s[i].p, s[i - 4].x, s[i].x);
      last = i;
    }
    if (last > 0) t.error_estimate = std::abs(t.W[last] - coarse) / 15.0;
  }
  return t;
}

GradientReport check_gradient(const BranchPath& path, const PotentialTable& table) {
  const auto& s = path.samples;
  if (s.size() != table.x.size())
    throw std::invalid_argument("check_gradient: grid size mismatch");
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i].x != table.x[i])
      throw std::invalid_argument("check_gradient: grids differ");
  if (s.size() < 5)
    throw std::invalid_argument("check_gradient: need at least 5 samples");

  // Fornberg weights for the first derivative at x[i] from the 5-point
  // stencil x[i-2..i+2]; fourth order on smooth grids.
  GradientReport rep;
  for (size_t i = 2; i + 2 < s.size(); ++i) {
    double xs[5];
    Cplx ws[5];
    for (int k = 0; k < 5; ++k) xs[k] = table.x[i - 2 + static_cast<size_t>(k)];
    double z = xs[2];
    for (int k = 0; k < 5; ++k) {
      // derivative of the k-th Lagrange basis at z
      double num = 0.0;
      for (int a = 0; a < 5; ++a) {
        if (a == k) continue;
        double prod = 1.0;
        for (int b = 0; b < 5; ++b) {
          if (b == k || b == a) continue;
          prod *= (z - xs[b]);
        }
        num += prod;
      }
      double den = 1.0;
      for (int b = 0; b < 5; ++b)
        if (b != k) den *= (xs[k] - xs[b]);
      ws[k] = num / den;
    }
    Cplx d = 0.0;
    for (int k = 0; k < 5; ++k) d += ws[k] * table.W[i - 2 + static_cast<size_t>(k)];
    double dev = std::abs(d - s[i].p);
    if (dev > rep.max_deviation) {
      rep.max_deviation = dev;
      rep.index = i;
      rep.x = s[i].x;
    }
  }
  return rep;
}

}  // namespace kch
