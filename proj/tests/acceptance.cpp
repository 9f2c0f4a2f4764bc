// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "kch/augment.hpp"
#include "kch/diskpot.hpp"
#include "kch/gencurve.hpp"
#include "kch/holonomic.hpp"
#include "kch/parse.hpp"
#include "kch/qtorus.hpp"
#include "kch/records.hpp"
#include "test_util.hpp"

using namespace kch;
using testutil::Rng;

namespace {

int failures = 0;

void criterion(int id, const std::string& label, double budget_s,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
    ok = false;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_budget = budget_s <= 0 || secs < budget_s;
  bool pass = ok && in_budget;
  if (!pass) ++failures;
  std::printf("C%-2d %s  [%.3fs%s]  %s", id, pass ? "PASS" : "FAIL", secs,
              budget_s > 0 ? (" / " + std::to_string(budget_s).substr(0, 4) + "s").c_str() : "",
              label.c_str());
  if (!detail.empty()) std::printf("\n     %s", detail.c_str());
  if (!in_budget) std::printf("\n     runtime budget exceeded");
  std::printf("\n");
}

LaurentPoly v(std::string_view n, int e = 1) { return LaurentPoly::variable(dga_vars(), n, e); }
LaurentPoly k(long c) { return LaurentPoly::constant(dga_vars(), Rat(c)); }

RatFunc rf_one() { return RatFunc::constant(qt_vars(), 1); }
RatFunc qpow(long j) {
  return RatFunc(LaurentPoly::monomial(qt_vars(), {static_cast<int32_t>(2 * j), 0}, Rat(1)));
}

std::complex<double> unknot_mu(double x, double Q) {
  double lam = std::exp(x);
  return (1.0 - lam) / (1.0 + Q * lam);
}

}  // namespace

int main() {
  std::printf("acceptance suite (%s)\n", kToolVersion);

  // 1 ----------------------------------------------------------------------
  criterion(1, "d^2 = 0 and grading reports pass for both fixtures", 1.0,
            [](std::string&) {
              for (auto name : {"unknot", "trefoil"}) {
                DGAlgebra A = builtin_fixture(name);
                if (!check_d_squared(A).pass()) return false;
                if (!check_grading(A).pass()) return false;
              }
              return true;
            });

  // 2 ----------------------------------------------------------------------
  criterion(2,
            "unknot elimination equals 1 - ex - ep - Q*ex*ep; sign "
            "discrepancy vs the +Q reference emitted",
            1.0, [](std::string& detail) {
              DGAlgebra U = builtin_fixture("unknot");
              EliminationResult res = eliminate_augmentation(U, {"c"});
              if (res.polynomials.size() != 1) return false;
              LaurentPoly expected =
                  k(1) - v("ex") - v("ep") - v("Q") * v("ex") * v("ep");
              if (!(res.polynomials[0].poly == normalize_aug(expected).poly))
                return false;
              LaurentPoly diff =
                  res.polynomials[0].poly - normalize_aug(unknot_aug_reference()).poly;
              detail = "discrepancy record: computed - reference = " + diff.str();
              return diff == k(-2) * v("Q") * v("ex") * v("ep");
            });

  // 3 ----------------------------------------------------------------------
  criterion(3,
            "trefoil cofactor combination expanded; exact difference vs the "
            "reference expansion computed and reported",
            5.0, [](std::string& detail) {
              CombinationReport rep = verify_trefoil_combination();
              // numeric cross-check of the symbolic difference at 20 points
              Rng rng(31337);
              for (int i = 0; i < 20; ++i) {
                std::map<std::string, std::complex<double>> pt = {
                    {"ex", {0.2 + 0.1 * static_cast<double>(rng.pick(0, 19)), 0.3}},
                    {"ep", {0.2 + 0.1 * static_cast<double>(rng.pick(0, 19)), -0.2}},
                    {"Q", {0.2 + 0.1 * static_cast<double>(rng.pick(0, 19)), 0.1}},
                    {"a12", {0.1 * static_cast<double>(rng.pick(-9, 9)), 0.25}},
                    {"a21", {0.1 * static_cast<double>(rng.pick(-9, 9)), -0.15}}};
                auto lhs = rep.combination.eval(pt) - rep.expansion.eval(pt);
                auto rhs = rep.difference.eval(pt);
                if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, std::abs(rhs)))
                  return false;
              }
              detail = rep.pass
                           ? "difference = 0"
                           : "difference != 0 (expected 0; the two displays are "
                             "inconsistent), reported verbatim:\n     " +
                                 rep.difference.str();
              return true;  // the exact difference was computed and reported
            });

  // 4 ----------------------------------------------------------------------
  criterion(4,
            "ideal membership: reference trefoil polynomial reduces to 0 "
            "against the {c21, c22, b12} elimination basis",
            30.0, [](std::string& detail) {
              DGAlgebra T = builtin_fixture("trefoil");
              EliminationResult res = eliminate_augmentation(T, {"c21", "c22", "b12"});
              PolyIdeal I = make_ideal(res.system);
              CPoly nf = normal_form(affinize(I, trefoil_aug_reference()),
                                     res.gb.chord_free);
              CPoly nf_own = normal_form(affinize(I, res.polynomials[0].poly),
                                         res.gb.chord_free);
              std::ostringstream os;
              if (!nf.is_zero()) {
                os << "normal form of the reference polynomial is NOT zero: "
                   << laurentize(I, nf).str()
                   << "\n     (the transcribed differentials generate an ideal "
                      "containing a sign-variant polynomial instead; the "
                      "computed elimination output reduces to "
                   << (nf_own.is_zero() ? "0" : "NONZERO")
                   << " as a self-consistency check)";
              }
              detail = os.str();
              return nf.is_zero();
            });

  // 5 ----------------------------------------------------------------------
  criterion(5,
            "classical limit of the trefoil operator equals "
            "(Q - ep^2)*ep^3*ref(ex*ep^-3, ep) exactly; framing search hits r = -3",
            0.0, [](std::string& detail) {
              LaurentPoly cl = qt_classical(qt_fixture("aug_hat_trefoil"));
              int hit_r = 99;
              LaurentPoly hit_unit;
              for (int r = -5; r <= 5; ++r) {
                LaurentPoly cand =
                    (v("Q") - v("ep", 2)) *
                    trefoil_aug_reference().substitute("ex", v("ex") * v("ep", r));
                if (auto u = lp_unit_quotient(cl, cand)) {
                  hit_r = r;
                  hit_unit = *u;
                }
              }
              if (hit_r != -3) return false;
              detail = "hit at r = -3, unit = " + hit_unit.str();
              LaurentPoly target = (v("Q") - v("ep", 2)) * v("ep", 3) *
                                   trefoil_aug_reference().substitute(
                                       "ex", v("ex") * v("ep", -3));
              return hit_unit == v("ep", 3) && cl == target;
            });

  // 6 ----------------------------------------------------------------------
  criterion(6,
            "recursion self-consistency: H_1..H_10 solve the unknot operator "
            "exactly and match the product formula",
            5.0, [](std::string&) {
              QTElement U = qt_fixture("aug_hat_unknot");
              Wavefunction psi = solve_recursion(U, 10);
              auto modes = act(U, psi, checkable_modes(U, psi));
              for (const auto& r : modes)
                if (!r.is_zero()) return false;
              RatFunc h = rf_one();
              for (int m = 1; m <= 10; ++m) {
                h = h * (rf_one() + RatFunc::variable(qt_vars(), "Q") * qpow(m - 1)) /
                    (rf_one() - qpow(m));
                if (!(psi.H[static_cast<size_t>(m)] == h)) return false;
              }
              return true;
            });

  // 7 ----------------------------------------------------------------------
  criterion(7,
            "framing covariance: conjugated operators annihilate framed "
            "wavefunctions exactly through mode 8, r in {-2,-1,1,2}",
            5.0, [](std::string&) {
              QTElement U = qt_fixture("aug_hat_unknot");
              Wavefunction psi = solve_recursion(U, 10);
              for (int r : {-2, -1, 1, 2}) {
                QTElement Ur = qt_frame(U, r);
                Wavefunction psir = frame_wavefunction(psi, r);
                auto modes = act(Ur, psir, 8);
                for (const auto& m : modes)
                  if (!m.is_zero()) return false;
              }
              return true;
            });

  // 8 ----------------------------------------------------------------------
  criterion(8,
            "disk potential gradient check (unknot, Q = 2, 400 steps): "
            "traced mu < 1e-10 from closed form, max |dW/dx - p| < 1e-6, "
            "halving >= 4x",
            1.0, [](std::string& detail) {
              LaurentPoly aug =
                  k(1) - v("ex") - v("ep") - v("Q") * v("ex") * v("ep");
              BranchPath p400 = trace_branch(aug, 2.0, -3.0, unknot_mu(-3.0, 2.0),
                                             -0.5, 400);
              double worst_mu = 0.0;
              for (const auto& s : p400.samples)
                worst_mu = std::max(worst_mu, std::abs(s.mu - unknot_mu(s.x, 2.0)));
              GradientReport g400 = check_gradient(p400, disk_potential(p400));
              BranchPath p800 = trace_branch(aug, 2.0, -3.0, unknot_mu(-3.0, 2.0),
                                             -0.5, 800);
              GradientReport g800 = check_gradient(p800, disk_potential(p800));
              char buf[160];
              std::snprintf(buf, sizeof buf,
                            "mu error %.2e, gradient deviation %.2e -> %.2e "
                            "(improvement %.1fx)",
                            worst_mu, g400.max_deviation, g800.max_deviation,
                            g400.max_deviation / g800.max_deviation);
              detail = buf;
              return worst_mu < 1e-10 && g400.max_deviation < 1e-6 &&
                     g400.max_deviation / g800.max_deviation >= 4.0;
            });

  // 9 ----------------------------------------------------------------------
  criterion(9,
            "gluing-weight series at order 15 equals the exponential "
            "difference exactly",
            1.0, [](std::string&) {
              PowerSeries half = PowerSeries::variable(15, Rat(1, 2));
              return resolution_weight_series(15) == half.exp() - (-half).exp();
            });

  // 10 ---------------------------------------------------------------------
  criterion(10,
            "property suites: ring axioms, Leibniz rule, S-polynomial "
            "postcondition, qt_mul associativity, classical-limit "
            "homomorphism (1000 cases each, fixed seed)",
            60.0, [](std::string& detail) {
              int done = 0;

              {  // ring axioms
                Rng rng(1001);
                for (int i = 0; i < 1000; ++i) {
                  LaurentPoly a = testutil::random_lp(rng, dga_vars());
                  LaurentPoly b = testutil::random_lp(rng, dga_vars());
                  LaurentPoly c = testutil::random_lp(rng, dga_vars());
                  if (!((a + b) + c == a + (b + c))) return false;
                  if (!((a * b) * c == a * (b * c))) return false;
                  if (!(a * (b + c) == a * b + a * c)) return false;
                  if (!(a * b == b * a)) return false;
                }
                ++done;
              }

              {  // graded Leibniz rule
                std::map<std::string, NCElement> d;
                d["c"] = NCElement::scalar(k(1) - v("ex"));
                d["b"] = NCElement::word(dga_vars(), NCWord{{"z"}}, v("Q")) +
                         NCElement::scalar(v("ep"));
                d["e"] = NCElement::word(dga_vars(), NCWord{{"c"}}, k(1)) +
                         NCElement::word(dga_vars(), NCWord{{"b"}}, v("ex"));
                DGAlgebra A("leibniz", {{"z", 0}, {"c", 1}, {"b", 1}, {"e", 2}},
                            std::move(d));
                Rng rng(1002);
                std::vector<std::string> names = {"z", "c", "b", "e"};
                auto rand_word = [&](int maxlen) {
                  NCWord w;
                  int len = static_cast<int>(rng.pick(0, maxlen));
                  for (int i = 0; i < len; ++i)
                    w.letters.push_back(names[static_cast<size_t>(rng.pick(0, 3))]);
                  return NCElement::word(
                      dga_vars(), std::move(w),
                      testutil::random_nonzero_lp(rng, dga_vars(), 2, 1));
                };
                for (int i = 0; i < 1000; ++i) {
                  NCElement u = rand_word(3), w = rand_word(3);
                  int deg_u = A.word_degree(u.terms().begin()->first);
                  NCElement lhs = apply_d(A, nc_mul(A, u, w));
                  NCElement rhs = nc_mul(A, apply_d(A, u), w);
                  NCElement second = nc_mul(A, u, apply_d(A, w));
                  rhs = (deg_u % 2 == 0) ? rhs + second : rhs - second;
                  if (!(lhs == rhs)) return false;
                }
                ++done;
              }

              {  // Buchberger postcondition
                Rng rng(1003);
                auto ord = std::make_shared<MonoOrder>(std::vector<size_t>{3});
                for (int trial = 0; trial < 1000; ++trial) {
                  std::vector<CPoly> gens;
                  for (int g = 0; g < 2; ++g) {
                    CPoly f(ord);
                    int terms = static_cast<int>(rng.pick(1, 3));
                    for (int t = 0; t < terms; ++t) {
                      Mono m{{static_cast<int32_t>(rng.pick(0, 2)),
                              static_cast<int32_t>(rng.pick(0, 2)),
                              static_cast<int32_t>(rng.pick(0, 1))}};
                      f = f + CPoly::monomial(ord, m, rng.rat());
                    }
                    if (!f.is_zero()) gens.push_back(f);
                  }
                  if (gens.empty()) continue;
                  auto gb = buchberger(gens);
                  for (size_t i = 0; i < gb.size(); ++i)
                    for (size_t j = i + 1; j < gb.size(); ++j)
                      if (!normal_form(s_poly(gb[i], gb[j]), gb).is_zero())
                        return false;
                }
                ++done;
              }

              {  // qt_mul associativity
                Rng rng(1004);
                auto random_qt = [&rng]() {
                  QTElement A;
                  int terms = static_cast<int>(rng.pick(0, 3));
                  for (int t = 0; t < terms; ++t)
                    A += QTElement::monomial(
                        static_cast<int>(rng.pick(-2, 2)),
                        static_cast<int>(rng.pick(-2, 2)),
                        RatFunc(testutil::random_lp(rng, qt_vars(), 2, 2)));
                  return A;
                };
                for (int i = 0; i < 1000; ++i) {
                  QTElement A = random_qt(), B = random_qt(), C = random_qt();
                  if (!(qt_mul(qt_mul(A, B), C) == qt_mul(A, qt_mul(B, C))))
                    return false;
                }
                ++done;
              }

              {  // classical-limit homomorphism
                Rng rng(1005);
                auto random_qt = [&rng]() {
                  QTElement A;
                  int terms = static_cast<int>(rng.pick(0, 3));
                  for (int t = 0; t < terms; ++t)
                    A += QTElement::monomial(
                        static_cast<int>(rng.pick(-2, 2)),
                        static_cast<int>(rng.pick(-2, 2)),
                        RatFunc(testutil::random_lp(rng, qt_vars(), 2, 2)));
                  return A;
                };
                for (int i = 0; i < 1000; ++i) {
                  QTElement A = random_qt(), B = random_qt();
                  if (!(qt_classical(qt_mul(A, B)) ==
                        qt_classical(A) * qt_classical(B)))
                    return false;
                }
                ++done;
              }

              detail = std::to_string(done) + "/5 suites, 1000 cases each";
              return done == 5;
            });

  std::printf("%s: %d criterion(s) failed\n",
              failures == 0 ? "ALL PASS" : "RESULT", failures);
  return failures == 0 ? 0 : 1;
}
