#include "kch/commands.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "kch/augment.hpp"
#include "kch/diskpot.hpp"
#include "kch/gencurve.hpp"
#include "kch/holonomic.hpp"
#include "kch/parse.hpp"
#include "kch/qtorus.hpp"
#include "kch/records.hpp"

namespace kch {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct Emitter {
  std::ostream& out;
  std::string command;
  std::string inputs;

  int emit(const std::string& status, nlohmann::json payload) const {
    ResultRecord rec{command, inputs, status, std::move(payload)};
    out << rec.dump() << "\n";
    if (status == "ok") return 0;
    if (status == "fail") return 1;
    return 2;
  }
};

std::string trace_csv(const BranchPath& path, const PotentialTable& table) {
  std::ostringstream os;
  os << "x,re_mu,im_mu,re_p,im_p,residual,W\n";
  for (size_t i = 0; i < path.samples.size(); ++i) {
    const auto& s = path.samples[i];
    os << fmt17(s.x) << "," << fmt17(s.mu.real()) << "," << fmt17(s.mu.imag())
       << "," << fmt17(s.p.real()) << "," << fmt17(s.p.imag()) << ","
       << fmt17(s.residual) << "," << fmt17(table.W[i].real()) << "\n";
  }
  return os.str();
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"exact and numeric toolkit for conormal dg-algebras, augmentation "
               "polynomials, quantum-torus operators and disk potentials"};
  app.require_subcommand(1);

  // ---- option storage -----------------------------------------------------
  std::string file, wf_file, compare_file, subset_csv, saturate_csv, csv_path;
  int frame_r = 0, modes = 10, steps = 100, max_vertices = 2, order = 15;
  double q_re = 2.0, q_im = 0.0, x_start = -3.0, x_end = -0.5;
  double seed_re = 0.0, seed_im = 0.0;
  bool gradient = false;
  TraceConfig cfg;

  auto* cd2 = app.add_subcommand("check-d2", "verify d(d(g)) = 0 for every generator");
  cd2->add_option("file", file, "algebra definition file")->required();

  auto* cgr = app.add_subcommand("check-grading", "verify each d(g) has degree deg(g) - 1");
  cgr->add_option("file", file)->required();

  auto* asys = app.add_subcommand("aug-system", "commutative system from degree-1 differentials");
  asys->add_option("file", file)->required();
  asys->add_option("--subset", subset_csv, "comma-separated degree-1 generators (default all)");

  auto* apoly = app.add_subcommand("aug-poly", "augmentation polynomials by elimination");
  apoly->add_option("file", file)->required();
  apoly->add_option("--subset", subset_csv);
  apoly->add_option("--saturate", saturate_csv, "saturate by these variables first");
  apoly->add_option("--compare", compare_file, "compare against a reference polynomial file");

  auto* vtref = app.add_subcommand("verify-trefoil",
                                   "expand the trefoil cofactor combination and compare");

  auto* clas = app.add_subcommand("classical", "classical limit s -> 1 of an operator");
  clas->add_option("file", file)->required();

  auto* fop = app.add_subcommand("frame-op", "framing conjugation of an operator");
  fop->add_option("file", file)->required();
  fop->add_option("--r", frame_r, "framing shift")->required();

  auto* actc = app.add_subcommand("act", "apply an operator to a wavefunction");
  actc->add_option("file", file)->required();
  actc->add_option("--wf", wf_file, "wavefunction file")->required();
  actc->add_option("--modes", modes, "highest mode to report (default: all checkable)");

  auto* rec = app.add_subcommand("recursion", "solve the mode recursion with seed H_0 = 1");
  rec->add_option("file", file)->required();
  rec->add_option("--modes", modes, "number of modes to solve")->required();

  auto* fwf = app.add_subcommand("frame-wf", "framing transform of a wavefunction");
  fwf->add_option("file", file)->required();
  fwf->add_option("--r", frame_r)->required();

  auto* tr = app.add_subcommand("trace", "trace an augmentation-variety branch and integrate p dx");
  tr->add_option("file", file, "polynomial file over ex, ep, Q")->required();
  tr->add_option("--Q", q_re, "Q parameter (real part)")->required();
  tr->add_option("--Qi", q_im, "Q parameter (imaginary part)");
  tr->add_option("--x-start", x_start)->required();
  tr->add_option("--x-end", x_end)->required();
  tr->add_option("--steps", steps)->required();
  tr->add_option("--seed-mu", seed_re, "seed root (real part)")->required();
  tr->add_option("--seed-mui", seed_im, "seed root (imaginary part)");
  tr->add_option("--csv", csv_path, "write samples as CSV ('-' for stdout)");
  tr->add_option("--tolerance", cfg.residual_tol, "accepted-sample residual bound");
  tr->add_flag("--gradient", gradient, "run the dW/dx vs p check");

  auto* gf = app.add_subcommand("gf", "generating function over connected simple graphs");
  gf->add_option("file", file, "curve catalog file")->required();
  gf->add_option("--max-vertices", max_vertices)->required();

  auto* magic = app.add_subcommand("magic-series", "odd gluing-weight series");
  magic->add_option("--order", order, "truncation order")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    Emitter em{out, "cli", digest(args)};
    return em.emit("error", {{"message", e.what()}});
  }

  CLI::App* sub = app.get_subcommands().front();
  Emitter em{out, sub->get_name(), ""};

  try {
    std::vector<std::string> digest_parts = {sub->get_name()};
    for (const auto& a : args) digest_parts.push_back(a);
    if (!file.empty()) digest_parts.push_back(read_file(file));
    if (!wf_file.empty()) digest_parts.push_back(read_file(wf_file));
    if (!compare_file.empty()) digest_parts.push_back(read_file(compare_file));
    em.inputs = digest(digest_parts);

    if (sub == cd2) {
      DGAlgebra A = parse_algebra_file(read_file(file));
      D2Report rep = check_d_squared(A);
      nlohmann::json fails = nlohmann::json::array();
      for (const auto& f : rep.failures)
        fails.push_back({{"generator", f.gen}, {"residual", f.residual.str()}});
      return em.emit(rep.pass() ? "ok" : "fail",
                     {{"algebra", A.name()},
                      {"pass", rep.pass()},
                      {"failures", fails}});
    }

    if (sub == cgr) {
      DGAlgebra A = parse_algebra_file(read_file(file));
      GradingReport rep = check_grading(A);
      nlohmann::json viols = nlohmann::json::array();
      for (const auto& v : rep.violations) {
        std::string word;
        for (const auto& l : v.word.letters) word += (word.empty() ? "" : "*") + l;
        viols.push_back({{"generator", v.gen},
                         {"word", word.empty() ? "1" : word},
                         {"expected", v.expected},
                         {"actual", v.actual}});
      }
      return em.emit(rep.pass() ? "ok" : "fail",
                     {{"algebra", A.name()}, {"pass", rep.pass()}, {"violations", viols}});
    }

    if (sub == asys) {
      DGAlgebra A = parse_algebra_file(read_file(file));
      PolySystem sys = subset_csv.empty()
                           ? augmentation_system(A)
                           : augmentation_system(A, split_csv(subset_csv));
      nlohmann::json eqs = nlohmann::json::array();
      for (const auto& [g, e] : sys.equations)
        eqs.push_back({{"generator", g}, {"poly", e.str()}});
      return em.emit("ok", {{"unknowns", sys.unknowns}, {"equations", eqs}});
    }

    if (sub == apoly) {
      DGAlgebra A = parse_algebra_file(read_file(file));
      EliminationResult res = eliminate_augmentation(
          A, split_csv(subset_csv), split_csv(saturate_csv));
      nlohmann::json polys = nlohmann::json::array();
      for (const auto& p : res.polynomials)
        polys.push_back({{"poly", p.poly.str()}, {"certificate", p.certificate()}});
      nlohmann::json payload = {{"polynomials", polys},
                                {"basis_size", res.gb.basis.size()},
                                {"chord_free_size", res.gb.chord_free.size()}};
      if (!compare_file.empty()) {
        LaurentPoly ref = parse_poly_file(read_file(compare_file));
        AugPolynomial ref_n = normalize_aug(ref);
        nlohmann::json cmp;
        cmp["reference"] = ref_n.poly.str();
        bool any_unit = false;
        LaurentPoly diff(dga_vars());
        if (!res.polynomials.empty()) {
          diff = res.polynomials.front().poly - ref_n.poly;
          for (const auto& p : res.polynomials)
            if (lp_unit_quotient(p.poly, ref_n.poly)) any_unit = true;
        }
        cmp["difference"] = diff.str();
        cmp["equal_up_to_unit"] = any_unit;
        payload["comparison"] = cmp;
      }
      return em.emit("ok", payload);
    }

    if (sub == vtref) {
      CombinationReport rep = verify_trefoil_combination();
      return em.emit(rep.pass ? "ok" : "fail",
                     {{"combination", rep.combination.str()},
                      {"expansion", rep.expansion.str()},
                      {"difference", rep.difference.str()},
                      {"pass", rep.pass}});
    }

    if (sub == clas) {
      QTElement A = parse_operator_file(read_file(file));
      return em.emit("ok", {{"operator", A.str()}, {"classical", qt_classical(A).str()}});
    }

    if (sub == fop) {
      QTElement A = parse_operator_file(read_file(file));
      return em.emit("ok", {{"operator", qt_frame(A, frame_r).str()}});
    }

    if (sub == actc) {
      QTElement A = parse_operator_file(read_file(file));
      Wavefunction psi = parse_wavefunction_file(read_file(wf_file));
      int kmax = actc->count("--modes") ? modes : checkable_modes(A, psi);
      if (kmax < 0) kmax = 0;
      auto rs = act(A, psi, kmax);
      nlohmann::json ms = nlohmann::json::array();
      for (const auto& r : rs) ms.push_back(r.str());
      return em.emit("ok", {{"modes", ms}, {"checkable_modes", checkable_modes(A, psi)}});
    }

    if (sub == rec) {
      QTElement A = parse_operator_file(read_file(file));
      Wavefunction psi;
      try {
        psi = solve_recursion(A, modes);
      } catch (const RecursionError& e) {
        return em.emit("fail", {{"message", e.what()}});
      }
      int kmax = checkable_modes(A, psi);
      auto rs = act(A, psi, std::max(kmax, 0));
      int verified = 0;
      for (int k = 0; k <= kmax; ++k)
        if (rs[static_cast<size_t>(k)].is_zero()) ++verified;
      nlohmann::json hs = nlohmann::json::array();
      for (const auto& h : psi.H) hs.push_back(h.str());
      return em.emit("ok", {{"H", hs}, {"verified_modes", verified}});
    }

    if (sub == fwf) {
      Wavefunction psi = parse_wavefunction_file(read_file(wf_file.empty() ? file : wf_file));
      Wavefunction framed = frame_wavefunction(psi, frame_r);
      nlohmann::json hs = nlohmann::json::array();
      for (const auto& h : framed.H) hs.push_back(h.str());
      return em.emit("ok", {{"H", hs}});
    }

    if (sub == tr) {
      LaurentPoly aug = parse_poly_file(read_file(file));
      std::complex<double> Q(q_re, q_im), seed(seed_re, seed_im);
      BranchPath path;
      try {
        path = trace_branch(aug, Q, x_start, seed, x_end, steps, cfg);
      } catch (const SeedError& e) {
        return em.emit("error", {{"message", e.what()}});
      } catch (const BranchPointError& e) {
        return em.emit("fail",
                       {{"message", e.what()}, {"samples", e.partial.samples.size()}});
      }
      PotentialTable table = disk_potential(path);
      double max_res = 0;
      for (const auto& s : path.samples) max_res = std::max(max_res, s.residual);
      nlohmann::json payload = {
          {"samples", path.samples.size()},
          {"max_residual", max_res},
          {"W_end", {table.W.back().real(), table.W.back().imag()}},
          {"quadrature_error_estimate", table.error_estimate}};
      if (gradient) {
        GradientReport g = check_gradient(path, table);
        payload["gradient"] = {{"max_deviation", g.max_deviation}, {"x", g.x}};
      }
      if (csv_path == "-") {
        out << trace_csv(path, table);
        return 0;
      }
      if (!csv_path.empty()) {
        std::ofstream f(csv_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write '" + csv_path + "'");
        f << trace_csv(path, table);
        payload["csv"] = csv_path;
      }
      return em.emit("ok", payload);
    }

    if (sub == gf) {
      CurveCatalog cat = parse_catalog_file(read_file(file));
      auto terms = potential_truncated(cat, max_vertices);
      nlohmann::json ts = nlohmann::json::array();
      for (const auto& t : terms)
        ts.push_back({{"m", t.m}, {"k", t.k}, {"chi", t.chi}, {"coeff", t.coeff.str()}});
      return em.emit("ok", {{"terms", ts}, {"symmetry_factor", "1/|Aut|"}});
    }

    if (sub == magic) {
      PowerSeries series = resolution_weight_series(order);
      PowerSeries half = PowerSeries::variable(static_cast<size_t>(order), Rat(1, 2));
      PowerSeries expdiff = half.exp() - (-half).exp();
      return em.emit("ok", {{"series", series.str()},
                            {"matches_exponential_difference", series == expdiff}});
    }

    return em.emit("error", {{"message", "unknown subcommand"}});
  } catch (const ParseError& e) {
    return em.emit("error", {{"message", e.what()}});
  } catch (const std::exception& e) {
    return em.emit("error", {{"message", e.what()}});
  }
}

}  // namespace kch
