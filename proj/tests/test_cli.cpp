#include <doctest.h>

#include <fstream>
#include <sstream>

#include "kch/augment.hpp"
#include "kch/commands.hpp"
#include "kch/parse.hpp"
#include "kch/records.hpp"

using namespace kch;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(KCH_FIXTURE_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string fixture_path(const std::string& name) {
  return std::string(KCH_FIXTURE_DIR) + "/" + name;
}

std::pair<int, std::string> run(const std::vector<std::string>& args) {
  std::ostringstream out;
  int code = run_command(args, out);
  return {code, out.str()};
}

}  // namespace

TEST_CASE("algebra files parse to the builtin fixtures") {
  DGAlgebra u = parse_algebra_file(fixture("unknot.alg"));
  CHECK(u == builtin_fixture("unknot"));
  CHECK(u.name() == "unknot");
  DGAlgebra t = parse_algebra_file(fixture("trefoil.alg"));
  CHECK(t == builtin_fixture("trefoil"));
}

TEST_CASE("operator files parse to the builtin fixtures") {
  CHECK(parse_operator_file(fixture("aug_hat_unknot.op")) == qt_fixture("aug_hat_unknot"));
  CHECK(parse_operator_file(fixture("aug_hat_trefoil.op")) == qt_fixture("aug_hat_trefoil"));
}

TEST_CASE("operator expressions normal-order on read") {
  QTElement pe = parse_operator_file("Ep*Ex");
  REQUIRE(pe.term_count() == 1);
  CHECK(pe.coeff(1, 1) ==
        RatFunc(LaurentPoly::monomial(qt_vars(), {2, 0}, Rat(1))));
  CHECK(parse_operator_file("Ex^-1*Ex") == QTElement::one());
  CHECK(parse_operator_file("(1 - Ex)*(1 + Ex)") ==
        parse_operator_file("1 - Ex^2"));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_algebra_file("algebra bad\ngenerator c degree 1\nd c = ex + unknown_gen\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("unknown_gen") != std::string::npos);
    CHECK(e.line == 3);
  }
  CHECK_THROWS_AS(parse_algebra_file("generator c degree -1\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("generator c degree 1\nd c = ex ^ ep\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("generator c degree 1\nd q = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_operator_file("Ex + $"), ParseError);
  CHECK_THROWS_AS(parse_poly_file("1/(1 - ex)"), ParseError);
}

TEST_CASE("poly parse/print round trip") {
  for (auto name : {"unknot_aug.poly", "trefoil_aug.poly", "aug_u_reference.poly"}) {
    LaurentPoly p = parse_poly_file(fixture(name));
    LaurentPoly q = parse_poly_file(p.str());
    CHECK(p == q);
    CHECK(p.str() == q.str());
  }
}

TEST_CASE("algebra and operator files round trip through the renderer") {
  for (auto name : {"unknot.alg", "trefoil.alg"}) {
    DGAlgebra a = parse_algebra_file(fixture(name));
    std::string rendered = algebra_file_string(a);
    DGAlgebra b = parse_algebra_file(rendered);
    CHECK(a == b);
    CHECK(algebra_file_string(b) == rendered);
  }
  for (auto name : {"aug_hat_unknot.op", "aug_hat_trefoil.op"}) {
    QTElement a = parse_operator_file(fixture(name));
    QTElement b = parse_operator_file(a.str());
    CHECK(a == b);
    CHECK(a.str() == b.str());
  }
}

TEST_CASE("wavefunction files parse") {
  Wavefunction psi = parse_wavefunction_file("1\n(1 + Q)/(1 - s^2)\n# tail\n");
  REQUIRE(psi.H.size() == 2);
  CHECK(psi.normalized());
  CHECK(psi.H[1].str() == "(1 + Q)/(1 - s^2)");
}

TEST_CASE("catalog files parse") {
  CurveCatalog cat = parse_catalog_file(fixture("sample.cat"));
  CHECK(cat.curves().size() == 2);
  CHECK(cat.curve("u2").weight == Rat(1, 2));
  CHECK(cat.linking("u1", "u2") == 1);
  CHECK(cat.linking("u2", "u1") == 1);
  CHECK_THROWS_AS(parse_catalog_file("curve a w=oops\n"), ParseError);
  CHECK_THROWS_AS(parse_catalog_file("link a b 1\n"), ParseError);
}

TEST_CASE("result records round trip") {
  ResultRecord rec{"check-d2", "0123456789abcdef", "ok", {{"pass", true}}};
  ResultRecord back = ResultRecord::from_json(nlohmann::json::parse(rec.dump()));
  CHECK(back.command == rec.command);
  CHECK(back.inputs_digest == rec.inputs_digest);
  CHECK(back.status == rec.status);
  CHECK(back.payload == rec.payload);
  CHECK(back.to_json() == rec.to_json());
}

TEST_CASE("cli: verification subcommands and exit codes") {
  auto [c1, out1] = run({"check-d2", fixture_path("trefoil.alg")});
  CHECK(c1 == 0);
  CHECK(out1.find("\"status\":\"ok\"") != std::string::npos);

  auto [c2, out2] = run({"check-grading", fixture_path("unknot.alg")});
  CHECK(c2 == 0);

  // the combination defect makes verify-trefoil a verification failure
  auto [c3, out3] = run({"verify-trefoil"});
  CHECK(c3 == 1);
  CHECK(out3.find("\"pass\":false") != std::string::npos);
  CHECK(out3.find("difference") != std::string::npos);

  auto [c4, out4] = run({"check-d2", fixture_path("missing.alg")});
  CHECK(c4 == 2);

  auto [c5, out5] = run({"nonsense"});
  CHECK(c5 == 2);
}

TEST_CASE("cli: aug-poly with comparison record") {
  auto [code, out] = run({"aug-poly", fixture_path("unknot.alg"), "--compare",
                          fixture_path("aug_u_reference.poly")});
  CHECK(code == 0);
  CHECK(out.find("1 - ex - ep - Q*ex*ep") != std::string::npos);
  CHECK(out.find("-2*Q*ex*ep") != std::string::npos);
  CHECK(out.find("\"equal_up_to_unit\":false") != std::string::npos);
}

TEST_CASE("cli: subset elimination") {
  auto [code, out] = run({"aug-poly", fixture_path("trefoil.alg"), "--subset",
                          "c21,c22,b12"});
  CHECK(code == 0);
  nlohmann::json j = nlohmann::json::parse(out);
  auto polys = j["payload"]["polynomials"];
  REQUIRE(polys.size() == 1);
  DGAlgebra T = builtin_fixture("trefoil");
  EliminationResult res = eliminate_augmentation(T, {"c21", "c22", "b12"});
  CHECK(polys[0]["poly"].get<std::string>() == res.polynomials[0].poly.str());
}

TEST_CASE("cli: operator pipeline") {
  auto [c1, out1] = run({"classical", fixture_path("aug_hat_unknot.op")});
  CHECK(c1 == 0);
  CHECK(out1.find("\"classical\":\"1 - ex - ep - Q*ex*ep\"") != std::string::npos);

  auto [c2, out2] = run({"recursion", fixture_path("aug_hat_unknot.op"), "--modes", "4"});
  CHECK(c2 == 0);
  CHECK(out2.find("(1 + Q)/(1 - s^2)") != std::string::npos);
  CHECK(out2.find("\"verified_modes\":5") != std::string::npos);

  // trefoil operator has no one-sided solution from seed H_0 = 1
  auto [c3, out3] = run({"recursion", fixture_path("aug_hat_trefoil.op"), "--modes", "3"});
  CHECK(c3 == 1);

  auto [c4, out4] = run({"frame-op", fixture_path("aug_hat_unknot.op"), "--r", "1"});
  CHECK(c4 == 0);
  CHECK(out4.find("s^2*Ex*Ep^2") != std::string::npos);
}

TEST_CASE("cli: act on a wavefunction file") {
  // H_0..H_2 of the unknot wavefunction, written as expressions
  std::string wf_path = "/tmp/kch_test_unknot.wf";
  {
    std::ofstream f(wf_path);
    f << "1\n(1 + Q)/(1 - s^2)\n((1 + Q)*(1 + s^2*Q))/((1 - s^2)*(1 - s^4))\n";
  }
  auto [code, out] = run({"act", fixture_path("aug_hat_unknot.op"), "--wf", wf_path});
  CHECK(code == 0);
  nlohmann::json j = nlohmann::json::parse(out);
  auto modes = j["payload"]["modes"];
  REQUIRE(modes.size() == 3);  // checkable modes 0..2
  for (const auto& m : modes) CHECK(m.get<std::string>() == "0");
}

TEST_CASE("cli: trace emits csv and gradient report") {
  auto [code, out] = run({"trace", fixture_path("unknot_aug.poly"), "--Q", "2",
                          "--x-start", "-3", "--x-end", "-0.5", "--steps", "64",
                          "--seed-mu", "0.86416449776911275", "--gradient",
                          "--csv", "-"});
  CHECK(code == 0);
  CHECK(out.substr(0, 34) == "x,re_mu,im_mu,re_p,im_p,residual,W");
  // 65 samples + header
  size_t lines = static_cast<size_t>(std::count(out.begin(), out.end(), '\n'));
  CHECK(lines == 66);

  auto [c2, rec] = run({"trace", fixture_path("unknot_aug.poly"), "--Q", "2",
                        "--x-start", "-3", "--x-end", "-0.5", "--steps", "64",
                        "--seed-mu", "0.86416449776911275", "--gradient"});
  CHECK(c2 == 0);
  CHECK(rec.find("\"gradient\"") != std::string::npos);

  auto [c3, rec3] = run({"trace", fixture_path("unknot_aug.poly"), "--Q", "2",
                         "--x-start", "-3", "--x-end", "-0.5", "--steps", "16",
                         "--seed-mu", "0.5"});
  CHECK(c3 == 2);  // bad seed is an input error
}

TEST_CASE("cli: gf and magic-series") {
  auto [c1, out1] = run({"gf", fixture_path("sample.cat"), "--max-vertices", "2"});
  CHECK(c1 == 0);
  CHECK(out1.find("\"terms\"") != std::string::npos);
  auto [c2, out2] = run({"magic-series", "--order", "5"});
  CHECK(c2 == 0);
  CHECK(out2.find("gs + 1/24*gs^3 + 1/1920*gs^5") != std::string::npos);
  CHECK(out2.find("\"matches_exponential_difference\":true") != std::string::npos);
}

TEST_CASE("cli output is byte-deterministic") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"check-d2", fixture_path("trefoil.alg")},
           {"aug-poly", fixture_path("unknot.alg")},
           {"verify-trefoil"},
           {"recursion", fixture_path("aug_hat_unknot.op"), "--modes", "6"},
           {"trace", fixture_path("unknot_aug.poly"), "--Q", "2", "--x-start", "-3",
            "--x-end", "-0.5", "--steps", "32", "--seed-mu", "0.86416449776911275",
            "--csv", "-"}}) {
    auto [c1, out1] = run(args);
    auto [c2, out2] = run(args);
    CHECK(c1 == c2);
    CHECK(out1 == out2);
  }
}
