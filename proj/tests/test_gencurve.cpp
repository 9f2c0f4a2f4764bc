#include <doctest.h>

#include "kch/gencurve.hpp"

using namespace kch;

namespace {

LaurentPoly s_mono(long exp, const Rat& c) {
  return LaurentPoly::monomial(gf_vars(), {static_cast<int32_t>(exp)}, c);
}

CurveCatalog one_curve(Rat w, int chi, int m, int k, int slk) {
  CurveCatalog cat;
  cat.add_curve({"u", std::move(w), chi, m, k, slk});
  return cat;
}

}  // namespace

TEST_CASE("graph_weight on single vertices") {
  CurveCatalog cat = one_curve(Rat(1), 1, 1, 0, 0);
  GFTerm t = graph_weight(cat, {"u"}, {});
  CHECK(t.coeff == s_mono(0, Rat(1)));
  CHECK(t.m == 1);
  CHECK(t.k == 0);
  CHECK(t.chi == 1);

  CurveCatalog slk1 = one_curve(Rat(3, 2), 1, 0, 0, 1);
  GFTerm t2 = graph_weight(slk1, {"u"}, {});
  CHECK(t2.coeff == s_mono(1, Rat(3, 2)));  // w * s^{slk}
}

TEST_CASE("graph_weight edges carry the linking exponent") {
  CurveCatalog cat;
  cat.add_curve({"a", Rat(2), 1, 1, 0, 0});
  cat.add_curve({"b", Rat(3), 1, 0, 1, 0});
  cat.set_linking("a", "b", 1);
  GFTerm t = graph_weight(cat, {"a", "b"}, {{0, 1}});
  CHECK(t.coeff == s_mono(2, Rat(6)));  // w_a w_b q
  CHECK(t.m == 1);
  CHECK(t.k == 1);
  CHECK(t.chi == 1);  // 1 + 1 - one edge
}

TEST_CASE("graph_weight validates the graph") {
  CurveCatalog cat;
  cat.add_curve({"a", Rat(1), 1, 0, 0, 0});
  cat.add_curve({"b", Rat(1), 1, 0, 0, 0});
  CHECK_THROWS_AS(graph_weight(cat, {"a", "zz"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(graph_weight(cat, {"a", "b"}, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(graph_weight(cat, {"a", "b"}, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(graph_weight(cat, {}, {}), std::invalid_argument);
}

TEST_CASE("graph_weight is invariant under relabeling") {
  CurveCatalog cat;
  cat.add_curve({"a", Rat(2), 1, 1, 0, 1});
  cat.add_curve({"b", Rat(3), -1, 0, 1, 2});
  cat.add_curve({"c", Rat(5, 2), 2, 2, 1, 0});
  cat.set_linking("a", "b", 2);
  cat.set_linking("b", "c", -1);
  GFTerm t1 = graph_weight(cat, {"a", "b", "c"}, {{0, 1}, {1, 2}});
  GFTerm t2 = graph_weight(cat, {"c", "a", "b"}, {{1, 2}, {2, 0}});
  CHECK(t1.coeff == t2.coeff);
  CHECK(t1.m == t2.m);
  CHECK(t1.k == t2.k);
  CHECK(t1.chi == t2.chi);
}

TEST_CASE("potential_truncated of a single curve at one vertex") {
  CurveCatalog cat = one_curve(Rat(2), 1, 1, 1, 0);
  auto terms = potential_truncated(cat, 1);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].coeff == s_mono(0, Rat(2)));
  CHECK(terms[0].m == 1);
  CHECK(terms[0].k == 1);
  CHECK(terms[0].chi == 1);
}

TEST_CASE("two identical curves carry the 1/2 symmetry factor") {
  CurveCatalog cat = one_curve(Rat(1), 1, 1, 0, 0);
  // lk(u, u) = 0 between the two copies
  cat.set_linking("u", "u", 0);
  auto terms = potential_truncated(cat, 2);
  REQUIRE(terms.size() == 2);
  // single-vertex term
  CHECK(terms[0].m == 1);
  CHECK(terms[0].chi == 1);
  CHECK(terms[0].coeff == s_mono(0, Rat(1)));
  // connected two-vertex graph: one edge, automorphism group Z/2
  CHECK(terms[1].m == 2);
  CHECK(terms[1].chi == 1);  // 1 + 1 - 1 edge
  CHECK(terms[1].coeff == s_mono(0, Rat(1, 2)));
}

TEST_CASE("two distinct curves with linking two") {
  CurveCatalog cat;
  cat.add_curve({"a", Rat(2), 1, 1, 0, 0});
  cat.add_curve({"b", Rat(3), 1, 0, 1, 0});
  cat.set_linking("a", "b", 2);
  auto terms = potential_truncated(cat, 2);
  // find the mixed 2-vertex bucket (m, k, chi) = (1, 1, 1)
  bool found = false;
  for (const auto& t : terms) {
    if (t.m == 1 && t.k == 1 && t.chi == 1) {
      CHECK(t.coeff == s_mono(4, Rat(6)));  // w_a w_b q^2
      found = true;
    }
  }
  CHECK(found);
  // identical-pair buckets carry 1/2: (2,0,1) gets w_a^2/2 = 2
  for (const auto& t : terms)
    if (t.m == 2 && t.k == 0 && t.chi == 1) CHECK(t.coeff == s_mono(0, Rat(2)));
}

TEST_CASE("potential_truncated input validation") {
  CurveCatalog cat = one_curve(Rat(1), 1, 0, 0, 0);
  CHECK_THROWS_AS(potential_truncated(cat, 0), std::invalid_argument);
  CHECK_THROWS_AS(potential_truncated(cat, 12), std::invalid_argument);
}

TEST_CASE("resolution weight series") {
  PowerSeries s1 = resolution_weight_series(1);
  CHECK(s1.str() == "gs");
  PowerSeries s5 = resolution_weight_series(5);
  CHECK(s5.str() == "gs + 1/24*gs^3 + 1/1920*gs^5");
  // even orders contribute nothing
  PowerSeries s2 = resolution_weight_series(2);
  CHECK(s2.coeff(2) == 0);
  CHECK(s2.coeff(1) == s1.coeff(1));
  CHECK_THROWS_AS(resolution_weight_series(0), std::invalid_argument);
}

TEST_CASE("weight series equals the exponential difference up to order 15") {
  for (int order = 1; order <= 15; ++order) {
    PowerSeries half = PowerSeries::variable(static_cast<size_t>(order), Rat(1, 2));
    PowerSeries expdiff = half.exp() - (-half).exp();
    CHECK(resolution_weight_series(order) == expdiff);
  }
}
