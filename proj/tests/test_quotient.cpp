#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "czdg/errors.hpp"
#include "czdg/parse.hpp"
#include "czdg/quotient.hpp"
#include "czdg/ring.hpp"

using namespace czdg;

namespace {

RingPtr build(const std::string& expr, int degree_bound = 0) {
  ConstructOptions opt;
  opt.degree_bound = degree_bound;
  return construct_ring(parse_ring_expr(expr), opt);
}

}  // namespace

TEST_CASE("chain ring Z4[x]/(2x, x^2 - 2)") {
  RingPtr r = build("Z4[x]/(2x, x^2 - 2)");
  CHECK(r->order() == 8);
  CHECK(is_local(*r));
  CHECK(r->labels() == std::vector<std::string>{"0", "1", "2", "3", "x", "x+1",
                                                "x+2", "x+3"});
  // x * x = 2
  const int x = 4;
  CHECK(r->mul(x, x) == 2);
  // 2 * x = 0
  CHECK(r->mul(2, x) == 0);
  CHECK(verify_ring_axioms(*r, AxiomMode::Exhaustive).ok);
}

TEST_CASE("orders of assorted quotients") {
  CHECK(build("Z2[x]/(x^2)")->order() == 4);
  CHECK(build("Z2[x]/(x^3)")->order() == 8);
  CHECK(build("Z2[x,y]/(x,y)^2")->order() == 8);
  CHECK(build("Z4[x]/(x^2)")->order() == 16);
  CHECK(build("Z8[x]/(2x, x^2)")->order() == 16);
  CHECK(build("Z4[x]/(x^2 + x + 1)")->order() == 16);
  CHECK(build("Z2[x,y,z]/(x,y,z)^2")->order() == 16);
  CHECK(build("Z9[x]/(3x, x^2 - 3)")->order() == 27);
  CHECK(build("Z3[x,y]/(x,y)^2")->order() == 27);
  CHECK(build("Z9[x]/(x^2)")->order() == 81);
  CHECK(build("Z3[x,y]/(xy, x^3, y^3, x^2 - y^2)")->order() == 81);
  CHECK(build("Z8[x,y]/(x^2, y^2, 4x, 4y, 2xy)")->order() == 256);
  // 4 = x*(2x) - 2*(x^2 - 2) lies in the ideal, collapsing Z8 to Z4
  CHECK(build("Z8[x]/(2x, x^2 - 2)")->order() == 8);
}

TEST_CASE("generators vanish and axioms hold") {
  for (const char* expr :
       {"Z4[x]/(2x, x^2 - 2)", "Z2[x,y]/(x,y)^2", "Z4[x]/(x^2)",
        "Z9[x]/(3x, x^2 - 6)", "Z4[x]/(x^2 + x + 1)",
        "Z2[t,x]/(t^2 + t + 1, x^2)", "Z2[x,y]/(x^3, xy, y^2)"}) {
    CAPTURE(expr);
    RingPtr r = build(expr);
    auto qd = r->quotient_data();
    REQUIRE(qd != nullptr);
    for (const auto& g : qd->expanded_generators)
      CHECK(evaluate_poly(*r, g, qd->variable_elements) == r->zero());
    CHECK(verify_ring_axioms(*r, AxiomMode::Exhaustive).ok);
  }
}

TEST_CASE("finiteness witness failures") {
  // y is unbounded
  CHECK_THROWS_AS(build("Z2[x,y]/(x^3, xy, x^2)"), QuotientNotFiniteError);
  CHECK_THROWS_AS(build("Z2[x,y]/(x^2)"), QuotientNotFiniteError);
  // Z4[x]/(2) is Z2[x], infinite
  CHECK_THROWS_AS(build("Z4[x]/(2)"), QuotientNotFiniteError);
}

TEST_CASE("invalid presentations") {
  // generator vanishes mod N
  CHECK_THROWS_AS(build("Z2[x]/(2x)"), InvalidPresentationError);
  // ideal contains 1
  CHECK_THROWS_AS(build("Z2[x]/(x, x + 1)"), InvalidPresentationError);
  // degree bound below the generators
  CHECK_THROWS_AS(build("Z2[x]/(x^3)", 2), InvalidPresentationError);
  ConstructOptions tiny;
  tiny.max_order = 8;
  CHECK_THROWS_AS(construct_ring(parse_ring_expr("Z4[x]/(x^2)"), tiny),
                  SizeLimitError);
  CHECK_THROWS_AS(build("Z2000000[x]/(x^2)"), SizeLimitError);
}

TEST_CASE("degree bound can be raised explicitly") {
  RingPtr a = build("Z2[x]/(x^3)");
  RingPtr b = build("Z2[x]/(x^3)", 5);
  CHECK(a->order() == b->order());
  CHECK(a->labels() == b->labels());
}

TEST_CASE("linear substitution collapses correctly") {
  // x = 1, so the quotient is Z2 itself
  RingPtr r = build("Z2[x]/(x + 1)");
  CHECK(r->order() == 2);
  // and x = 2 over Z4 gives all of Z4
  CHECK(build("Z4[x]/(x - 2)")->order() == 4);
}

TEST_CASE("labels stay canonical across equal presentations") {
  RingPtr r = build("Z9[x]/(3x, x^2 - 3)");
  std::set<std::string> labels(r->labels().begin(), r->labels().end());
  CHECK(labels.count("0") == 1);
  CHECK(labels.count("x") == 1);
  CHECK(labels.count("2x+8") == 1);
  CHECK(static_cast<int>(labels.size()) == r->order());
}
