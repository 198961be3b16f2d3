#include "doctest.h"
#include "ncalg/errors.hpp"
#include "ncalg/parse.hpp"

using namespace ncalg;

namespace {

RingPtr ring4() { return make_ring({"x4", "x3", "x2", "x1"}, NumberField::rationals()); }

}  // namespace

TEST_CASE("deglex order with x4 > x3 > x2 > x1") {
  auto R = ring4();
  const auto& al = *R->alphabet;
  CHECK(al.letter("x1") == 0);
  CHECK(al.letter("x4") == 3);
  auto w = [&](const char* s) { return parse_ncpoly(s, R).leading_term().first; };
  CHECK(w("x2*x1") > w("x1*x2"));
  CHECK(w("x2^2*x1") > w("x2*x1*x2"));
  CHECK(w("x2*x1*x2") > w("x2*x1^2"));
  CHECK(w("x1^3") > w("x4^2"));
  CHECK(parse_ncpoly("x1*x2 + x2*x1 + x3^2", R).leading_term().first == w("x3^2"));
}

TEST_CASE("products do not commute") {
  auto R = ring4();
  auto a = parse_ncpoly("x1 + x2", R);
  auto sq = a * a;
  CHECK(sq.size() == 4);
  CHECK(sq == parse_ncpoly("x1^2 + x1*x2 + x2*x1 + x2^2", R));
  CHECK(parse_ncpoly("x1", R) * parse_ncpoly("x2", R) != parse_ncpoly("x2", R) * parse_ncpoly("x1", R));
  CHECK((sq - sq).is_zero());
}

TEST_CASE("rendering round-trips") {
  auto F = std::make_shared<const NumberField>(std::vector<Rational>{1, -1, 1}, "t");
  auto R = make_ring({"x3", "x2", "x1"}, F);
  for (const char* s : {"x3^2 - x2*x1 + t*x1*x2", "x3*x1 - 2*x2^2 + (t - 1)*x1*x3", "1/3*x1^3 - x2*x1*x2"}) {
    auto p = parse_ncpoly(s, R);
    CHECK(parse_ncpoly(p.to_string(), R) == p);
  }
}

TEST_CASE("parameters and negative powers") {
  auto R = ring4();
  ParameterMap pm{{"a23", FieldElement(R->field, 2L)}, {"c2", FieldElement(R->field, 3L)}};
  auto p = parse_ncpoly("x3^2 - x2*x1 - c2*a23^-2*x1*x2", R, pm);
  CHECK(p == parse_ncpoly("x3^2 - x2*x1 - 3/4*x1*x2", R));
  CHECK(parse_scalar("a23^2 - c2*a23^-2", R->field, pm) == FieldElement(R->field, Rational(13, 4)));
}

TEST_CASE("parse errors carry the offset") {
  auto R = ring4();
  try {
    (void)parse_ncpoly("x1 + * x2", R);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
  }
  CHECK_THROWS_AS(parse_ncpoly("x1*y7", R), ParseError);
  CHECK_THROWS_AS(parse_ncpoly("(x1 + x2", R), ParseError);
  CHECK_THROWS_AS(parse_scalar("x1", R->field), ParseError);
}

TEST_CASE("reversal and sandwich") {
  auto R = ring4();
  auto p = parse_ncpoly("x3*x1 - 2*x1*x2*x4", R);
  CHECK(p.reversed() == parse_ncpoly("x1*x3 - 2*x4*x2*x1", R));
  auto x1 = parse_ncpoly("x1", R).leading_term().first;
  CHECK(p.sandwich(x1, x1) == parse_ncpoly("x1*x3*x1^2 - 2*x1^2*x2*x4*x1", R));
}
