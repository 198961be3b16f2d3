#include <random>

#include "doctest.h"
#include "ncalg/algebra.hpp"
#include "ncalg/errors.hpp"
#include "ncalg/points.hpp"
#include "ncalg/regcheck.hpp"
#include "support.hpp"

using namespace ncalg;
using namespace ncalg::testing;

TEST_CASE("pushout of the Clifford example") {
  auto A = presentation({"x3", "x2", "x1"}, {"x3^2 - x1*x2 - x2*x1", "x3*x1 + x1*x3", "x3*x2 + x2*x3"});
  auto B = presentation({"x4", "x2", "x1"}, {"x4^2 - x1*x2 - x2*x1", "x4*x1 + x1*x4", "x4*x2 + x2*x4"});
  auto C = presentation({"x2", "x1"}, {"x2^2*x1 - x1*x2^2", "x2*x1^2 - x1^2*x2"});
  auto res = pushout({A, B, C, {"x2", "x1"}});
  CHECK(res.D.alphabet().names_descending() == std::vector<std::string>{"x4", "x3", "x2", "x1"});
  CHECK(res.D.relations.size() == 6);
  CHECK(same_relation_span(res.D, algebra("Example1.1")));
}

TEST_CASE("pushout rejects a C that is not a subalgebra") {
  auto A = presentation({"x3", "x2", "x1"}, {"x3^2 - x1*x2 - x2*x1", "x3*x1 + x1*x3", "x3*x2 + x2*x3"});
  auto B = presentation({"x4", "x2", "x1"}, {"x4^2 - x1*x2 - x2*x1", "x4*x1 + x1*x4", "x4*x2 + x2*x4"});
  auto C = presentation({"x2", "x1"}, {"x2*x1 - x1*x2"});
  CHECK_THROWS_AS(pushout({A, B, C, {"x2", "x1"}}), Error);
}

TEST_CASE("type A shape and structural screens on every D fixture") {
  for (const Fixture* f : fixtures_of_kind("D")) {
    CAPTURE(f->label);
    auto D = instantiate(*f);
    auto t = is_type_A_shape(D);
    CHECK(t.ok);
    CHECK(t.quadratic.size() == 6);
    CHECK(t.cubic.size() == 2);
    CHECK(degree3_dimension_test(D) == 20);
    CHECK(!detect_infinite_gk(D));
  }
}

TEST_CASE("a presentation without the x4^2 term grows too fast") {
  auto D = presentation({"x4", "x3", "x2", "x1"},
                        {"x3^2 - x1*x2 - x2*x1", "x3*x1 + x1*x3", "x3*x2 + x2*x3", "x1*x4 - x1*x2 - x2*x1",
                         "x4*x1 + x1*x4", "x4*x2 + x2*x4"});
  CHECK(detect_infinite_gk(D));
  CHECK(!is_type_A_shape(D).ok);
}

TEST_CASE("monomial algebra with u1 = x2*x1*x2") {
  auto D = presentation({"x4", "x3", "x2", "x1"},
                        {"x3^2", "x3*x2", "x3*x1", "x4^2", "x4*x2", "x4*x1", "x2*x1*x2", "x2*x1^2"});
  CHECK(brute_force_dimension(D.ring, D.relations, 4) == 34);
  auto good = presentation({"x4", "x3", "x2", "x1"},
                           {"x3^2", "x3*x2", "x3*x1", "x4^2", "x4*x2", "x4*x1", "x2^2*x1", "x2*x1^2"});
  auto h = hilbert_function(complete(good.ring, good.relations, 5).system, 5).dims;
  CHECK(h == std::vector<long>{1, 4, 10, 20, 35, 56});
}

TEST_CASE("linear changes and opposites") {
  auto D = algebra("D1");
  auto f = D.field();
  auto L = LinearChange::monomial({0, 1, 2, 3}, {FieldElement(f, -1L), FieldElement(f, 1L), FieldElement(f, 1L),
                                                 FieldElement(f, 1L)});
  CHECK(same_relation_span(apply_change(opposite(D), L), D));
  CHECK(opposite_iso_by_negating_x1(D));
  auto Z = LinearChange::identity(f, 4);
  Z.matrix[0][0] = FieldElement(f, 0L);
  CHECK_THROWS_AS(apply_change(D, Z), Error);
  CHECK(same_relation_span(opposite(opposite(D)), D));
}

TEST_CASE("x1 -> -x1 is not always an opposite isomorphism") {
  // r2 = x3*x1 - a23*x1*x3 turns into x3*x1 - a23^-1*x1*x3 in the opposite.
  auto D = algebra("D3");
  CHECK(!opposite_iso_by_negating_x1(D));
  CHECK(regularity_verdict(D, 4).regular);
}

TEST_CASE("A04 generic conditions") {
  auto Q = NumberField::rationals();
  auto e = [&](long v) { return FieldElement(Q, v); };
  auto clifford = a04_generic_check({e(0), e(1), e(0), e(0), e(0), e(0), e(0)});
  CHECK(clifford.verdict);
  CHECK(!a04_generic_check({e(0), e(0), e(0), e(0), e(0), e(0), e(0)}).verdict);
  auto P = a04_presentation({e(0), e(1), e(0), e(0), e(0), e(0), e(0)});
  CHECK(P.generator_count() == 3);
  CHECK(same_relation_span(quadratic_part(P), algebra("A04")));
}
