#include <set>

#include "doctest.h"
#include "ncalg/errors.hpp"
#include "ncalg/points.hpp"
#include "support.hpp"

using namespace ncalg;
using namespace ncalg::testing;

namespace {

ProjectivePoint unit(const AlgebraPresentation& P, const char* name) {
  return ProjectivePoint::unit(P.field(), P.generator_count(), P.alphabet().letter(name));
}

}  // namespace

TEST_CASE("the alternating e3, e4 point modules") {
  for (const Fixture* f : fixtures_of_kind("D")) {
    CAPTURE(f->label);
    auto D = instantiate(*f);
    auto e3 = unit(D, "x3"), e4 = unit(D, "x4");
    CHECK(verify_point_sequence(D, {e3, e4, e3, e4, e3, e4}));
    CHECK(verify_point_sequence(D, {e4, e3, e4, e3, e4, e3}));
    CHECK(!verify_point_sequence(D, {e3, e3}));
  }
}

TEST_CASE("bilinear forms") {
  auto D = algebra("Example1.1");
  auto sys = multilinearize(D);
  CHECK(sys.arity == 2);
  auto e3 = unit(D, "x3"), e1 = unit(D, "x1");
  // r1 = x3^2 - ..., so r1(e3, e3) = 1.
  CHECK(sys.evaluate(0, {e3, e3}).is_one());
  auto M = sys.right_matrix(e1);
  auto N = sys.left_matrix(e1);
  CHECK(M.size() == 6);
  CHECK(N.size() == 6);
}

TEST_CASE("the point map stays on the scheme") {
  for (const Fixture* f : fixtures_of_kind("A")) {
    CAPTURE(f->label);
    auto A = instantiate(*f);
    auto eq = point_scheme_equation(A);
    auto pts = sample_scheme_points(A, 12, 5);
    CHECK(!pts.empty());
    for (const auto& p : pts) {
      CHECK(eq.evaluate(p.coords).is_zero());
      try {
        auto q = next_point(A, p);
        CHECK(eq.evaluate(q.coords).is_zero());
        CHECK(previous_point(A, q) == p);
        CHECK(verify_point_sequence(A, {p, q}));
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RankDeficient);
      }
    }
  }
}

TEST_CASE("sigma preserves the scheme identically") {
  for (const Fixture* f : fixtures_of_kind("A")) {
    CAPTURE(f->label);
    CHECK(sigma_preserves_scheme(instantiate(*f)));
  }
  // Generic relations: the two projections of the graph are different cubics.
  auto G = presentation({"x3", "x2", "x1"}, {"x3*x1 - 2*x1*x3 + x2^2 + x1*x2", "x3*x2 - x2*x1 + 3*x3^2 - x1^2",
                                             "x2*x3 + x1*x1 - 5*x3*x1 + x2*x1"});
  CHECK(!sigma_preserves_scheme(G));
}

TEST_CASE("points off the scheme are rejected") {
  auto A = algebra("A13");
  auto f = A.field();
  auto p = ProjectivePoint::make({FieldElement(f, 1L), FieldElement(f, 2L), FieldElement(f, 5L)});
  REQUIRE(!point_scheme_equation(A).evaluate(p.coords).is_zero());
  try {
    (void)next_point(A, p);
    FAIL("expected NotOnScheme");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOnScheme);
  }
}

TEST_CASE("no (A,notC) modules for the listed A algebras") {
  for (const Fixture* f : fixtures_of_kind("A")) {
    CAPTURE(f->label);
    CHECK(classify_AnotC(instantiate(*f), 6).empty());
  }
  // In the polynomial ring every point is fixed, e3 included.
  auto P = presentation({"x3", "x2", "x1"}, {"x3*x2 - x2*x3", "x3*x1 - x1*x3", "x2*x1 - x1*x2"});
  auto orbit = classify_AnotC(P, 4);
  REQUIRE(orbit.size() == 1);
  CHECK(orbit[0] == ProjectivePoint::unit(P.field(), 3, P.alphabet().letter("x3")));
}

TEST_CASE("splitting a D into its A and B parts") {
  auto D = algebra("D6");
  auto [A, B] = split_type_A(D);
  CHECK(A.alphabet().names_descending() == std::vector<std::string>{"x3", "x2", "x1"});
  CHECK(B.alphabet().names_descending() == std::vector<std::string>{"x4", "x2", "x1"});
  CHECK(A.relations.size() == 3);
  CHECK(B.relations.size() == 3);
}

TEST_CASE("compatible pairs for D10") {
  auto [A, B] = split_type_A(algebra("D10"));
  auto c = compatible_pair_count(A, B);
  CHECK(!c.infinite);
  CHECK(c.distinct == 10);
  CHECK(c.multiplicity == 18);
}

TEST_CASE("compatible pairs for D2 form curves") {
  auto [A, B] = split_type_A(algebra("D2"));
  auto c = compatible_pair_count(A, B);
  CHECK(c.infinite);
  CHECK(c.detail.find("positive-dimensional") != std::string::npos);
}
