#include "doctest.h"
#include "ncalg/comm.hpp"

using namespace ncalg;

namespace {

struct Vars {
  FieldPtr f = NumberField::rationals();
  int n;
  explicit Vars(int n) : n(n) {}
  CommPoly v(int i) const { return CommPoly::variable(f, n, i); }
  CommPoly c(long k) const { return CommPoly::constant(f, n, FieldElement(f, k)); }
};

CommIdeal ideal(std::vector<std::string> names, std::vector<CommPoly> gens) {
  CommIdeal I;
  I.variables = std::move(names);
  I.generators = std::move(gens);
  return buchberger(I);
}

}  // namespace

TEST_CASE("y - x^2, y^2 has length 4 at one point") {
  Vars V(2);
  auto x = V.v(0), y = V.v(1);
  auto I = ideal({"x", "y"}, {y - x * x, y * y});
  CHECK(quotient_dimension(I) == 4);
  CHECK(ideal_dimension(I) == 0);
  CHECK(distinct_points(I, {0, 1}) == 1);
  CHECK(reduce(x * x * x * x, I).is_zero());
  CHECK(!reduce(x * x * x, I).is_zero());
}

TEST_CASE("four reduced points") {
  Vars V(2);
  auto x = V.v(0), y = V.v(1);
  auto I = ideal({"x", "y"}, {x * x - V.c(1), y * y - V.c(1)});
  CHECK(quotient_dimension(I) == 4);
  CHECK(distinct_points(I, {0, 1}) == 4);
}

TEST_CASE("points over the algebraic closure") {
  Vars V(1);
  auto x = V.v(0);
  auto I = ideal({"x"}, {(x * x - V.c(2)) * (x * x - V.c(2)) * (x - V.c(1))});
  CHECK(quotient_dimension(I) == 5);
  CHECK(distinct_points(I, {0}) == 3);
}

TEST_CASE("positive dimension and the unit ideal") {
  Vars V(3);
  auto x = V.v(0), y = V.v(1), z = V.v(2);
  auto I = ideal({"x", "y", "z"}, {x * y, z});
  CHECK(!quotient_dimension(I).has_value());
  CHECK(ideal_dimension(I) == 1);
  auto U = ideal({"x", "y", "z"}, {x * y - V.c(1), x});
  CHECK(ideal_dimension(U) == -1);
  CHECK(quotient_dimension(U) == 0);
}

TEST_CASE("Buchberger basis reduces every generator to zero") {
  Vars V(3);
  auto x = V.v(0), y = V.v(1), z = V.v(2);
  std::vector<CommPoly> gens{x * x + y * z - V.c(2), x * y - z * z, y * y * y - x + z};
  auto I = ideal({"x", "y", "z"}, gens);
  for (const auto& g : gens) CHECK(reduce(g, I).is_zero());
  for (const auto& g : gens) CHECK(reduce(g * x + g * y * y, I).is_zero());
}

TEST_CASE("polynomial determinant") {
  Vars V(2);
  auto x = V.v(0), y = V.v(1);
  std::vector<std::vector<CommPoly>> m{{x, y}, {y, x}};
  CHECK(poly_determinant(m) == x * x - y * y);
  auto f = V.f;
  CHECK(poly_determinant(m).evaluate({FieldElement(f, 3L), FieldElement(f, 2L)}) == FieldElement(f, 5L));
}
