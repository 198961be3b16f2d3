#include <random>

#include "doctest.h"
#include "ncalg/coeff.hpp"
#include "ncalg/errors.hpp"

using namespace ncalg;

namespace {

FieldPtr field_of(std::vector<Rational> mp) { return std::make_shared<const NumberField>(std::move(mp), "t"); }

FieldElement random_element(const FieldPtr& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> c;
  for (int i = 0; i < f->degree(); ++i) c.emplace_back(num(rng), den(rng));
  for (auto& x : c) x.canonicalize();
  return FieldElement(f, c);
}

}  // namespace

TEST_CASE("rational arithmetic") {
  auto Q = NumberField::rationals();
  FieldElement a(Q, Rational(1, 2)), b(Q, Rational(1, 3));
  CHECK((a + b) == FieldElement(Q, Rational(5, 6)));
  CHECK((a * b) == FieldElement(Q, Rational(1, 6)));
  CHECK((a / b) == FieldElement(Q, Rational(3, 2)));
  CHECK(FieldElement(Q, -2L).pow(-3) == FieldElement(Q, Rational(-1, 8)));
}

TEST_CASE("gaussian rationals") {
  auto F = field_of({1, 0, 1});
  auto i = FieldElement::generator(F);
  CHECK(i * i == FieldElement(F, -1L));
  auto z = FieldElement(F, 1L) + i;
  CHECK(z.inverse() == (FieldElement(F, 1L) - i) / FieldElement(F, 2L));
  CHECK(i.pow(4).is_one());
}

TEST_CASE("sixth root of unity") {
  auto F = field_of({1, -1, 1});
  auto w = FieldElement::generator(F);
  CHECK(w.pow(3) == FieldElement(F, -1L));
  CHECK(w.pow(6).is_one());
  CHECK(w.inverse() == FieldElement(F, 1L) - w);
}

TEST_CASE("inverses in Q(t), t^4 = -1") {
  auto F = field_of({1, 0, 0, 0, 1});
  std::mt19937 rng(7);
  for (int k = 0; k < 50; ++k) {
    auto x = random_element(F, rng);
    if (x.is_zero()) continue;
    CHECK((x * x.inverse()).is_one());
    auto y = random_element(F, rng);
    CHECK((x * y) / x == y);
  }
}

TEST_CASE("division by zero and mixed fields") {
  auto Q = NumberField::rationals();
  CHECK_THROWS_AS(FieldElement(Q, 0L).inverse(), Error);
  try {
    (void)FieldElement(Q, 0L).inverse();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
  auto F = field_of({1, 0, 1});
  try {
    (void)(FieldElement(Q, 1L) + FieldElement(F, 1L));
    FAIL("expected MixedFields");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MixedFields);
  }
}

TEST_CASE("root fields") {
  auto w = make_root_field("p^2-p+1=0");
  CHECK((w.root * w.root - w.root + FieldElement(w.field, 1L)).is_zero());
  try {
    (void)make_root_field("p^2=1");
    FAIL("expected a branch requirement");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ReducibleRequiresBranch);
  }
  auto m = make_root_field("p^2=1", RootBranch::minus_one);
  CHECK(m.field->is_rational());
  CHECK(m.root == FieldElement(m.field, -1L));
  auto i = make_root_field("p^4=1", RootBranch::plus_i);
  CHECK(i.root * i.root == FieldElement(i.field, -1L));
  CHECK(i.root.pow(4).is_one());
}

TEST_CASE("coefficient literals") {
  auto F = field_of({1, 0, 1});
  auto x = parse_coefficient("1/2*t - 3", F);
  CHECK(x == FieldElement(F, std::vector<Rational>{-3, Rational(1, 2)}));
  CHECK(parse_coefficient(x.to_string(), F) == x);
  CHECK(parse_coefficient("-t^3", F) == FieldElement::generator(F));
  CHECK_THROWS_AS(parse_coefficient("1/", F), ParseError);
}
