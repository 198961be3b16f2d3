#include "doctest.h"
#include "ncalg/errors.hpp"
#include "ncalg/regcheck.hpp"
#include "support.hpp"

using namespace ncalg;
using namespace ncalg::testing;

TEST_CASE("relation matrices reproduce the relations") {
  auto D = algebra("D6");
  auto M = build_matrices(D);
  REQUIRE(M.generators() == 4);
  REQUIRE(M.relation_count() == 6);
  const auto& al = D.alphabet();
  for (int r = 0; r < 6; ++r) {
    NcPoly viaR(D.ring), viaT(D.ring);
    for (int g = 0; g < 4; ++g) {
      viaR += NcPoly::generator(D.ring, g) * M.R[g][r];
      viaT += M.T[r][g] * NcPoly::generator(D.ring, g);
    }
    CHECK(viaR == M.relations[r]);
    CHECK(viaT == M.relations[r]);
  }
  (void)al;
}

TEST_CASE("S for the first D fixture") {
  auto s = solve_S(algebra("D1"), false);
  CHECK(s.basis.size() == 1);
  CHECK(s.block_diagonal);
  REQUIRE(s.det_ratio);
  CHECK(*s.det_ratio == FieldElement(s.det_ratio->field(), -1L));
  CHECK(!determinant(s.distinguished.S).is_zero());
}

TEST_CASE("Koszul complex of the commutative polynomial ring is exact") {
  auto k3 = presentation({"x3", "x2", "x1"}, {"x3*x2 - x2*x3", "x3*x1 - x1*x3", "x2*x1 - x1*x2"});
  auto s = solve_S(k3, false);
  auto ex = check_exactness(k3, s.distinguished.S, 5);
  CHECK(ex.exact());
}

TEST_CASE("a wrong S breaks the complex") {
  auto D = algebra("Example1.1");
  auto s = solve_S(D, true);
  CHECK(check_exactness(D, s.distinguished.S, 5).exact());
  DenseMatrix bad = s.distinguished.S;
  bad[0][0] += FieldElement(D.field(), 1L);
  bad[0][1] += FieldElement(D.field(), 1L);
  auto side = check_complex(D, bad, 4, "perturbed");
  CHECK(!side.exact);
  CHECK(!side.first_failure.empty());
}

TEST_CASE("left multiplication by x1") {
  auto D = algebra("D10");
  CHECK(left_multiplication_injective(D, D.alphabet().letter("x1"), 5));
  auto Z = presentation({"x2", "x1"}, {"x1^2"});
  CHECK(!left_multiplication_injective(Z, Z.alphabet().letter("x1"), 3));
}

TEST_CASE("normalizing sequences") {
  const auto& f = fixture("D2");
  auto D = instantiate(f);
  auto pm = resolve_parameters(f);
  std::vector<NcPoly> seq;
  for (const auto& s : f.expect.normalizing_sequence) seq.push_back(parse_ncpoly(s, D.ring, pm));
  auto rep = check_normalizing_sequence(D, seq, 8);
  CHECK(rep.enough_normal);
  CHECK(rep.quotient_hilbert.dims == std::vector<long>{1, 4, 6, 4, 1, 0, 0, 0, 0});
  CHECK(rep.vanishes_from == 5);
}

TEST_CASE("order matters: x4*x3 - x3*x4 is not normal too early") {
  const auto& f = fixture("D3");
  auto D = instantiate(f);
  auto pm = resolve_parameters(f);
  std::vector<NcPoly> seq;
  for (const char* s : {"x2^2", "x1^2", "x4*x3 - x3*x4", "x2*x1 - a23^-2*x1*x2"}) seq.push_back(parse_ncpoly(s, D.ring, pm));
  try {
    (void)check_normalizing_sequence(D, seq, 6);
    FAIL("expected NotNormalAtStage");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNormalAtStage);
  }
}

TEST_CASE("regularity verdicts") {
  auto v = regularity_verdict(algebra("Example1.1"), 5);
  CHECK(v.regular);
  auto k4 = presentation({"x4", "x3", "x2", "x1"}, {"x4*x3 - x3*x4", "x4*x2 - x2*x4", "x4*x1 - x1*x4",
                                                     "x3*x2 - x2*x3", "x3*x1 - x1*x3", "x2*x1 - x1*x2"});
  auto w = regularity_verdict(k4, 5);
  CHECK(!w.regular);  // regular, but not of type A
  for (const auto& l : w.lines)
    if (l.name == "exactness") CHECK(l.pass);
  auto A = algebra("A13");
  CHECK(regularity_verdict(A, 5).regular);
}
